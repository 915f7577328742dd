#include "graphfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace graphfactor {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw std::invalid_argument("VertexSet: duplicate vertex id");
    if (!ids_.empty() && ids_.front() < 0)
        throw std::invalid_argument("VertexSet: negative vertex id");
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<int> ids;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1) ids.push_back(v);
    return VertexSet(std::move(ids));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (int v : ids_) {
        if (v >= 64) throw std::invalid_argument("VertexSet::mask: id >= 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

Multigraph::Multigraph(int n, const std::vector<std::tuple<int, int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Multigraph: negative order");
    edges_.reserve(edges.size());
    for (const auto& [a, b, m] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("Multigraph: endpoint out of range");
        if (m < 1 || m > (1 << 20)) throw std::invalid_argument("Multigraph: bad multiplicity");
        edges_.push_back({std::min(a, b), std::max(a, b), m});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
    // merge parallel classes
    std::size_t out = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (out > 0 && edges_[out - 1].u == edges_[i].u && edges_[out - 1].v == edges_[i].v) {
            if ((edges_[out - 1].mult += edges_[i].mult) > (1 << 20))
                throw std::invalid_argument("Multigraph: multiplicity overflow");
        } else {
            edges_[out++] = edges_[i];
        }
    }
    edges_.resize(out);
    build_caches();
}

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges)
    : Multigraph(n, [&] {
          std::vector<std::tuple<int, int, int>> with_mult;
          with_mult.reserve(edges.size());
          for (auto [a, b] : edges) with_mult.emplace_back(a, b, 1);
          return with_mult;
      }()) {}

void Multigraph::build_caches() {
    degree_.assign(n_, 0);
    total_mult_ = 0;
    simple_ = true;
    for (const Edge& e : edges_) {
        total_mult_ += e.mult;
        if (e.is_loop()) {
            degree_[e.u] += 2 * e.mult;
            simple_ = false;
        } else {
            degree_[e.u] += e.mult;
            degree_[e.v] += e.mult;
            if (e.mult > 1) simple_ = false;
        }
    }
    // CSR over distinct non-loop neighbors; edges_ is sorted so each
    // vertex's list comes out sorted.
    std::vector<int> counts(n_, 0);
    for (const Edge& e : edges_)
        if (!e.is_loop()) {
            ++counts[e.u];
            ++counts[e.v];
        }
    adj_offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + counts[v];
    adj_.assign(adj_offsets_[n_], 0);
    std::vector<int> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const Edge& e : edges_)
        if (!e.is_loop()) {
            adj_[fill[e.u]++] = e.v;
            adj_[fill[e.v]++] = e.u;
        }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
    if (n_ <= 64) {
        adj_mask_.assign(n_, 0);
        for (const Edge& e : edges_)
            if (!e.is_loop()) {
                adj_mask_[e.u] |= std::uint64_t{1} << e.v;
                adj_mask_[e.v] |= std::uint64_t{1} << e.u;
            }
    }
}

int Multigraph::degree(int v) const {
    if (!has_vertex(v)) throw std::invalid_argument("degree: vertex out of range");
    return degree_[v];
}

int Multigraph::multiplicity(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("multiplicity: vertex out of range");
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, 0},
                               [](const Edge& a, const Edge& b) {
                                   return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return it->mult;
    return 0;
}

std::vector<EdgeInstance> Multigraph::edge_instances() const {
    std::vector<EdgeInstance> out;
    out.reserve(static_cast<std::size_t>(total_mult_));
    for (const Edge& e : edges_)
        for (int k = 0; k < e.mult; ++k) out.push_back({e.u, e.v, k});
    return out;
}

std::string Multigraph::replay_text() const {
    std::ostringstream os;
    os << n_;
    for (const Edge& e : edges_) {
        os << "; " << e.u << ' ' << e.v;
        if (e.mult != 1) os << ' ' << e.mult;
    }
    return os.str();
}

std::vector<std::vector<int>> components(const Multigraph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        comp[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            blocks[id].push_back(v);
            for (const int* w = g.neighbors_begin(v); w != g.neighbors_end(v); ++w)
                if (comp[*w] == -1) {
                    comp[*w] = id;
                    stack.push_back(*w);
                }
        }
        std::sort(blocks[id].begin(), blocks[id].end());
    }
    // DFS from ascending start vertices already orders blocks by minimum member.
    return blocks;
}

namespace {

int odd_components_mask(const Multigraph& g, std::uint64_t s_mask) {
    const int n = g.order();
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t rem = all & ~s_mask;
    int odd = 0;
    while (rem != 0) {
        std::uint64_t comp = rem & (~rem + 1); // lowest remaining vertex
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f != 0) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbor_mask(v);
            }
            frontier = next & rem & ~comp;
            comp |= frontier;
        }
        odd += std::popcount(comp) & 1;
        rem &= ~comp;
    }
    return odd;
}

} // namespace

int odd_components(const Multigraph& g, const VertexSet& s) {
    for (int v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("odd_components: vertex out of range");
    if (g.order() <= 64) return odd_components_mask(g, s.mask());

    const int n = g.order();
    std::vector<char> deleted(n, 0), seen(n, 0);
    for (int v : s) deleted[v] = 1;
    std::vector<int> stack;
    int odd = 0;
    for (int start = 0; start < n; ++start) {
        if (deleted[start] || seen[start]) continue;
        int size = 0;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (const int* w = g.neighbors_begin(v); w != g.neighbors_end(v); ++w)
                if (!deleted[*w] && !seen[*w]) {
                    seen[*w] = 1;
                    stack.push_back(*w);
                }
        }
        odd += size & 1;
    }
    return odd;
}

std::pair<Multigraph, int> add_pendant(const Multigraph& g, int x) {
    if (!g.has_vertex(x)) throw std::invalid_argument("add_pendant: vertex out of range");
    const int x_prime = g.order();
    std::vector<std::tuple<int, int, int>> edges;
    edges.reserve(g.edges().size() + 1);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v, e.mult);
    edges.emplace_back(x, x_prime, 1);
    return {Multigraph(g.order() + 1, edges), x_prime};
}

} // namespace graphfactor
