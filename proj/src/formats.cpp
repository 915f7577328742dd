#include "graphfactor/formats.hpp"

#include <sstream>
#include <string>

namespace graphfactor {

namespace {

std::string_view strip_line(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    return text;
}

} // namespace

Multigraph parse_graph6(std::string_view text) {
    text = strip_line(text);
    if (text.empty())
        throw Graph6Error(Graph6Fault::BadHeader, "graph6: empty input");
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header < 63 || header > 63 + 62)
        throw Graph6Error(Graph6Fault::BadHeader,
                          "graph6: bad header byte " + std::to_string(int(header)) +
                              " (only n <= 62 supported)");
    const int n = header - 63;
    const int bits = n * (n - 1) / 2;
    const std::size_t chars = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < 1 + chars)
        throw Graph6Error(Graph6Fault::Truncated, "graph6: truncated bit vector");
    if (text.size() > 1 + chars)
        throw Graph6Error(Graph6Fault::TrailingGarbage, "graph6: trailing garbage");

    std::vector<std::pair<int, int>> edges;
    int bit_index = 0;
    for (std::size_t c = 0; c < chars; ++c) {
        const unsigned char raw = static_cast<unsigned char>(text[1 + c]);
        if (raw < 63 || raw > 126)
            throw Graph6Error(Graph6Fault::TrailingGarbage,
                              "graph6: byte " + std::to_string(int(raw)) + " outside 63..126");
        const int chunk = raw - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const bool set = (chunk >> b) & 1;
            if (bit_index >= bits) {
                if (set)
                    throw Graph6Error(Graph6Fault::TrailingGarbage,
                                      "graph6: nonzero padding bits");
                continue;
            }
            if (!set) continue;
            // column-major upper triangle: bit order (0,1),(0,2),(1,2),(0,3),...
            int idx = bit_index, j = 1;
            while (idx >= j) idx -= j++;
            edges.emplace_back(idx, j);
        }
    }
    return Multigraph(n, edges);
}

std::string emit_graph6(const Multigraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("emit_graph6: graph6 cannot encode multigraphs or loops");
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("emit_graph6: n > 62 unsupported");
    const int bits = n * (n - 1) / 2;
    std::vector<bool> bit(bits, false);
    for (const Edge& e : g.edges()) {
        const int j = e.v, i = e.u; // u < v
        bit[j * (j - 1) / 2 + i] = true;
    }
    std::string out(1, static_cast<char>(63 + n));
    for (int c = 0; c < (bits + 5) / 6; ++c) {
        int chunk = 0;
        for (int b = 0; b < 6; ++b) {
            const int idx = 6 * c + b;
            chunk = (chunk << 1) | (idx < bits && bit[idx] ? 1 : 0);
        }
        out.push_back(static_cast<char>(63 + chunk));
    }
    return out;
}

Multigraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_n = false;
    long long n = 0;
    std::vector<std::tuple<int, int, int>> edges;

    auto parse_int = [](const std::string& tok) -> long long {
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("edge list: non-integer token '" + tok + "'");
        }
        if (pos != tok.size())
            throw ParseError("edge list: non-integer token '" + tok + "'");
        return value;
    };

    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (!have_n) {
            if (toks.size() != 1)
                throw ParseError("edge list: first line must be the vertex count alone");
            n = parse_int(toks[0]);
            if (n < 0 || n > 10000)
                throw ParseError("edge list: vertex count out of range");
            have_n = true;
            continue;
        }
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("edge list: expected 'u v' or 'u v mult'");
        const long long u = parse_int(toks[0]);
        const long long v = parse_int(toks[1]);
        const long long m = toks.size() == 3 ? parse_int(toks[2]) : 1;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex id out of range");
        if (m < 1) throw ParseError("edge list: multiplicity < 1");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v), static_cast<int>(m));
    }
    if (!have_n) throw ParseError("edge list: missing vertex count");
    return Multigraph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Multigraph& g) {
    std::ostringstream os;
    os << g.order() << '\n';
    for (const Edge& e : g.edges()) {
        os << e.u << ' ' << e.v;
        if (e.mult != 1) os << ' ' << e.mult;
        os << '\n';
    }
    return os.str();
}

std::string emit_dot(const Multigraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (const Edge& e : g.edges())
        for (int k = 0; k < e.mult; ++k) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace graphfactor
