#include "graphfactor/assignment.hpp"

#include <algorithm>
#include <charconv>

namespace graphfactor {

FSpec::FSpec(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
        if (v < 1) throw std::invalid_argument("FSpec: values must be positive integers");
}

FSpec FSpec::constant(int n, int value) {
    if (n < 0) throw std::invalid_argument("FSpec: negative length");
    return FSpec(std::vector<int>(static_cast<std::size_t>(n), value));
}

FSpec FSpec::parse(std::string_view text, int n) {
    auto to_int = [](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("f-spec: non-integer token '" + std::string(tok) + "'");
        return value;
    };
    if (text.starts_with("const:")) {
        const int value = to_int(text.substr(6));
        if (value < 1) throw ParseError("f-spec: constant must be >= 1");
        return constant(n, value);
    }
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const int value = to_int(text.substr(pos, comma - pos));
        if (value < 1) throw ParseError("f-spec: values must be >= 1");
        values.push_back(value);
        pos = comma + 1;
    }
    if (static_cast<int>(values.size()) != n)
        throw ParseError("f-spec: expected " + std::to_string(n) + " values, got " +
                         std::to_string(values.size()));
    return FSpec(std::move(values));
}

int FSpec::value(int v) const {
    if (v < 0 || v >= size()) throw std::invalid_argument("FSpec: vertex out of range");
    return values_[static_cast<std::size_t>(v)];
}

long long FSpec::sum(const VertexSet& s) const {
    long long total = 0;
    for (int v : s) total += value(v);
    return total;
}

bool FSpec::all_odd() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v & 1; });
}

const char* set_tag_name(SetTag t) {
    switch (t) {
    case SetTag::JF: return "JF";
    case SetTag::JFPLUS: return "JFPLUS";
    case SetTag::ODD_ALL: return "ODD_ALL";
    case SetTag::OTHER: return "OTHER";
    }
    return "?";
}

HAssignment::HAssignment(std::vector<DegreeSet> sets, std::vector<SetTag> tags)
    : sets_(std::move(sets)), tags_(std::move(tags)) {
    if (sets_.size() != tags_.size())
        throw std::invalid_argument("HAssignment: sets/tags length mismatch");
}

HAssignment HAssignment::uniform(int n, const DegreeSet& d, SetTag tag) {
    return HAssignment(std::vector<DegreeSet>(static_cast<std::size_t>(n), d),
                       std::vector<SetTag>(static_cast<std::size_t>(n), tag));
}

std::vector<std::string> HAssignment::display() const {
    std::vector<std::string> out;
    out.reserve(sets_.size());
    for (const DegreeSet& d : sets_) out.push_back(d.display());
    return out;
}

HFamily::HFamily(FSpec f, std::uint64_t cap) : f_(std::move(f)) {
    for (int v = 0; v < f_.size(); ++v)
        if ((f_.value(v) & 1) == 0) even_vertices_.push_back(v);
    if (even_vertices_.size() >= 63 ||
        (std::uint64_t{1} << even_vertices_.size()) > cap)
        throw CapError("h_family: 2^" + std::to_string(even_vertices_.size()) +
                       " members exceeds the cap of " + std::to_string(cap));
}

HAssignment HFamily::member(std::uint64_t index) const {
    if (index >= size()) throw std::invalid_argument("h_family: member index out of range");
    std::vector<DegreeSet> sets;
    std::vector<SetTag> tags;
    sets.reserve(static_cast<std::size_t>(f_.size()));
    tags.reserve(static_cast<std::size_t>(f_.size()));
    std::size_t even_pos = 0;
    for (int v = 0; v < f_.size(); ++v) {
        const int fv = f_.value(v);
        if (fv & 1) {
            sets.push_back(j_set(fv)); // equals j_plus_set(fv)
            tags.push_back(SetTag::JF);
        } else {
            const bool plus = (index >> even_pos) & 1;
            ++even_pos;
            sets.push_back(plus ? j_plus_set(fv) : j_set(fv));
            tags.push_back(plus ? SetTag::JFPLUS : SetTag::JF);
        }
    }
    return HAssignment(std::move(sets), std::move(tags));
}

HAssignment colored_h(const FSpec& f, const std::vector<Color>& coloring, const Multigraph& g) {
    if (f.size() != g.order() || static_cast<int>(coloring.size()) != g.order())
        throw std::invalid_argument("colored_h: length mismatch");
    std::vector<DegreeSet> sets;
    std::vector<SetTag> tags;
    sets.reserve(coloring.size());
    tags.reserve(coloring.size());
    for (int v = 0; v < g.order(); ++v) {
        if (coloring[static_cast<std::size_t>(v)] == Color::R) {
            sets.push_back(j_set(f.value(v)));
            tags.push_back(SetTag::JF);
        } else {
            const int d = g.degree(v);
            if (d < 1) throw IsolatedBlueVertex(v);
            const int top = (d & 1) ? d : d - 1; // largest odd degree achievable
            sets.push_back(DegreeSet::parity_interval(1, top));
            tags.push_back(SetTag::ODD_ALL);
        }
    }
    return HAssignment(std::move(sets), std::move(tags));
}

TruncateResult truncate(const HAssignment& h, const Multigraph& g) {
    if (h.size() != g.order()) throw std::invalid_argument("truncate: length mismatch");
    std::vector<DegreeSet> sets;
    std::vector<SetTag> tags;
    sets.reserve(static_cast<std::size_t>(h.size()));
    tags.reserve(static_cast<std::size_t>(h.size()));
    for (int v = 0; v < h.size(); ++v) {
        auto cut = h.at(v).truncated(g.degree(v));
        if (!cut) return InfeasibleAt{v};
        sets.push_back(std::move(*cut));
        tags.push_back(h.tag(v));
    }
    return HAssignment(std::move(sets), std::move(tags));
}

} // namespace graphfactor
