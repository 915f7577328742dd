#include "graphfactor/degree_set.hpp"

#include <algorithm>
#include <sstream>

namespace graphfactor {

DegreeSet DegreeSet::parity_interval(int lo, int hi) {
    if (lo < 0 || lo > hi || ((hi - lo) & 1))
        throw std::invalid_argument("DegreeSet: bad parity interval bounds");
    DegreeSet d;
    d.kind_ = Kind::ParityInterval;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
}

DegreeSet DegreeSet::plus_top(int lo, int hi_odd) {
    if (lo < 1 || !(lo & 1) || !(hi_odd & 1) || lo > hi_odd)
        throw std::invalid_argument("DegreeSet: bad plus-top bounds");
    DegreeSet d;
    d.kind_ = Kind::PlusTop;
    d.lo_ = lo;
    d.hi_ = hi_odd;
    return d;
}

DegreeSet DegreeSet::explicit_set(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) throw std::invalid_argument("DegreeSet: empty set");
    if (values.front() < 0) throw std::invalid_argument("DegreeSet: negative degree");

    auto is_parity_run = [](const std::vector<int>& v, std::size_t count) {
        for (std::size_t i = 1; i < count; ++i)
            if (v[i] != v[i - 1] + 2) return false;
        return true;
    };
    if (is_parity_run(values, values.size()))
        return parity_interval(values.front(), values.back());
    // odd run plus its even successor
    if (values.size() >= 2 && (values.front() & 1) && !(values.back() & 1) &&
        values.back() == values[values.size() - 2] + 1 &&
        is_parity_run(values, values.size() - 1))
        return plus_top(values.front(), values[values.size() - 2]);

    DegreeSet d;
    d.kind_ = Kind::Explicit;
    d.values_ = std::move(values);
    return d;
}

bool DegreeSet::contains(int d) const {
    switch (kind_) {
    case Kind::ParityInterval:
        return d >= lo_ && d <= hi_ && ((d - lo_) & 1) == 0;
    case Kind::PlusTop:
        return (d >= lo_ && d <= hi_ && ((d - lo_) & 1) == 0) || d == hi_ + 1;
    case Kind::Explicit:
        return std::binary_search(values_.begin(), values_.end(), d);
    }
    return false;
}

int DegreeSet::min_degree() const {
    return kind_ == Kind::Explicit ? values_.front() : lo_;
}

int DegreeSet::max_degree() const {
    switch (kind_) {
    case Kind::ParityInterval: return hi_;
    case Kind::PlusTop: return hi_ + 1;
    case Kind::Explicit: return values_.back();
    }
    return 0;
}

std::size_t DegreeSet::count() const {
    switch (kind_) {
    case Kind::ParityInterval: return static_cast<std::size_t>((hi_ - lo_) / 2 + 1);
    case Kind::PlusTop: return static_cast<std::size_t>((hi_ - lo_) / 2 + 2);
    case Kind::Explicit: return values_.size();
    }
    return 0;
}

std::vector<int> DegreeSet::elements() const {
    if (kind_ == Kind::Explicit) return values_;
    std::vector<int> out;
    for (int d = lo_; d <= hi_; d += 2) out.push_back(d);
    if (kind_ == Kind::PlusTop) out.push_back(hi_ + 1);
    return out;
}

std::optional<DegreeSet> DegreeSet::truncated(int max_degree) const {
    switch (kind_) {
    case Kind::ParityInterval: {
        if (lo_ > max_degree) return std::nullopt;
        const int hi = std::min(hi_, lo_ + 2 * ((max_degree - lo_) / 2));
        return parity_interval(lo_, hi);
    }
    case Kind::PlusTop: {
        if (lo_ > max_degree) return std::nullopt;
        if (hi_ + 1 <= max_degree) return *this;
        // even top falls away; clamp the odd run
        const int hi = std::min(hi_, lo_ + 2 * ((max_degree - lo_) / 2));
        return parity_interval(lo_, hi);
    }
    case Kind::Explicit: {
        std::vector<int> kept;
        for (int d : values_)
            if (d <= max_degree) kept.push_back(d);
        if (kept.empty()) return std::nullopt;
        return explicit_set(std::move(kept));
    }
    }
    return std::nullopt;
}

std::string DegreeSet::display() const {
    std::ostringstream os;
    if (kind_ == Kind::PlusTop) {
        os << "odd[" << lo_ << ".." << hi_ << "]+{" << hi_ + 1 << '}';
        return os.str();
    }
    os << '{';
    bool first = true;
    for (int d : elements()) {
        if (!first) os << ',';
        first = false;
        os << d;
    }
    os << '}';
    return os.str();
}

SetClass classify(const DegreeSet& d) {
    if (d.count() == 1) return SetClass::Singleton;
    switch (d.kind()) {
    case DegreeSet::Kind::ParityInterval: return SetClass::ParityInterval;
    case DegreeSet::Kind::PlusTop: return SetClass::ParityIntervalPlusTop;
    case DegreeSet::Kind::Explicit: return SetClass::Other;
    }
    return SetClass::Other;
}

const char* set_class_name(SetClass c) {
    switch (c) {
    case SetClass::ParityInterval: return "ParityInterval";
    case SetClass::ParityIntervalPlusTop: return "ParityIntervalPlusTop";
    case SetClass::Singleton: return "Singleton";
    case SetClass::Other: return "Other";
    }
    return "?";
}

DegreeSet j_set(int m) {
    if (m < 1) throw std::invalid_argument("j_set: m must be >= 1");
    if (m & 1) return DegreeSet::parity_interval(1, m);
    return DegreeSet::plus_top(1, m - 1);
}

DegreeSet j_plus_set(int m) {
    if (m < 1) throw std::invalid_argument("j_plus_set: m must be >= 1");
    return DegreeSet::parity_interval(1, (m & 1) ? m : m + 1);
}

} // namespace graphfactor
