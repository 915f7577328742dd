#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphfactor/errors.hpp"

namespace graphfactor {

/// A set of allowed degrees in canonical form. Construction normalizes to
/// the strongest representation: a parity interval {lo, lo+2, ..., hi}, a
/// parity interval of odd numbers plus its even successor ("plus-top", the
/// shape of J_m for even m), or an explicit sorted list.
class DegreeSet {
public:
    enum class Kind { ParityInterval, PlusTop, Explicit };

    /// {lo, lo+2, ..., hi}; requires 0 <= lo <= hi and lo ≡ hi (mod 2).
    static DegreeSet parity_interval(int lo, int hi);
    /// {lo, lo+2, ..., hi_odd, hi_odd+1}; requires lo, hi_odd odd, lo <= hi_odd.
    static DegreeSet plus_top(int lo, int hi_odd);
    /// Arbitrary nonempty set of naturals; normalized when it matches one of
    /// the interval forms. Normalization is idempotent.
    static DegreeSet explicit_set(std::vector<int> values);

    Kind kind() const { return kind_; }
    bool contains(int d) const;
    int min_degree() const;
    int max_degree() const;
    std::size_t count() const;
    std::vector<int> elements() const;

    /// ParityInterval / PlusTop accessors.
    int lo() const { return lo_; }
    int hi_odd() const { return hi_; }  // PlusTop only
    int hi() const { return hi_; }      // ParityInterval only
    int top_even() const { return hi_ + 1; }

    /// Intersection with [0, max_degree]; nullopt when it empties.
    /// Canonical form is preserved or downgraded (plus-top may become a
    /// parity interval when the even top falls away).
    std::optional<DegreeSet> truncated(int max_degree) const;

    /// Stable display form: "{1,3,5}" or "odd[1..5]+{6}".
    std::string display() const;

    bool operator==(const DegreeSet&) const = default;

private:
    DegreeSet() = default;
    Kind kind_ = Kind::ParityInterval;
    int lo_ = 0, hi_ = 0;        // interval bounds; for PlusTop, the odd run
    std::vector<int> values_;    // Explicit only
};

enum class SetClass { ParityInterval, ParityIntervalPlusTop, Singleton, Other };

/// Canonical classification driving the solver strategy. One-element sets
/// report Singleton regardless of stored form.
SetClass classify(const DegreeSet& d);

const char* set_class_name(SetClass c);

/// J_m: {1,3,5,...,m} for odd m; {1,3,5,...,m-1,m} for even m. Requires m >= 1.
DegreeSet j_set(int m);

/// J_m^+: positive odd integers <= m+1. Requires m >= 1.
DegreeSet j_plus_set(int m);

} // namespace graphfactor
