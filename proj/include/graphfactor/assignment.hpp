#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "graphfactor/degree_set.hpp"
#include "graphfactor/graph.hpp"

namespace graphfactor {

inline constexpr std::uint64_t kDefaultFamilyCap = 1ULL << 20;
inline constexpr std::uint64_t kDefaultBranchCap = 1ULL << 20;

/// Vertex weight function f: V -> Z+, values >= 1.
class FSpec {
public:
    explicit FSpec(std::vector<int> values);
    static FSpec constant(int n, int value);
    /// "1,2,3" or "const:2" (applied to all n vertices).
    static FSpec parse(std::string_view text, int n);

    int size() const { return static_cast<int>(values_.size()); }
    int value(int v) const;
    const std::vector<int>& values() const { return values_; }
    long long sum(const VertexSet& s) const;
    bool all_odd() const;

    bool operator==(const FSpec&) const = default;

private:
    std::vector<int> values_;
};

/// Where a per-vertex degree set came from; checked when an assignment must
/// provably belong to the family H_f.
enum class SetTag : std::uint8_t { JF, JFPLUS, ODD_ALL, OTHER };

const char* set_tag_name(SetTag t);

/// Per-vertex degree-set map with provenance tags.
class HAssignment {
public:
    HAssignment(std::vector<DegreeSet> sets, std::vector<SetTag> tags);
    static HAssignment uniform(int n, const DegreeSet& d, SetTag tag = SetTag::OTHER);

    int size() const { return static_cast<int>(sets_.size()); }
    const DegreeSet& at(int v) const { return sets_[static_cast<std::size_t>(v)]; }
    SetTag tag(int v) const { return tags_[static_cast<std::size_t>(v)]; }
    const std::vector<DegreeSet>& sets() const { return sets_; }

    std::vector<std::string> display() const;
    bool operator==(const HAssignment&) const = default;

private:
    std::vector<DegreeSet> sets_;
    std::vector<SetTag> tags_;
};

/// The family H_f: per vertex J_f(v) or J_f^+(v). Choices only differ at
/// even-valued vertices, so the family has 2^k members, k = #{v : f(v) even},
/// enumerated by a binary counter over those vertices sorted by id (bit j set
/// means the j-th even-valued vertex takes J_f^+). Member 0 is J_f, member
/// 2^k - 1 is J_f^+.
class HFamily {
public:
    explicit HFamily(FSpec f, std::uint64_t cap = kDefaultFamilyCap);

    std::uint64_t size() const { return std::uint64_t{1} << even_vertices_.size(); }
    HAssignment member(std::uint64_t index) const;
    const std::vector<int>& even_vertices() const { return even_vertices_; }
    const FSpec& f() const { return f_; }

private:
    FSpec f_;
    std::vector<int> even_vertices_;
};

enum class Color : std::uint8_t { R, B };

/// The colored-theorem assignment: R vertices get J_f(v); B vertices get the
/// odd integers truncated at deg_G(v) (lossless for existence questions since
/// no factor degree exceeds the graph degree). Throws IsolatedBlueVertex when
/// a B vertex has degree 0.
HAssignment colored_h(const FSpec& f, const std::vector<Color>& coloring, const Multigraph& g);

struct InfeasibleAt {
    int vertex;
};

using TruncateResult = std::variant<HAssignment, InfeasibleAt>;

/// Intersect every set with [0, deg_G(v)]. Infeasible names the first vertex
/// whose set empties; it is a value, not an error.
TruncateResult truncate(const HAssignment& h, const Multigraph& g);

} // namespace graphfactor
