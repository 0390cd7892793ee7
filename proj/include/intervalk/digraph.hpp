#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intervalk/poset.hpp"

namespace intervalk {

using Weight = std::int64_t;

enum class Side : std::uint8_t { Left, Right };

/// Endpoint vertex of an element's interval. Vertex indices are laid out as
/// all left endpoints (0..n-1) followed by all right endpoints (n..2n-1).
struct VertexId {
    Side side = Side::Left;
    std::size_t element = 0;

    friend bool operator==(const VertexId&, const VertexId&) = default;
};

enum class ArcKind : std::uint8_t {
    EpsNeg,   // l_y -> r_x for x < y, real weight -eps
    Zero,     // r_x -> l_y for x || y
    MinusOne, // r_x -> l_x, real weight -(lower length bound)
    PlusK,    // l_x -> r_x, real weight +(upper length bound)
};

std::string_view to_string(ArcKind kind);

struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    ArcKind kind = ArcKind::Zero;
    Weight weight = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Smallest admissible scale, 2|X| + 1; with eps = 1/scale every weight is an
/// integer after multiplying through.
[[nodiscard]] Weight default_scale(std::size_t element_count);

/// The length-bound digraph of a poset with all weights multiplied by `scale`.
///
/// Arc weights: EpsNeg -1, Zero 0, MinusOne -lower*scale, PlusK upper*scale.
class WeightedDigraph {
  public:
    WeightedDigraph() = default;
    WeightedDigraph(std::size_t element_count, Weight scale, int lower, int upper, std::vector<Arc> arcs);

    [[nodiscard]] std::size_t element_count() const noexcept { return element_count_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return 2 * element_count_; }
    [[nodiscard]] Weight scale() const noexcept { return scale_; }
    [[nodiscard]] int lower() const noexcept { return lower_; }
    [[nodiscard]] int upper() const noexcept { return upper_; }
    [[nodiscard]] int k() const noexcept { return upper_; }

    [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    /// Indices into arcs(), grouped by source vertex; within a group sorted by target.
    [[nodiscard]] const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_.at(v); }
    /// Arc from u to v if one exists.
    [[nodiscard]] std::optional<Arc> arc_between(std::size_t u, std::size_t v) const;

    [[nodiscard]] std::size_t left(std::size_t x) const noexcept { return x; }
    [[nodiscard]] std::size_t right(std::size_t x) const noexcept { return element_count_ + x; }
    [[nodiscard]] VertexId vertex(std::size_t v) const;

    /// Largest |weight| over all arcs.
    [[nodiscard]] Weight max_abs_weight() const noexcept { return max_abs_weight_; }

  private:
    std::size_t element_count_ = 0;
    Weight scale_ = 1;
    int lower_ = 1;
    int upper_ = 1;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> out_;
    Weight max_abs_weight_ = 0;
};

/// Lengths in [1, k].
WeightedDigraph build_gpk(const Poset& p, int k);
WeightedDigraph build_gpk(const Poset& p, int k, Weight scale);

/// Lengths in [m, n].
WeightedDigraph build_gmn(const Poset& p, int m, int n);
WeightedDigraph build_gmn(const Poset& p, int m, int n, Weight scale);

/// Number of arcs the construction must produce for `p`.
[[nodiscard]] std::size_t expected_arc_count(const Poset& p);

/// One arc per line: `from to scaled_weight kind`, vertices named `l:<id>` / `r:<id>`.
void write_digraph(std::ostream& out, const WeightedDigraph& g, const Poset& p);

std::string vertex_name(const WeightedDigraph& g, const Poset& p, std::size_t v);

} // namespace intervalk
