#pragma once

#include <Eigen/Core>

#include <optional>
#include <variant>
#include <vector>

#include "intervalk/digraph.hpp"
#include "intervalk/minplus.hpp"

namespace intervalk {

using PotentialVector = Eigen::Matrix<Weight, Eigen::Dynamic, 1>;

/// Vertex labelling with value(v) - value(u) <= w for every arc (u, v, w).
struct Potential {
    PotentialVector value;
};

/// A closed walk given as its arcs in order.
struct NegativeCycle {
    std::vector<Arc> arcs;
    Weight total_weight = 0;

    [[nodiscard]] std::size_t arc_count() const noexcept { return arcs.size(); }
    [[nodiscard]] std::vector<std::size_t> vertices() const;
};

/// Negative cycle seen by the label-correcting pass; not necessarily minimal.
struct NegativeCycleDetected {
    NegativeCycle witness;
};

using FeasibilityResult = std::variant<Potential, NegativeCycleDetected>;

/// Bellman-Ford from a virtual zero-weight source joined to every vertex.
/// On success the potential is the minimum weight of a walk ending at each
/// vertex (the empty walk counts, so every value is <= 0).
FeasibilityResult find_potential(const WeightedDigraph& g);

/// Fewest-arc negative cycle, or none if the digraph admits a potential.
/// Runs the label-correcting check first and only then the exact-length
/// (min, +) recurrence.
std::optional<NegativeCycle> min_arc_negative_cycle(const WeightedDigraph& g);

/// The (min, +) recurrence alone, skipping the fast feasibility check.
std::optional<NegativeCycle> min_arc_negative_cycle_dp(const WeightedDigraph& g);

/// Dense arc-weight matrix with `unreachable<Weight>()` where no arc exists.
WalkMatrix<Weight> weight_matrix(const WeightedDigraph& g);

[[nodiscard]] bool is_potential(const WeightedDigraph& g, const PotentialVector& value);

/// Closed, simple, arcs present in `g`, weight matches and is negative.
[[nodiscard]] bool is_valid_negative_cycle(const WeightedDigraph& g, const NegativeCycle& c);

} // namespace intervalk
