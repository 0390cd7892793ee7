#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intervalk/digraph.hpp"
#include "intervalk/poset.hpp"
#include "intervalk/solver.hpp"

namespace intervalk {

using Rational = boost::rational<std::int64_t>;

/// Closed intervals [left(i)/scale, right(i)/scale], one per element, in the
/// same order as `elements`.
struct IntervalRepresentation {
    std::vector<ElementId> elements;
    PotentialVector left;
    PotentialVector right;
    Weight scale = 1;

    [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
    [[nodiscard]] Rational left_endpoint(std::size_t i) const { return {left(static_cast<Eigen::Index>(i)), scale}; }
    [[nodiscard]] Rational right_endpoint(std::size_t i) const { return {right(static_cast<Eigen::Index>(i)), scale}; }
    [[nodiscard]] Rational length(std::size_t i) const { return right_endpoint(i) - left_endpoint(i); }
};

struct Violation {
    std::string message;
};

/// nullopt means the representation is valid.
using ValidationResult = std::optional<Violation>;

/// Checks every length against [lo, hi] and that x < y iff R(x) < L(y) for
/// every ordered pair. Element order in `rep` may differ from `p`, but the two
/// element sets must coincide (ElementMismatch otherwise).
ValidationResult validate_representation(const Poset& p, const IntervalRepresentation& rep, Rational lo, Rational hi);

/// L(x) = p(l_x), R(x) = p(r_x). Throws InfeasiblePotential if `potential`
/// violates an arc of `g` or the result fails validation against g's bounds.
IntervalRepresentation representation_from_potential(const Poset& p, const WeightedDigraph& g,
                                                     const Potential& potential);
IntervalRepresentation representation_from_potential(const Poset& p, int k, const Potential& potential);

/// Reads a forbidden subposet off a fewest-arc negative cycle of the [1, k]
/// digraph. Throws NonMinimalCycle when the cycle has a shape that a
/// fewest-arc cycle cannot have.
ForbiddenSubposet extract_forbidden(const Poset& p, int k, const NegativeCycle& cycle);

struct Certificate {
    std::variant<IntervalRepresentation, ForbiddenSubposet> value;

    [[nodiscard]] bool representable() const noexcept { return value.index() == 0; }
    [[nodiscard]] const IntervalRepresentation& representation() const {
        return std::get<IntervalRepresentation>(value);
    }
    [[nodiscard]] const ForbiddenSubposet& forbidden() const { return std::get<ForbiddenSubposet>(value); }
};

struct CertifyOptions {
    /// The digraph is built with scale = scale_multiplier * (2|X| + 1).
    Weight scale_multiplier = 1;
};

/// [1, k]-representation or forbidden subposet, self-checked before return.
Certificate certify(const Poset& p, int k, const CertifyOptions& options = {});

struct NoRepresentation {
    NegativeCycle cycle;
};

using GeneralResult = std::variant<IntervalRepresentation, NoRepresentation>;

/// [m, n]-representation if one exists. No forbidden-pattern certificate is
/// produced on failure, only the offending cycle.
GeneralResult represent_general(const Poset& p, int m, int n);

} // namespace intervalk
