#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "intervalk/error.hpp"

namespace intervalk {

using ElementId = std::string;

// lt(x, y) == true means x precedes y (strict order).
using RelationMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

enum class RelationMode { Raw, Covers };

/// A finite strict partial order over named elements.
///
/// Elements are addressed either by id or by position in `elements()`; the
/// relation matrix is indexed by position. Instances are immutable once built
/// and always satisfy irreflexivity and transitivity.
class Poset {
  public:
    Poset() = default;

    /// Builds from an already closed relation. Throws if the matrix is not a
    /// strict partial order or the ids are not unique.
    Poset(std::vector<ElementId> elements, RelationMatrix lt);

    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
    [[nodiscard]] const std::vector<ElementId>& elements() const noexcept { return elements_; }
    [[nodiscard]] const ElementId& element(std::size_t i) const { return elements_.at(i); }
    [[nodiscard]] const RelationMatrix& relation() const noexcept { return lt_; }

    [[nodiscard]] std::size_t index_of(std::string_view id) const;
    [[nodiscard]] std::optional<std::size_t> find(std::string_view id) const;

    [[nodiscard]] bool less(std::size_t x, std::size_t y) const { return lt_(x, y); }
    [[nodiscard]] bool comparable(std::size_t x, std::size_t y) const { return lt_(x, y) || lt_(y, x); }
    [[nodiscard]] bool incomparable(std::size_t x, std::size_t y) const { return x != y && !comparable(x, y); }

    [[nodiscard]] std::size_t comparable_pair_count() const { return static_cast<std::size_t>(lt_.count()); }

    /// All pairs (x, y) with x < y, row-major by position.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

    /// Pairs (x, y) such that y covers x.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

    friend bool operator==(const Poset& a, const Poset& b);

  private:
    std::vector<ElementId> elements_;
    RelationMatrix lt_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// In-place transitive closure (Warshall). Returns false if the closure is not
/// irreflexive, i.e. the input contains a directed cycle.
bool close_transitively(RelationMatrix& lt);

[[nodiscard]] bool is_strict_order(const RelationMatrix& lt);

Poset poset_from_relations(const std::vector<ElementId>& elements,
                           const std::vector<std::pair<ElementId, ElementId>>& pairs,
                           RelationMode mode = RelationMode::Raw);

bool incomparable(const Poset& p, std::string_view x, std::string_view y);

Poset induced(const Poset& p, const std::vector<ElementId>& subset);
Poset induced_by_index(const Poset& p, const std::vector<std::size_t>& subset);

// ---------------------------------------------------------------------------
// Forbidden patterns
// ---------------------------------------------------------------------------

enum class ForbiddenKind { TwoPlusTwo, ChainPlusOne };

std::string_view to_string(ForbiddenKind kind);

/// Witness for an induced 2+2 or (k+2)+1.
///
/// TwoPlusTwo: `chain` holds {a, x, b, y} for the chains a < x and b < y.
/// ChainPlusOne: `chain` is listed bottom-to-top and `lone` is the element
/// incomparable to all of it.
struct ForbiddenSubposet {
    ForbiddenKind kind = ForbiddenKind::TwoPlusTwo;
    std::vector<ElementId> chain;
    ElementId lone;

    static ForbiddenSubposet two_plus_two(ElementId a, ElementId x, ElementId b, ElementId y);
    static ForbiddenSubposet chain_plus_one(std::vector<ElementId> chain, ElementId lone);

    [[nodiscard]] std::vector<ElementId> elements() const;

    friend bool operator==(const ForbiddenSubposet&, const ForbiddenSubposet&) = default;
};

/// True iff the elements of `f` induce exactly the claimed pattern in `p`;
/// chain-plus-one witnesses must have exactly k+2 chain elements.
bool verify_forbidden(const Poset& p, const ForbiddenSubposet& f, int k);

/// Direct search for a forbidden pattern, independent of any digraph.
/// Prefers 2+2; returns the first witness in element order.
std::optional<ForbiddenSubposet> oracle_forbidden(const Poset& p, int k);

/// Same as `oracle_forbidden` restricted to 2+2 / (n)+1 for a given n.
std::optional<ForbiddenSubposet> find_two_plus_two(const Poset& p);
std::optional<ForbiddenSubposet> find_chain_plus_one(const Poset& p, std::size_t chain_length);

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Chain a1 < ... < an plus an element x incomparable to all of it.
Poset make_chain_plus_one(int n);

Poset make_chain(int n);
Poset make_antichain(int n);
Poset make_two_plus_two();

/// Intersection of `num_linear_orders` random linear orders (dimension at most
/// that number). Deterministic in `seed`.
Poset random_poset(int n, std::uint64_t seed, int num_linear_orders);

/// Interval order induced by random intervals whose lengths lie in
/// [1, max_length]; always has a [1, max_length] representation.
Poset random_bounded_interval_order(int n, int max_length, std::uint64_t seed);

inline constexpr int kMaxEnumerationSize = 6;

/// Visits every labeled poset on `n` elements exactly once (ids "a", "b", ...).
void for_each_poset(int n, const std::function<void(const Poset&)>& visit);

std::vector<Poset> enumerate_posets(int n);

} // namespace intervalk
