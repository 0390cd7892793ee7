#include "intervalk/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace intervalk {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::CycleInRelation: return "CycleInRelation";
    case ErrorCode::NotCoverRelation: return "NotCoverRelation";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::ElementMismatch: return "ElementMismatch";
    case ErrorCode::InfeasiblePotential: return "InfeasiblePotential";
    case ErrorCode::NonMinimalCycle: return "NonMinimalCycle";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Poset
// ---------------------------------------------------------------------------

Poset::Poset(std::vector<ElementId> elements, RelationMatrix lt) : elements_(std::move(elements)), lt_(std::move(lt)) {
    const auto n = static_cast<Eigen::Index>(elements_.size());
    if (lt_.rows() != n || lt_.cols() != n) {
        throw Error(ErrorCode::InvalidSize, "relation matrix does not match element count");
    }
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], i).second) {
            throw Error(ErrorCode::DuplicateElement, "duplicate element '" + elements_[i] + "'");
        }
    }
    if (!is_strict_order(lt_)) {
        throw Error(ErrorCode::CycleInRelation, "relation is not a strict partial order");
    }
}

std::optional<std::size_t> Poset::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Poset::index_of(std::string_view id) const {
    if (auto i = find(id)) {
        return *i;
    }
    throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(id) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
            if (lt_(x, y)) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!lt_(x, y)) {
                continue;
            }
            bool cover = true;
            for (std::size_t z = 0; z < n && cover; ++z) {
                cover = !(lt_(x, z) && lt_(z, y));
            }
            if (cover) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && (a.lt_ == b.lt_).all();
}

bool close_transitively(RelationMatrix& lt) {
    const Eigen::Index n = lt.rows();
    for (Eigen::Index m = 0; m < n; ++m) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (lt(i, m)) {
                lt.row(i) = lt.row(i) || lt.row(m);
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (lt(i, i)) {
            return false;
        }
    }
    return true;
}

bool is_strict_order(const RelationMatrix& lt) {
    const Eigen::Index n = lt.rows();
    if (lt.cols() != n) {
        return false;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (lt(i, i)) {
            return false;
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!lt(i, j)) {
                continue;
            }
            // row j must be contained in row i
            if ((lt.row(j) && !lt.row(i)).any()) {
                return false;
            }
        }
    }
    return true;
}

Poset poset_from_relations(const std::vector<ElementId>& elements,
                           const std::vector<std::pair<ElementId, ElementId>>& pairs, RelationMode mode) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!index.emplace(elements[i], i).second) {
            throw Error(ErrorCode::DuplicateElement, "duplicate element '" + elements[i] + "'");
        }
    }
    auto lookup = [&](const ElementId& id) {
        auto it = index.find(id);
        if (it == index.end()) {
            throw Error(ErrorCode::UnknownElement, "unknown element '" + id + "'");
        }
        return it->second;
    };

    const auto n = static_cast<Eigen::Index>(elements.size());
    RelationMatrix lt = RelationMatrix::Constant(n, n, false);
    std::vector<std::pair<std::size_t, std::size_t>> given;
    given.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const std::size_t i = lookup(a);
        const std::size_t j = lookup(b);
        if (i == j) {
            throw Error(ErrorCode::CycleInRelation, "reflexive pair '" + a + " < " + b + "'");
        }
        lt(i, j) = true;
        given.emplace_back(i, j);
    }
    if (!close_transitively(lt)) {
        throw Error(ErrorCode::CycleInRelation, "relation contains a cycle");
    }
    if (mode == RelationMode::Covers) {
        for (const auto& [i, j] : given) {
            for (Eigen::Index z = 0; z < n; ++z) {
                if (lt(i, z) && lt(z, j)) {
                    throw Error(ErrorCode::NotCoverRelation, "pair '" + elements[i] + " < " + elements[j] +
                                                                 "' is implied via '" + elements[z] + "'");
                }
            }
        }
    }
    return Poset(elements, std::move(lt));
}

bool incomparable(const Poset& p, std::string_view x, std::string_view y) {
    return p.incomparable(p.index_of(x), p.index_of(y));
}

Poset induced_by_index(const Poset& p, const std::vector<std::size_t>& subset) {
    const auto m = static_cast<Eigen::Index>(subset.size());
    std::vector<ElementId> ids;
    ids.reserve(subset.size());
    RelationMatrix lt(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (subset[i] >= p.size()) {
            throw Error(ErrorCode::UnknownElement, "element index out of range");
        }
        ids.push_back(p.element(subset[i]));
        for (Eigen::Index j = 0; j < m; ++j) {
            lt(i, j) = p.less(subset[i], subset[j]);
        }
    }
    return Poset(std::move(ids), std::move(lt));
}

Poset induced(const Poset& p, const std::vector<ElementId>& subset) {
    std::vector<std::size_t> idx;
    idx.reserve(subset.size());
    for (const auto& id : subset) {
        idx.push_back(p.index_of(id));
    }
    return induced_by_index(p, idx);
}

// ---------------------------------------------------------------------------
// Forbidden patterns
// ---------------------------------------------------------------------------

std::string_view to_string(ForbiddenKind kind) {
    return kind == ForbiddenKind::TwoPlusTwo ? "two-plus-two" : "chain-plus-one";
}

ForbiddenSubposet ForbiddenSubposet::two_plus_two(ElementId a, ElementId x, ElementId b, ElementId y) {
    return {ForbiddenKind::TwoPlusTwo, {std::move(a), std::move(x), std::move(b), std::move(y)}, {}};
}

ForbiddenSubposet ForbiddenSubposet::chain_plus_one(std::vector<ElementId> chain, ElementId lone) {
    return {ForbiddenKind::ChainPlusOne, std::move(chain), std::move(lone)};
}

std::vector<ElementId> ForbiddenSubposet::elements() const {
    std::vector<ElementId> out = chain;
    if (kind == ForbiddenKind::ChainPlusOne) {
        out.push_back(lone);
    }
    return out;
}

bool verify_forbidden(const Poset& p, const ForbiddenSubposet& f, int k) {
    std::vector<std::size_t> idx;
    for (const auto& id : f.elements()) {
        idx.push_back(p.index_of(id));
    }
    std::unordered_set<std::size_t> distinct(idx.begin(), idx.end());
    if (distinct.size() != idx.size()) {
        return false;
    }

    // Expected relation on idx, then compare with the induced one.
    const std::size_t m = idx.size();
    RelationMatrix expected = RelationMatrix::Constant(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m), false);
    if (f.kind == ForbiddenKind::TwoPlusTwo) {
        if (m != 4) {
            return false;
        }
        expected(0, 1) = true;
        expected(2, 3) = true;
    } else {
        if (k < 1 || f.chain.size() != static_cast<std::size_t>(k) + 2) {
            return false;
        }
        for (std::size_t i = 0; i < f.chain.size(); ++i) {
            for (std::size_t j = i + 1; j < f.chain.size(); ++j) {
                expected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = true;
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (p.less(idx[i], idx[j]) != expected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) {
                return false;
            }
        }
    }
    return true;
}

std::optional<ForbiddenSubposet> find_two_plus_two(const Poset& p) {
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t x = 0; x < n; ++x) {
            if (!p.less(a, x)) {
                continue;
            }
            for (std::size_t b = 0; b < n; ++b) {
                if (!p.incomparable(a, b) || !p.incomparable(x, b)) {
                    continue;
                }
                for (std::size_t y = 0; y < n; ++y) {
                    if (p.less(b, y) && p.incomparable(a, y) && p.incomparable(x, y)) {
                        return ForbiddenSubposet::two_plus_two(p.element(a), p.element(x), p.element(b),
                                                               p.element(y));
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ForbiddenSubposet> find_chain_plus_one(const Poset& p, std::size_t chain_length) {
    const std::size_t n = p.size();
    if (chain_length == 0) {
        return std::nullopt;
    }
    // Predecessor counts give a linear extension.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto below = p.relation().colwise().count();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) { return below(u) < below(v); });

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> length(n);
    std::vector<std::size_t> prev(n);
    for (std::size_t lone = 0; lone < n; ++lone) {
        std::size_t best_end = none;
        std::fill(length.begin(), length.end(), 0);
        for (std::size_t v : order) {
            if (!p.incomparable(lone, v)) {
                continue;
            }
            length[v] = 1;
            prev[v] = none;
            for (std::size_t u = 0; u < n; ++u) {
                if (length[u] > 0 && p.less(u, v) && length[u] + 1 > length[v]) {
                    length[v] = length[u] + 1;
                    prev[v] = u;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (length[v] > 0 && (best_end == none || length[v] > length[best_end])) {
                best_end = v;
            }
        }
        if (best_end == none || length[best_end] < chain_length) {
            continue;
        }
        std::vector<ElementId> chain;
        for (std::size_t v = best_end; chain.size() < chain_length; v = prev[v]) {
            chain.push_back(p.element(v));
        }
        std::reverse(chain.begin(), chain.end());
        return ForbiddenSubposet::chain_plus_one(std::move(chain), p.element(lone));
    }
    return std::nullopt;
}

std::optional<ForbiddenSubposet> oracle_forbidden(const Poset& p, int k) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidK, "k must be at least 1");
    }
    if (auto f = find_two_plus_two(p)) {
        return f;
    }
    return find_chain_plus_one(p, static_cast<std::size_t>(k) + 2);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Poset make_chain_plus_one(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidSize, "chain length must be at least 1");
    }
    std::vector<ElementId> ids;
    for (int i = 1; i <= n; ++i) {
        ids.push_back("a" + std::to_string(i));
    }
    ids.emplace_back("x");
    RelationMatrix lt = RelationMatrix::Constant(n + 1, n + 1, false);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            lt(i, j) = true;
        }
    }
    return Poset(std::move(ids), std::move(lt));
}

Poset make_chain(int n) {
    if (n < 0) {
        throw Error(ErrorCode::InvalidSize, "negative size");
    }
    std::vector<ElementId> ids;
    for (int i = 1; i <= n; ++i) {
        ids.push_back("a" + std::to_string(i));
    }
    RelationMatrix lt = RelationMatrix::Constant(n, n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            lt(i, j) = true;
        }
    }
    return Poset(std::move(ids), std::move(lt));
}

Poset make_antichain(int n) {
    if (n < 0) {
        throw Error(ErrorCode::InvalidSize, "negative size");
    }
    std::vector<ElementId> ids;
    for (int i = 1; i <= n; ++i) {
        ids.push_back("a" + std::to_string(i));
    }
    return Poset(std::move(ids), RelationMatrix::Constant(n, n, false));
}

Poset make_two_plus_two() {
    return poset_from_relations({"a", "b", "x", "y"}, {{"a", "x"}, {"b", "y"}});
}

Poset random_poset(int n, std::uint64_t seed, int num_linear_orders) {
    if (n < 0) {
        throw Error(ErrorCode::InvalidSize, "negative size");
    }
    if (num_linear_orders < 2) {
        throw Error(ErrorCode::InvalidSize, "at least two linear orders are required");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::vector<std::size_t> pos(static_cast<std::size_t>(n));
    RelationMatrix lt = RelationMatrix::Constant(n, n, true);
    for (int i = 0; i < n; ++i) {
        lt(i, i) = false;
    }
    for (int t = 0; t < num_linear_orders; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t r = 0; r < perm.size(); ++r) {
            pos[perm[r]] = r;
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                lt(i, j) = lt(i, j) && pos[i] < pos[j];
            }
        }
    }
    std::vector<ElementId> ids;
    for (int i = 0; i < n; ++i) {
        ids.push_back("v" + std::to_string(i));
    }
    return Poset(std::move(ids), std::move(lt));
}

Poset random_bounded_interval_order(int n, int max_length, std::uint64_t seed) {
    if (n < 0) {
        throw Error(ErrorCode::InvalidSize, "negative size");
    }
    if (max_length < 1) {
        throw Error(ErrorCode::InvalidK, "max_length must be at least 1");
    }
    std::mt19937_64 rng(seed);
    const double span = std::max(1.0, n * (1.0 + max_length) / 4.0);
    std::uniform_real_distribution<double> left_dist(0.0, span);
    std::uniform_real_distribution<double> len_dist(1.0, static_cast<double>(max_length));
    std::vector<double> left(static_cast<std::size_t>(n));
    std::vector<double> right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        left[i] = left_dist(rng);
        right[i] = left[i] + len_dist(rng);
    }
    RelationMatrix lt(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lt(i, j) = right[i] < left[j];
        }
    }
    std::vector<ElementId> ids;
    for (int i = 0; i < n; ++i) {
        ids.push_back("v" + std::to_string(i));
    }
    return Poset(std::move(ids), std::move(lt));
}

namespace {

// Extends every poset on the first m elements by an element m whose relation
// to each earlier element is one of {none, below, above}, keeping only
// transitive results. Each labeled poset arises from exactly one parent.
void extend(RelationMatrix& lt, int m, int n, const std::vector<ElementId>& ids,
            const std::function<void(const Poset&)>& visit) {
    if (m == n) {
        visit(Poset(ids, lt));
        return;
    }
    std::vector<int> choice(static_cast<std::size_t>(m), 0);
    while (true) {
        for (int i = 0; i < m; ++i) {
            lt(i, m) = choice[i] == 1;
            lt(m, i) = choice[i] == 2;
        }
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            for (int j = 0; j < m && ok; ++j) {
                // i < j < m, m < i < j, and i < m < j force the closing pair
                if (lt(i, j) && lt(j, m) && !lt(i, m)) ok = false;
                if (lt(m, i) && lt(i, j) && !lt(m, j)) ok = false;
                if (lt(i, m) && lt(m, j) && !lt(i, j)) ok = false;
            }
        }
        if (ok) {
            extend(lt, m + 1, n, ids, visit);
        }
        int pos = 0;
        while (pos < m && ++choice[pos] == 3) {
            choice[pos++] = 0;
        }
        if (pos == m) {
            break;
        }
    }
    for (int i = 0; i <= m; ++i) {
        lt(i, m) = false;
        lt(m, i) = false;
    }
}

} // namespace

void for_each_poset(int n, const std::function<void(const Poset&)>& visit) {
    if (n < 0) {
        throw Error(ErrorCode::InvalidSize, "negative size");
    }
    if (n > kMaxEnumerationSize) {
        throw Error(ErrorCode::SizeTooLarge, "enumeration supports at most 6 elements");
    }
    std::vector<ElementId> ids;
    for (int i = 0; i < n; ++i) {
        ids.emplace_back(1, static_cast<char>('a' + i));
    }
    RelationMatrix lt = RelationMatrix::Constant(n, n, false);
    extend(lt, 0, n, ids, visit);
}

std::vector<Poset> enumerate_posets(int n) {
    std::vector<Poset> out;
    for_each_poset(n, [&](const Poset& p) { out.push_back(p); });
    return out;
}

} // namespace intervalk
