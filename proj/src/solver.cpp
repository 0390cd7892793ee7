#include "intervalk/solver.hpp"

#include <algorithm>
#include <unordered_set>

namespace intervalk {

std::vector<std::size_t> NegativeCycle::vertices() const {
    std::vector<std::size_t> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs) {
        out.push_back(a.from);
    }
    return out;
}

namespace {

constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);

NegativeCycle make_cycle(std::vector<Arc> arcs) {
    // Rotate so the walk starts at its lowest-indexed vertex.
    auto first = std::min_element(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.from < b.from; });
    std::rotate(arcs.begin(), first, arcs.end());
    NegativeCycle c;
    for (const Arc& a : arcs) {
        c.total_weight += a.weight;
    }
    c.arcs = std::move(arcs);
    return c;
}

// Walks predecessor arcs back from a vertex that was still relaxing after
// |V| passes; the predecessor graph then contains a cycle.
std::optional<NegativeCycle> cycle_from_predecessors(const WeightedDigraph& g, const std::vector<std::size_t>& pred,
                                                     std::size_t start) {
    const auto& arcs = g.arcs();
    std::size_t v = start;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (pred[v] == kNoArc) {
            return std::nullopt;
        }
        v = arcs[pred[v]].from;
    }
    std::vector<Arc> cycle;
    std::size_t u = v;
    do {
        if (pred[u] == kNoArc || cycle.size() > g.vertex_count()) {
            return std::nullopt;
        }
        cycle.push_back(arcs[pred[u]]);
        u = arcs[pred[u]].from;
    } while (u != v);
    std::reverse(cycle.begin(), cycle.end());
    NegativeCycle c = make_cycle(std::move(cycle));
    if (c.total_weight >= 0) {
        return std::nullopt;
    }
    return c;
}

} // namespace

FeasibilityResult find_potential(const WeightedDigraph& g) {
    const std::size_t nv = g.vertex_count();
    const auto& arcs = g.arcs();
    PotentialVector dist = PotentialVector::Zero(static_cast<Eigen::Index>(nv));
    std::vector<std::size_t> pred(nv, kNoArc);

    std::size_t last_relaxed = kNoArc;
    for (std::size_t pass = 0; pass == 0 || pass < nv; ++pass) {
        last_relaxed = kNoArc;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const Arc& a = arcs[i];
            const Weight cand = dist(a.from) + a.weight;
            if (cand < dist(a.to)) {
                dist(a.to) = cand;
                pred[a.to] = i;
                last_relaxed = a.to;
            }
        }
        if (last_relaxed == kNoArc) {
            return Potential{std::move(dist)};
        }
    }
    if (auto c = cycle_from_predecessors(g, pred, last_relaxed)) {
        return NegativeCycleDetected{std::move(*c)};
    }
    // Not expected; the exact recurrence always recovers a witness.
    auto c = min_arc_negative_cycle_dp(g);
    if (!c) {
        throw Error(ErrorCode::NonMinimalCycle, "relaxation did not settle but no negative cycle was found");
    }
    return NegativeCycleDetected{std::move(*c)};
}

WalkMatrix<Weight> weight_matrix(const WeightedDigraph& g) {
    const auto nv = static_cast<Eigen::Index>(g.vertex_count());
    WalkMatrix<Weight> w = WalkMatrix<Weight>::Constant(nv, nv, unreachable<Weight>());
    for (const Arc& a : g.arcs()) {
        w(a.from, a.to) = a.weight;
    }
    return w;
}

std::optional<NegativeCycle> min_arc_negative_cycle_dp(const WeightedDigraph& g) {
    const auto nv = static_cast<Eigen::Index>(g.vertex_count());
    const WalkMatrix<Weight> w = weight_matrix(g);

    // walk(s, v) after step t = min weight of a walk s -> v with exactly t arcs.
    WalkMatrix<Weight> walk = w;
    std::vector<IndexMatrix> via(2); // via[t] for t >= 2; slots 0 and 1 unused
    for (Eigen::Index t = 1; t <= nv; ++t) {
        if (t > 1) {
            IndexMatrix step_via;
            walk = min_plus(walk, w, step_via);
            via.push_back(std::move(step_via));
        }
        for (Eigen::Index s = 0; s < nv; ++s) {
            if (walk(s, s) == unreachable<Weight>() || walk(s, s) >= 0) {
                continue;
            }
            std::vector<Arc> arcs;
            auto v = s;
            for (Eigen::Index step = t; step >= 1; --step) {
                const Eigen::Index u = step == 1 ? s : via[static_cast<std::size_t>(step)](s, v);
                auto arc = g.arc_between(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
                if (!arc) {
                    throw Error(ErrorCode::NonMinimalCycle, "walk reconstruction used a missing arc");
                }
                arcs.push_back(*arc);
                v = u;
            }
            std::reverse(arcs.begin(), arcs.end());
            NegativeCycle c = make_cycle(std::move(arcs));
            std::unordered_set<std::size_t> seen;
            for (std::size_t x : c.vertices()) {
                if (!seen.insert(x).second) {
                    throw Error(ErrorCode::NonMinimalCycle, "fewest-arc negative closed walk is not simple");
                }
            }
            if (c.total_weight != walk(s, s)) {
                throw Error(ErrorCode::NonMinimalCycle, "reconstructed walk weight disagrees with recurrence");
            }
            return c;
        }
    }
    return std::nullopt;
}

std::optional<NegativeCycle> min_arc_negative_cycle(const WeightedDigraph& g) {
    if (std::holds_alternative<Potential>(find_potential(g))) {
        return std::nullopt;
    }
    auto c = min_arc_negative_cycle_dp(g);
    if (!c) {
        throw Error(ErrorCode::NonMinimalCycle, "relaxation found a negative cycle but the recurrence did not");
    }
    return c;
}

bool is_potential(const WeightedDigraph& g, const PotentialVector& value) {
    if (value.size() != static_cast<Eigen::Index>(g.vertex_count())) {
        return false;
    }
    return std::all_of(g.arcs().begin(), g.arcs().end(),
                       [&](const Arc& a) { return value(a.to) - value(a.from) <= a.weight; });
}

bool is_valid_negative_cycle(const WeightedDigraph& g, const NegativeCycle& c) {
    if (c.arcs.empty()) {
        return false;
    }
    Weight total = 0;
    std::unordered_set<std::size_t> seen;
    for (std::size_t i = 0; i < c.arcs.size(); ++i) {
        const Arc& a = c.arcs[i];
        const Arc& next = c.arcs[(i + 1) % c.arcs.size()];
        if (a.to != next.from || !seen.insert(a.from).second) {
            return false;
        }
        auto present = g.arc_between(a.from, a.to);
        if (!present || !(*present == a)) {
            return false;
        }
        total += a.weight;
    }
    return total == c.total_weight && total < 0;
}

} // namespace intervalk
