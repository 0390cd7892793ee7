#include "intervalk/certify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace intervalk {

ValidationResult validate_representation(const Poset& p, const IntervalRepresentation& rep, Rational lo, Rational hi) {
    if (rep.size() != p.size() || rep.left.size() != static_cast<Eigen::Index>(rep.size()) ||
        rep.right.size() != static_cast<Eigen::Index>(rep.size())) {
        throw Error(ErrorCode::ElementMismatch, "representation does not cover exactly the poset's elements");
    }
    if (rep.scale <= 0) {
        throw Error(ErrorCode::InvalidScale, "representation scale must be positive");
    }
    // slot[x] = row of element x (poset order) in rep
    std::vector<std::size_t> slot(p.size(), p.size());
    for (std::size_t i = 0; i < rep.size(); ++i) {
        auto x = p.find(rep.elements[i]);
        if (!x || slot[*x] != p.size()) {
            throw Error(ErrorCode::ElementMismatch, "representation element '" + rep.elements[i] +
                                                        "' is unknown or repeated");
        }
        slot[*x] = i;
    }

    for (std::size_t x = 0; x < p.size(); ++x) {
        const Rational len = rep.length(slot[x]);
        if (len < lo || len > hi || len < 0) {
            std::ostringstream msg;
            msg << "length of '" << p.element(x) << "' is " << len << ", outside [" << lo << ", " << hi << "]";
            return Violation{msg.str()};
        }
    }
    for (std::size_t x = 0; x < p.size(); ++x) {
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (x == y) {
                continue;
            }
            const bool left_of = rep.right(static_cast<Eigen::Index>(slot[x])) <
                                 rep.left(static_cast<Eigen::Index>(slot[y]));
            if (left_of != p.less(x, y)) {
                std::ostringstream msg;
                msg << "pair ('" << p.element(x) << "', '" << p.element(y) << "'): "
                    << (p.less(x, y) ? "ordered but intervals are not strictly left"
                                     : "not ordered but interval lies strictly left");
                return Violation{msg.str()};
            }
        }
    }
    return std::nullopt;
}

IntervalRepresentation representation_from_potential(const Poset& p, const WeightedDigraph& g,
                                                     const Potential& potential) {
    if (g.element_count() != p.size() || !is_potential(g, potential.value)) {
        throw Error(ErrorCode::InfeasiblePotential, "potential violates an arc constraint");
    }
    const auto n = static_cast<Eigen::Index>(p.size());
    IntervalRepresentation rep;
    rep.elements = p.elements();
    rep.scale = g.scale();
    rep.left = potential.value.head(n);
    rep.right = potential.value.tail(n);
    if (auto v = validate_representation(p, rep, Rational(g.lower()), Rational(g.upper()))) {
        throw Error(ErrorCode::InfeasiblePotential, "potential yields an invalid representation: " + v->message);
    }
    return rep;
}

IntervalRepresentation representation_from_potential(const Poset& p, int k, const Potential& potential) {
    return representation_from_potential(p, build_gpk(p, k), potential);
}

namespace {

[[noreturn]] void non_minimal(const std::string& why) {
    throw Error(ErrorCode::NonMinimalCycle, "cycle is not a fewest-arc negative cycle: " + why);
}

} // namespace

ForbiddenSubposet extract_forbidden(const Poset& p, int k, const NegativeCycle& cycle) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidK, "k must be at least 1");
    }
    const std::size_t n = p.size();
    const std::size_t len = cycle.arc_count();
    if (len < 4 || len % 2 != 0) {
        non_minimal("arc count must be even and at least 4");
    }
    std::vector<Arc> arcs = cycle.arcs;
    auto first = std::min_element(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.from < b.from; });
    std::rotate(arcs.begin(), first, arcs.end());

    auto at = [&](std::size_t i) -> const Arc& { return arcs[i % len]; };
    auto elem = [n](std::size_t v) { return v < n ? v : v - n; };
    auto kind_is = [&](std::size_t i, ArcKind kind) { return at(i).kind == kind; };

    // (-eps, 0, -eps): l_a -> r_b -> l_c -> r_d with b < a, b || c, d < c.
    for (std::size_t i = 0; i < len; ++i) {
        if (!(kind_is(i, ArcKind::EpsNeg) && kind_is(i + 1, ArcKind::Zero) && kind_is(i + 2, ArcKind::EpsNeg))) {
            continue;
        }
        const std::size_t a = elem(at(i).from);
        const std::size_t b = elem(at(i).to);
        const std::size_t c = elem(at(i + 2).from);
        const std::size_t d = elem(at(i + 2).to);
        if (!p.incomparable(a, d)) {
            non_minimal("(-eps, 0, -eps) segment can be shortcut");
        }
        auto f = ForbiddenSubposet::two_plus_two(p.element(b), p.element(a), p.element(d), p.element(c));
        if (!verify_forbidden(p, f, k)) {
            non_minimal("(-eps, 0, -eps) segment does not induce 2+2");
        }
        return f;
    }

    // l_x1 -k-> r_x2 -0-> l_x3 -eps-> r_x4 (-1-> l -eps-> r) x k
    const auto ku = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < len; ++i) {
        if (!kind_is(i, ArcKind::PlusK)) {
            continue;
        }
        if (len < 2 * ku + 4) {
            non_minimal("too short to carry k unit arcs after a length arc");
        }
        bool shape = kind_is(i + 1, ArcKind::Zero) && kind_is(i + 2, ArcKind::EpsNeg);
        for (std::size_t j = 1; j <= ku && shape; ++j) {
            shape = kind_is(i + 1 + 2 * j, ArcKind::MinusOne) && kind_is(i + 2 + 2 * j, ArcKind::EpsNeg);
        }
        if (!shape) {
            continue;
        }
        const std::size_t lone = elem(at(i).from);
        std::vector<std::size_t> top_down;
        for (std::size_t j = 0; j <= ku; ++j) {
            top_down.push_back(elem(at(i + 2 + 2 * j).from));
        }
        top_down.push_back(elem(at(i + 2 + 2 * ku).to));
        if (!p.incomparable(lone, top_down.front())) {
            non_minimal("zero arc joins comparable elements");
        }
        if (!p.incomparable(lone, top_down.back())) {
            non_minimal("length-arc segment can be shortcut");
        }
        std::vector<ElementId> chain;
        for (auto it = top_down.rbegin(); it != top_down.rend(); ++it) {
            chain.push_back(p.element(*it));
        }
        auto f = ForbiddenSubposet::chain_plus_one(std::move(chain), p.element(lone));
        if (!verify_forbidden(p, f, k)) {
            non_minimal("length-arc segment does not induce a (k+2)+1");
        }
        return f;
    }
    non_minimal("neither a (-eps, 0, -eps) segment nor a length arc followed by k unit arcs");
}

Certificate certify(const Poset& p, int k, const CertifyOptions& options) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidK, "k must be at least 1");
    }
    if (options.scale_multiplier < 1) {
        throw Error(ErrorCode::InvalidScale, "scale multiplier must be positive");
    }
    const WeightedDigraph g = build_gpk(p, k, options.scale_multiplier * default_scale(p.size()));
    FeasibilityResult feasible = find_potential(g);
    if (auto* potential = std::get_if<Potential>(&feasible)) {
        return Certificate{representation_from_potential(p, g, *potential)};
    }
    auto cycle = min_arc_negative_cycle_dp(g);
    if (!cycle) {
        throw Error(ErrorCode::NonMinimalCycle, "relaxation found a negative cycle but the recurrence did not");
    }
    ForbiddenSubposet f = extract_forbidden(p, k, *cycle);
    if (!verify_forbidden(p, f, k)) {
        throw Error(ErrorCode::NonMinimalCycle, "extracted witness failed verification");
    }
    return Certificate{std::move(f)};
}

GeneralResult represent_general(const Poset& p, int m, int n) {
    const WeightedDigraph g = build_gmn(p, m, n);
    FeasibilityResult feasible = find_potential(g);
    if (auto* potential = std::get_if<Potential>(&feasible)) {
        return representation_from_potential(p, g, *potential);
    }
    return NoRepresentation{std::get<NegativeCycleDetected>(std::move(feasible)).witness};
}

} // namespace intervalk
