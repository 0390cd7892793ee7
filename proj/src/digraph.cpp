#include "intervalk/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <ostream>

namespace intervalk {

std::string_view to_string(ArcKind kind) {
    switch (kind) {
    case ArcKind::EpsNeg: return "eps-neg";
    case ArcKind::Zero: return "zero";
    case ArcKind::MinusOne: return "minus-one";
    case ArcKind::PlusK: return "plus-k";
    }
    return "unknown";
}

Weight default_scale(std::size_t element_count) {
    return 2 * static_cast<Weight>(element_count) + 1;
}

WeightedDigraph::WeightedDigraph(std::size_t element_count, Weight scale, int lower, int upper, std::vector<Arc> arcs)
    : element_count_(element_count), scale_(scale), lower_(lower), upper_(upper), arcs_(std::move(arcs)),
      out_(2 * element_count) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        out_.at(arcs_[i].from).push_back(i);
        max_abs_weight_ = std::max(max_abs_weight_, arcs_[i].weight < 0 ? -arcs_[i].weight : arcs_[i].weight);
    }
    for (auto& group : out_) {
        std::sort(group.begin(), group.end(), [this](std::size_t a, std::size_t b) { return arcs_[a].to < arcs_[b].to; });
        for (std::size_t i = 1; i < group.size(); ++i) {
            if (arcs_[group[i - 1]].to == arcs_[group[i]].to) {
                throw Error(ErrorCode::InvalidSize, "parallel arcs in length-bound digraph");
            }
        }
    }
}

std::optional<Arc> WeightedDigraph::arc_between(std::size_t u, std::size_t v) const {
    const auto& group = out_.at(u);
    auto it = std::lower_bound(group.begin(), group.end(), v,
                               [this](std::size_t a, std::size_t target) { return arcs_[a].to < target; });
    if (it == group.end() || arcs_[*it].to != v) {
        return std::nullopt;
    }
    return arcs_[*it];
}

VertexId WeightedDigraph::vertex(std::size_t v) const {
    if (v < element_count_) {
        return {Side::Left, v};
    }
    return {Side::Right, v - element_count_};
}

namespace {

WeightedDigraph build(const Poset& p, int lower, int upper, Weight scale) {
    const std::size_t n = p.size();
    if (scale <= 2 * static_cast<Weight>(n)) {
        throw Error(ErrorCode::InvalidScale, "scale must exceed twice the element count");
    }
    // Walks of up to 2|V| arcs must fit with room to spare.
    const Weight bound = std::max<Weight>(upper, lower) * scale;
    const Weight walk_arcs = 4 * static_cast<Weight>(n) + 1;
    if (bound > std::numeric_limits<Weight>::max() / 4 / walk_arcs) {
        throw Error(ErrorCode::InvalidScale, "weights would overflow 64-bit walk sums");
    }

    std::vector<Arc> arcs;
    arcs.reserve(n * n + 2 * n);
    auto left = [](std::size_t x) { return x; };
    auto right = [n](std::size_t x) { return n + x; };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (p.less(x, y)) {
                arcs.push_back({left(y), right(x), ArcKind::EpsNeg, -1});
            } else if (p.incomparable(x, y)) {
                arcs.push_back({right(x), left(y), ArcKind::Zero, 0});
            }
        }
        arcs.push_back({right(x), left(x), ArcKind::MinusOne, -static_cast<Weight>(lower) * scale});
        arcs.push_back({left(x), right(x), ArcKind::PlusK, static_cast<Weight>(upper) * scale});
    }
    return WeightedDigraph(n, scale, lower, upper, std::move(arcs));
}

} // namespace

WeightedDigraph build_gpk(const Poset& p, int k) {
    return build_gpk(p, k, default_scale(p.size()));
}

WeightedDigraph build_gpk(const Poset& p, int k, Weight scale) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidK, "k must be at least 1");
    }
    return build(p, 1, k, scale);
}

WeightedDigraph build_gmn(const Poset& p, int m, int n) {
    return build_gmn(p, m, n, default_scale(p.size()));
}

WeightedDigraph build_gmn(const Poset& p, int m, int n, Weight scale) {
    if (m < 1 || n < m) {
        throw Error(ErrorCode::InvalidBounds, "length bounds must satisfy 1 <= m <= n");
    }
    return build(p, m, n, scale);
}

std::size_t expected_arc_count(const Poset& p) {
    const std::size_t n = p.size();
    const std::size_t comparable = p.comparable_pair_count();
    const std::size_t ordered_pairs = n == 0 ? 0 : n * (n - 1);
    const std::size_t incomparable = ordered_pairs - 2 * comparable;
    return comparable + incomparable + 2 * n;
}

std::string vertex_name(const WeightedDigraph& g, const Poset& p, std::size_t v) {
    const VertexId id = g.vertex(v);
    return (id.side == Side::Left ? "l:" : "r:") + p.element(id.element);
}

void write_digraph(std::ostream& out, const WeightedDigraph& g, const Poset& p) {
    out << "# vertices " << g.vertex_count() << " arcs " << g.arcs().size() << " scale " << g.scale() << " bounds "
        << g.lower() << ' ' << g.upper() << '\n';
    for (const Arc& a : g.arcs()) {
        out << vertex_name(g, p, a.from) << ' ' << vertex_name(g, p, a.to) << ' ' << a.weight << ' '
            << to_string(a.kind) << '\n';
    }
}

} // namespace intervalk
