#include "intervalk/io.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace intervalk {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

bool starts_with_brace(std::string_view text) {
    const auto b = text.find_first_not_of(" \t\r\n");
    return b != std::string_view::npos && text[b] == '{';
}

RelationMode parse_mode(std::string_view word, std::size_t line) {
    if (word == "raw") {
        return RelationMode::Raw;
    }
    if (word == "covers") {
        return RelationMode::Covers;
    }
    parse_error(line, "unknown mode '" + std::string(word) + "' (expected raw or covers)");
}

Poset poset_from_json(const nlohmann::json& j) {
    std::vector<ElementId> elements = j.at("elements").get<std::vector<ElementId>>();
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (const auto& r : j.value("relations", nlohmann::json::array())) {
        pairs.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
    }
    const RelationMode mode = parse_mode(j.value("mode", std::string("raw")), 0);
    return poset_from_relations(elements, pairs, mode);
}

Rational parse_rational(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    try {
        const auto slash = tok.find('/');
        std::size_t used = 0;
        const std::string num(tok.substr(0, slash));
        const std::int64_t p = std::stoll(num, &used);
        if (used != num.size()) {
            throw std::invalid_argument("trailing");
        }
        std::int64_t q = 1;
        if (slash != std::string_view::npos) {
            const std::string den(tok.substr(slash + 1));
            q = std::stoll(den, &used);
            if (used != den.size() || q <= 0) {
                throw std::invalid_argument("denominator");
            }
        }
        return {p, q};
    } catch (const std::logic_error&) {
        parse_error(line, "bad endpoint '" + std::string(tok) + "'");
    }
}

IntervalRepresentation from_rationals(std::vector<ElementId> ids, const std::vector<std::pair<Rational, Rational>>& ends) {
    std::int64_t scale = 1;
    for (const auto& [l, r] : ends) {
        scale = std::lcm(scale, l.denominator());
        scale = std::lcm(scale, r.denominator());
    }
    IntervalRepresentation rep;
    rep.elements = std::move(ids);
    rep.scale = scale;
    rep.left.resize(static_cast<Eigen::Index>(ends.size()));
    rep.right.resize(static_cast<Eigen::Index>(ends.size()));
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const auto& [l, r] = ends[i];
        rep.left(static_cast<Eigen::Index>(i)) = l.numerator() * (scale / l.denominator());
        rep.right(static_cast<Eigen::Index>(i)) = r.numerator() * (scale / r.denominator());
    }
    return rep;
}

} // namespace

Poset parse_poset(std::string_view text) {
    if (starts_with_brace(text)) {
        try {
            return poset_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::Parse, std::string("json: ") + e.what());
        }
    }

    std::optional<std::vector<ElementId>> elements;
    std::vector<std::pair<ElementId, ElementId>> pairs;
    RelationMode mode = RelationMode::Raw;
    bool mode_seen = false;
    std::unordered_set<std::string> known;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.rfind("elements:", 0) == 0) {
            if (elements) {
                parse_error(line_no, "duplicate 'elements:' header");
            }
            elements = split_ws(line.substr(9));
            for (const auto& id : *elements) {
                if (id.find('<') != std::string::npos || id.find(':') != std::string::npos) {
                    parse_error(line_no, "invalid element id '" + id + "'");
                }
                if (!known.insert(id).second) {
                    parse_error(line_no, "duplicate element '" + id + "'");
                }
            }
            continue;
        }
        if (line.rfind("mode:", 0) == 0) {
            if (mode_seen) {
                parse_error(line_no, "duplicate 'mode:' header");
            }
            mode_seen = true;
            mode = parse_mode(trim(line.substr(5)), line_no);
            continue;
        }
        const auto lt = line.find('<');
        if (lt == std::string_view::npos) {
            parse_error(line_no, "expected 'a < b', got '" + std::string(line) + "'");
        }
        if (!elements) {
            parse_error(line_no, "relation before 'elements:' header");
        }
        auto lhs = split_ws(line.substr(0, lt));
        auto rhs = split_ws(line.substr(lt + 1));
        if (lhs.size() != 1 || rhs.size() != 1) {
            parse_error(line_no, "expected exactly one element on each side of '<' in '" + std::string(line) + "'");
        }
        for (const auto* id : {&lhs[0], &rhs[0]}) {
            if (!known.count(*id)) {
                parse_error(line_no, "unknown element '" + *id + "'");
            }
        }
        pairs.emplace_back(lhs[0], rhs[0]);
    }
    if (!elements) {
        elements.emplace();
    }
    return poset_from_relations(*elements, pairs, mode);
}

std::string read_text_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    }
    buf << in.rdbuf();
    return buf.str();
}

Poset read_poset_file(const std::string& path) {
    return parse_poset(read_text_file(path));
}

void write_poset(std::ostream& out, const Poset& p) {
    out << "elements:";
    for (const auto& id : p.elements()) {
        out << ' ' << id;
    }
    out << "\nmode: covers\n";
    for (const auto& [x, y] : p.cover_pairs()) {
        out << p.element(x) << " < " << p.element(y) << '\n';
    }
}

nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& [x, y] : p.cover_pairs()) {
        rel.push_back({p.element(x), p.element(y)});
    }
    return {{"elements", p.elements()}, {"mode", "covers"}, {"relations", rel}};
}

void write_representation(std::ostream& out, const IntervalRepresentation& rep, const TextOptions& opts) {
    out << "result: representation\n";
    out << "scale: " << rep.scale << '\n';
    for (std::size_t i = 0; i < rep.size(); ++i) {
        const auto l = rep.left(static_cast<Eigen::Index>(i));
        const auto r = rep.right(static_cast<Eigen::Index>(i));
        out << rep.elements[i] << ": [" << l << '/' << rep.scale << ", " << r << '/' << rep.scale << ']';
        if (opts.decimal) {
            const auto s = static_cast<double>(rep.scale);
            out << " ~ [" << std::setprecision(6) << static_cast<double>(l) / s << ", "
                << static_cast<double>(r) / s << ']';
        }
        out << '\n';
    }
}

void write_forbidden(std::ostream& out, const ForbiddenSubposet& f) {
    out << "result: forbidden\n";
    out << "kind: " << to_string(f.kind) << '\n';
    if (f.kind == ForbiddenKind::TwoPlusTwo) {
        out << "chain: " << f.chain.at(0) << ' ' << f.chain.at(1) << '\n';
        out << "chain: " << f.chain.at(2) << ' ' << f.chain.at(3) << '\n';
        return;
    }
    out << "chain:";
    for (const auto& id : f.chain) {
        out << ' ' << id;
    }
    out << "\nlone: " << f.lone << '\n';
}

void write_certificate(std::ostream& out, const Certificate& c, const TextOptions& opts) {
    if (c.representable()) {
        write_representation(out, c.representation(), opts);
    } else {
        write_forbidden(out, c.forbidden());
    }
}

nlohmann::json representation_to_json(const IntervalRepresentation& rep) {
    nlohmann::json intervals = nlohmann::json::array();
    for (std::size_t i = 0; i < rep.size(); ++i) {
        intervals.push_back({{"element", rep.elements[i]},
                             {"left", rep.left(static_cast<Eigen::Index>(i))},
                             {"right", rep.right(static_cast<Eigen::Index>(i))}});
    }
    return {{"result", "representation"}, {"scale", rep.scale}, {"intervals", intervals}};
}

nlohmann::json forbidden_to_json(const ForbiddenSubposet& f) {
    nlohmann::json j = {{"result", "forbidden"}, {"kind", to_string(f.kind)}};
    if (f.kind == ForbiddenKind::TwoPlusTwo) {
        j["chains"] = {{f.chain.at(0), f.chain.at(1)}, {f.chain.at(2), f.chain.at(3)}};
    } else {
        j["chain"] = f.chain;
        j["lone"] = f.lone;
    }
    return j;
}

nlohmann::json certificate_to_json(const Certificate& c) {
    return c.representable() ? representation_to_json(c.representation()) : forbidden_to_json(c.forbidden());
}

IntervalRepresentation parse_representation(std::string_view text) {
    std::vector<ElementId> ids;
    std::vector<std::pair<Rational, Rational>> ends;

    if (starts_with_brace(text)) {
        try {
            const auto j = nlohmann::json::parse(text);
            const std::int64_t scale = j.at("scale").get<std::int64_t>();
            if (scale <= 0) {
                throw Error(ErrorCode::Parse, "json: scale must be positive");
            }
            for (const auto& iv : j.at("intervals")) {
                ids.push_back(iv.at("element").get<std::string>());
                ends.emplace_back(Rational(iv.at("left").get<std::int64_t>(), scale),
                                  Rational(iv.at("right").get<std::int64_t>(), scale));
            }
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::Parse, std::string("json: ") + e.what());
        }
        return from_rationals(std::move(ids), ends);
    }

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty() || line.find('[') == std::string_view::npos) {
            continue;
        }
        const auto colon = line.find(':');
        const auto open = line.find('[');
        const auto comma = line.find(',', open);
        const auto close = line.find(']', open);
        if (colon == std::string_view::npos || colon > open || comma == std::string_view::npos ||
            close == std::string_view::npos || comma > close) {
            parse_error(line_no, "expected 'x: [p/q, r/s]', got '" + std::string(line) + "'");
        }
        const std::string id(trim(line.substr(0, colon)));
        if (id.empty() || split_ws(id).size() != 1) {
            parse_error(line_no, "bad element id '" + id + "'");
        }
        ids.push_back(id);
        ends.emplace_back(parse_rational(line.substr(open + 1, comma - open - 1), line_no),
                          parse_rational(line.substr(comma + 1, close - comma - 1), line_no));
    }
    return from_rationals(std::move(ids), ends);
}

} // namespace intervalk
