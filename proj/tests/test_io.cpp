#include <doctest.h>

#include <random>
#include <sstream>

#include "intervalk/io.hpp"

using namespace intervalk;

TEST_CASE("parse_poset text format") {
    const Poset p = parse_poset("# the 3+1\n"
                                "elements: a b c x\n"
                                "\n"
                                "a < b   # cover\n"
                                "b < c\n");
    CHECK(p.size() == 4);
    CHECK(p.less(p.index_of("a"), p.index_of("c")));
    CHECK(incomparable(p, "x", "b"));
}

TEST_CASE("parse_poset mode header") {
    CHECK_THROWS_AS(parse_poset("elements: a b c\nmode: covers\na < b\nb < c\na < c\n"), Error);
    CHECK(parse_poset("elements: a b c\nmode: raw\na < b\nb < c\na < c\n").comparable_pair_count() == 3);
}

TEST_CASE("parse_poset diagnostics name line and token") {
    auto message = [](std::string_view text) {
        try {
            parse_poset(text);
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("elements: a b\na < q\n") == "line 2: unknown element 'q'");
    CHECK(message("elements: a b\na b\n").rfind("line 2:", 0) == 0);
    CHECK(message("elements: a a\n") == "line 1: duplicate element 'a'");
    CHECK(message("a < b\n").rfind("line 1:", 0) == 0);
    CHECK(message("elements: a\nmode: weird\n").find("weird") != std::string::npos);
    CHECK(message("elements: a b\na < b < a\n").rfind("line 2:", 0) == 0);
}

TEST_CASE("parse_poset empty document is the empty poset") {
    CHECK(parse_poset("").size() == 0);
    CHECK(parse_poset("# nothing\nelements:\n").size() == 0);
}

TEST_CASE("parse_poset JSON mirror") {
    const Poset p = parse_poset(R"({"elements": ["a", "b", "x", "y"], "relations": [["a", "x"], ["b", "y"]]})");
    CHECK(p == make_two_plus_two());
    CHECK_THROWS_AS(parse_poset("{ not json"), Error);
}

TEST_CASE("property: written posets parse back equal") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Poset p = random_poset(static_cast<int>(rng() % 15), rng(), 2 + static_cast<int>(rng() % 3));
        std::ostringstream text;
        write_poset(text, p);
        CHECK(parse_poset(text.str()) == p);
        CHECK(parse_poset(poset_to_json(p).dump()) == p);
    }
}

TEST_CASE("certificate text and JSON carry the same fields") {
    const Poset p = make_chain_plus_one(3);
    const Certificate rep = certify(p, 2);
    std::ostringstream text;
    write_certificate(text, rep);
    const auto j = certificate_to_json(rep);
    CHECK(j["result"] == "representation");
    CHECK(text.str().find("scale: " + std::to_string(j["scale"].get<Weight>())) != std::string::npos);
    for (const auto& iv : j["intervals"]) {
        const std::string line = iv["element"].get<std::string>() + ": [" + std::to_string(iv["left"].get<Weight>()) +
                                 "/" + std::to_string(j["scale"].get<Weight>()) + ", " +
                                 std::to_string(iv["right"].get<Weight>()) + "/" +
                                 std::to_string(j["scale"].get<Weight>()) + "]";
        CHECK(text.str().find(line) != std::string::npos);
    }

    const Certificate forb = certify(p, 1);
    std::ostringstream ftext;
    write_certificate(ftext, forb);
    CHECK(ftext.str() == "result: forbidden\nkind: chain-plus-one\nchain: a1 a2 a3\nlone: x\n");
    const auto fj = certificate_to_json(forb);
    CHECK(fj["kind"] == "chain-plus-one");
    CHECK(fj["chain"] == nlohmann::json({"a1", "a2", "a3"}));
    CHECK(fj["lone"] == "x");

    std::ostringstream two;
    write_forbidden(two, ForbiddenSubposet::two_plus_two("a", "x", "b", "y"));
    CHECK(two.str() == "result: forbidden\nkind: two-plus-two\nchain: a x\nchain: b y\n");
    CHECK(forbidden_to_json(ForbiddenSubposet::two_plus_two("a", "x", "b", "y"))["chains"] ==
          nlohmann::json({{"a", "x"}, {"b", "y"}}));
}

TEST_CASE("representation round trip through text and JSON") {
    const Poset p = random_bounded_interval_order(12, 3, 8);
    const Certificate c = certify(p, 3);
    REQUIRE(c.representable());
    std::ostringstream text;
    write_representation(text, c.representation(), {true});
    const IntervalRepresentation back = parse_representation(text.str());
    REQUIRE(back.size() == c.representation().size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.left_endpoint(i) == c.representation().left_endpoint(i));
        CHECK(back.right_endpoint(i) == c.representation().right_endpoint(i));
    }
    CHECK_FALSE(validate_representation(p, back, Rational(1), Rational(3)));

    const IntervalRepresentation from_json = parse_representation(representation_to_json(c.representation()).dump());
    CHECK(from_json.left_endpoint(0) == c.representation().left_endpoint(0));
}

TEST_CASE("parse_representation brings mixed denominators together") {
    const IntervalRepresentation rep = parse_representation("a: [0, 1/2]\nb: [2/3, 5/3]\n");
    CHECK(rep.scale == 6);
    CHECK(rep.left(1) == 4);
    CHECK(rep.right(0) == 3);
    CHECK_THROWS_AS(parse_representation("a: [0, x]\n"), Error);
    CHECK_THROWS_AS(parse_representation("a: [0 1]\n"), Error);
    CHECK_THROWS_AS(parse_representation("a: [0, 1/0]\n"), Error);
}
