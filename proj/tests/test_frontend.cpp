#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "integrabilis/commands.hpp"
#include "integrabilis/parse.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {
const unsigned N = 12;
RatFn X() { return RatFn::variable(N, Var::x); }
RatFn Y() { return RatFn::variable(N, Var::y); }
RatFn C(long v) { return RatFn::constant(N, Rat(v)); }
} // namespace

TEST_CASE("parse examples") {
    CHECK(parse_ratfn("x^2 - y", N) == X() * X() - Y());
    ExtDescriptor d = ExtDescriptor::make(2, X());
    ExtElem expect(d, {C(0), C(1) / (Y() * Y() - X())});
    CHECK(parse_ext("1/(y^2 - x) * l", d) == expect);
    CHECK_THROWS_AS(parse_ratfn("l + 1", N), Error);
    try {
        parse_ratfn("l + 1", N);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Context);
    }
}

TEST_CASE("parser details") {
    CHECK(parse_ratfn("x^-2", N) == C(1) / (X() * X()));
    CHECK(parse_ratfn("-x^2", N) == -(X() * X())); // ^ binds above unary -
    CHECK(parse_ratfn("1/2*x", N) == X() / C(2));  // left-assoc * /
    CHECK(parse_ratfn("z^3", N) ==
          RatFn::constant(N, Cyclo::zeta(N).pow(3)));
    CHECK(parse_cyclo("1/2 + 3*z^2", N) ==
          Cyclo(N, make_rat(1, 2)) + Cyclo::zeta(N).pow(2) * Cyclo(N, Rat(3)));
    CHECK_THROWS_AS(parse_cyclo("x + 1", N), Error);

    SUBCASE("syntax errors carry 1-based columns") {
        try {
            parse_ratfn("x + $", N);
            FAIL("expected a syntax error");
        } catch (const SyntaxError& e) {
            CHECK(e.column() == 5);
        }
        try {
            parse_ratfn("x +", N);
            FAIL("expected a syntax error");
        } catch (const SyntaxError& e) {
            CHECK(e.column() == 4);
        }
        CHECK_THROWS_AS(parse_ratfn("", N), SyntaxError);
        CHECK_THROWS_AS(parse_ratfn("x ^ y", N), SyntaxError);
        CHECK_THROWS_AS(parse_ratfn("(x", N), SyntaxError);
    }
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(909);
    SUBCASE("Cyclo") {
        for (int it = 0; it < 30; ++it) {
            Cyclo c = rng.cyclo(N);
            CHECK(parse_cyclo(to_string(c), N) == c);
        }
    }
    SUBCASE("MPoly and RatFn") {
        for (int it = 0; it < 30; ++it) {
            MPoly p = rng.poly(N, 3, 3);
            CHECK(parse_ratfn(to_string(p), N) == RatFn(p));
            RatFn f = rng.ratfn(N);
            CHECK(parse_ratfn(to_string(f), N) == f);
        }
    }
    SUBCASE("ExtElem") {
        ExtDescriptor d = ExtDescriptor::make(3, X() + Y());
        for (int it = 0; it < 20; ++it) {
            ExtElem a = rng.ext(d, 2);
            CHECK(parse_ext(to_string(a), d) == a);
        }
    }
    SUBCASE("PSeries") {
        for (int it = 0; it < 20; ++it) {
            PSeries s(N, 2);
            if (rng.intval(0, 1)) s = s.with_bound(-6);
            for (int t = 0; t < 3; ++t) s.add_term(rng.intval(-5, 5), rng.ratfn(N, 1));
            CHECK(pseries_from_json(N, Json::parse(to_string(s))) == s);
        }
    }
}

TEST_CASE("run_command examples") {
    SUBCASE("construct-quadratic worked example verifies fully") {
        Json req{{"command", "construct-quadratic"}, {"k", "x"}, {"h", "0"},
                 {"terms", Json::array({Json{{"c", "1"}, {"g", "y"}}})}};
        auto out = run_command(req);
        REQUIRE(out.exit_code == 0);
        const Json& ver = out.document["result"]["verification"];
        CHECK(ver["all_ok"] == true);
        CHECK(out.document["result"]["omega"]["A"] == "(y)/(x*y^2 - x^2)");
        CHECK(out.document["result"]["omega"]["B"] == "(-2)/(y^2 - x)");
    }
    SUBCASE("obstruction verdicts") {
        Json req{{"command", "obstruction"}, {"n", 2u},
                 {"constants", Json::array({"1"})}};
        auto out = run_command(req);
        REQUIRE(out.exit_code == 0);
        CHECK(out.document["result"]["verdict"] == "Obstructed");
        req["n"] = 3u;
        CHECK(run_command(req).document["result"]["verdict"] == "Unobstructed");
    }
    SUBCASE("search-rfi finds y^2 / x") {
        Json req{{"command", "search-rfi"}, {"P", "y"}, {"Q", "-2*x"}, {"d", 2u}};
        auto out = run_command(req);
        REQUIRE(out.exit_code == 0);
        CHECK(out.document["result"]["kind"] == "Found");
        CHECK(out.document["result"]["A"] == "y^2");
        CHECK(out.document["result"]["B"] == "x");
        CHECK(out.document["result"]["residual"] == "0");
    }
    SUBCASE("exit codes: domain error 1, usage error 2") {
        Json domain{{"command", "construct-quadratic"}, {"k", "x"}, {"h", "0"},
                    {"terms", Json::array()}};
        auto out1 = run_command(domain); // GammaZero
        CHECK(out1.exit_code == 1);
        CHECK(out1.document["error"]["code"] == "GammaZero");
        auto out2 = run_command(Json{{"command", "no-such-thing"}});
        CHECK(out2.exit_code == 2);
    }
    SUBCASE("byte-identical output for identical requests") {
        Json req{{"command", "construct-quadratic"}, {"k", "x"}, {"h", "1"},
                 {"terms", Json::array({Json{{"c", "1"}, {"g", "y"}}})}};
        CHECK(run_command(req).document.dump() == run_command(req).document.dump());
    }
}

TEST_CASE("text rendering is flat and deterministic") {
    Json req{{"command", "obstruction"}, {"n", 2u}, {"constants", Json::array({"1"})}};
    std::string text = render_text(run_command(req).document);
    CHECK(text.find("result.verdict = Obstructed") != std::string::npos);
    CHECK(text.find("input.constants[0] = 1") != std::string::npos);
}
