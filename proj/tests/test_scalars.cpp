#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("cyclotomic arithmetic identities") {
    SUBCASE("zeta_4 squared is -1") {
        Cyclo i = Cyclo::zeta(4);
        CHECK(i * i == Cyclo(4, Rat(-1)));
    }
    SUBCASE("1 + zeta_3 + zeta_3^2 = 0") {
        Cyclo z = Cyclo::zeta(3);
        CHECK((Cyclo(3, Rat(1)) + z + z * z).is_zero());
    }
    SUBCASE("(1 + zeta_5)/(1 + zeta_5) = 1") {
        Cyclo u = Cyclo(5, Rat(1)) + Cyclo::zeta(5);
        CHECK((u / u).is_one());
    }
    SUBCASE("division by zero") {
        CHECK_THROWS_AS(Cyclo(4, Rat(1)) / Cyclo(4), Error);
    }
}

TEST_CASE("field axioms on random samples") {
    Rng rng(101);
    for (int it = 0; it < 60; ++it) {
        Cyclo a = rng.cyclo(12), b = rng.cyclo(12), c = rng.cyclo(12);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("q_linear_dependence examples") {
    SUBCASE("1 and zeta_4 are independent") {
        auto res = q_linear_dependence({Cyclo(4, Rat(1)), Cyclo::zeta(4)});
        CHECK_FALSE(res.dependent);
        CHECK(res.relation.empty());
    }
    SUBCASE("1, zeta_3, zeta_3^2 give relation (1,1,1)") {
        Cyclo z = Cyclo::zeta(3);
        auto res = q_linear_dependence({Cyclo(3, Rat(1)), z, z * z});
        REQUIRE(res.dependent);
        CHECK(res.relation == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    }
    SUBCASE("2 and 3 give relation (3,-2)") {
        auto res = q_linear_dependence({Cyclo(12, Rat(2)), Cyclo(12, Rat(3))});
        REQUIRE(res.dependent);
        CHECK(res.relation == std::vector<Rat>{Rat(3), Rat(-2)});
    }
}

TEST_CASE("dependence verdicts verify against an independent rank oracle") {
    Rng rng(202);
    for (int it = 0; it < 40; ++it) {
        std::vector<Cyclo> cs;
        int m = static_cast<int>(rng.intval(1, 5));
        for (int i = 0; i < m; ++i) cs.push_back(rng.cyclo(12));
        auto res = q_linear_dependence(cs);
        if (res.dependent) {
            REQUIRE(res.relation.size() == cs.size());
            Cyclo sum(12);
            bool nontrivial = false;
            for (size_t i = 0; i < cs.size(); ++i) {
                sum = sum + cs[i] * Cyclo(12, res.relation[i]);
                nontrivial = nontrivial || res.relation[i] != 0;
            }
            CHECK(nontrivial);
            CHECK(sum.is_zero());
        } else {
            // full column rank per naive rational elimination
            std::vector<std::vector<Cyclo>> mat;
            mat.push_back(cs);
            auto flat = flatten_cyclo_matrix(mat, 12);
            // flatten produced rows = coordinates; columns = the cs
            CHECK(naive_rank(flat) == cs.size());
        }
    }
}

TEST_CASE("degree_obstruction examples and properties") {
    Cyclo one(12, Rat(1));
    CHECK(degree_obstruction({one}, 2).obstructed);
    CHECK_FALSE(degree_obstruction({one}, 3).obstructed);
    CHECK_FALSE(degree_obstruction({one}, 4).obstructed);
    CHECK_FALSE(degree_obstruction({one}, 6).obstructed);

    SUBCASE("n must divide N") {
        CHECK_THROWS_AS(degree_obstruction({one}, 5), Error);
    }

    SUBCASE("n = 2 always obstructed for nonzero constants") {
        Rng rng(303);
        for (int it = 0; it < 30; ++it) {
            std::vector<Cyclo> cs;
            int m = static_cast<int>(rng.intval(1, 3));
            for (int i = 0; i < m; ++i) cs.push_back(rng.nonzero_cyclo(12));
            auto res = degree_obstruction(cs, 2);
            CHECK(res.obstructed);
            // the witness relation must evaluate to exactly zero
            Cyclo zeta = Cyclo::primitive_root(12, 2);
            Cyclo sum(12);
            for (size_t i = 0; i < cs.size(); ++i)
                sum = sum + cs[i] * Cyclo(12, res.relation[i]);
            for (size_t i = 0; i < cs.size(); ++i)
                sum = sum + zeta * cs[i] * Cyclo(12, res.relation[cs.size() + i]);
            CHECK(sum.is_zero());
        }
    }
}
