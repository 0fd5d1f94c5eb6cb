#include "random_util.hpp"

#include "nct/io.hpp"

#include <doctest.h>

using namespace nct;

TEST_CASE("torus element round trip") {
    testutil::Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        TorusElement a;
        for (int k = 0; k < 4; ++k) a.add_term(rng.point(5), rng.scalar());
        CHECK(torus_from_json(json::parse(to_json(a).dump())) == a);
    }
    CHECK(torus_from_json(json::parse(R"([{"n": 1, "m": -2, "c": 3}])")) ==
          TorusElement::monomial(Scalar(3), {1, -2}));
}

TEST_CASE("enveloping and bar round trips") {
    EnvElement e = EnvElement::term(lambda(), {1, 0}, {0, -1}) + EnvElement::one();
    CHECK(env_from_json(to_json(e)) == e);
    BarChain c = bar_tensor(TorusElement::monomial({1, 2}), {LatticePoint{0, 1}, LatticePoint{-1, 0}}, lambda());
    CHECK(bar_from_json(to_json(c)) == c);
}

TEST_CASE("kernel solution round trip") {
    auto s = SectorComplex::make(FiniteGroup::make(GroupName::Z3), 2);
    auto [f, g] = twisted_b2(s, TorusElement::monomial({1, 1}) + TorusElement::monomial({-2, 0}));
    KernelSolution sol = check_kernel(s, f, g);
    KernelSolution back = solution_from_json(to_json(sol));
    CHECK(back.sector.k == 2);
    CHECK(back.phi1 == f);
    CHECK(back.phi2 == g);
    CHECK(to_json(back).dump() == to_json(sol).dump());
}

TEST_CASE("malformed input") {
    auto bad = [](const char* text) { return json::parse(text); };
    CHECK_THROWS_AS(torus_from_json(bad(R"({"n": 1})")), InputError);
    CHECK_THROWS_AS(torus_from_json(bad(R"([{"n": 1, "c": 1}])")), InputError);
    CHECK_THROWS_AS(torus_from_json(bad(R"([{"n": 1.5, "m": 0, "c": 1}])")), InputError);
    CHECK_THROWS_AS(torus_from_json(bad(R"([{"n": 1, "m": 0, "c": "((("}])")), InputError);
    CHECK_THROWS_AS(bar_from_json(bad(R"({"degree": 1, "terms": [{"factors": [[0, 0]], "c": 1}]})")), InputError);
    CHECK_THROWS_AS(bar_from_json(bad(R"({"degree": 5, "terms": []})")), InputError);
    CHECK_THROWS_AS(solution_from_json(bad(R"({"group": "z5", "element": "g", "phi1": [], "phi2": []})")),
                    InputError);
    CHECK_THROWS_AS(solution_from_json(bad(R"({"group": "z2", "element": "g^3", "phi1": [], "phi2": []})")),
                    InputError);
    CHECK_THROWS_AS(solution_from_json(bad(R"({"group": "z2", "element": "g", "phi1": [{"n": 0, "m": 0, "c": 1}],
                                                "phi2": []})")),
                    KernelViolation);
}

TEST_CASE("sector JSON") {
    auto j = sector_json(SectorComplex::make(FiniteGroup::make(GroupName::Z3), 1), 0, {6});
    CHECK(j["dimension"] == 3);
    CHECK(j["basis"].size() == 3);
    CHECK(j["sector"] == "g^1");
    CHECK_THROWS(sector_json(SectorComplex::make(FiniteGroup::make(GroupName::Z3), 1), 3, {6}));
}
