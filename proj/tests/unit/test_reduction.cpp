#include "random_util.hpp"

#include "nct/reduction.hpp"

#include <doctest.h>

using namespace nct;

namespace {

SectorComplex S(GroupName g, int k) { return SectorComplex::make(FiniteGroup::make(g), k); }
TorusElement U(int n, int m) { return TorusElement::monomial({n, m}); }

size_t count(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("kernel check") {
    auto s = S(GroupName::Z2, 1);
    auto [f, g] = twisted_b2(s, U(2, 3));
    CHECK(check_kernel(s, f, g).support_size() == 4);
    CHECK(check_kernel(s, {}, {}).is_zero());
    try {
        check_kernel(s, U(0, 0), {});
        FAIL("expected a violation");
    } catch (const KernelViolation& e) {
        CHECK(e.point == LatticePoint{-1, 0});
        CHECK(e.residual == Scalar(-1));
    }
    CHECK_THROWS_AS(check_kernel(s, f, g + U(5, 5)), KernelViolation);
}

TEST_CASE("A4 solutions") {
    auto s = S(GroupName::Z2, 1);
    auto sol = a4_solution(s, Scalar(1), {0, 0});
    CHECK(sol.phi1 == U(0, 1) - U(0, -1).scaled(lambda()));
    CHECK(sol.phi2 == U(-1, 0) - U(1, 0).scaled(lambda()));
    CHECK_THROWS(a4_solution(S(GroupName::Z3, 1), Scalar(1), {0, 0}));
    auto d = build_diagram(sol);
    CHECK(d.nodes.size() == 4);
    CHECK(d.edges.size() == 4);
    CHECK(d.connected());
    for (const auto& e : d.edges) {
        CHECK(std::abs(e.equation.n) == 1);
        CHECK(std::abs(e.equation.m) == 1);
    }
    CHECK(d.nodes[d.find(1, {0, -1})].label == "a1[0,-1] = -t^2");
    CHECK(d.nodes[d.find(1, {0, 1})].label == "a1[0,1] = 1");
    CHECK(d.nodes[d.find(2, {-1, 0})].label == "a2[-1,0] = 1");
    CHECK(d.nodes[d.find(2, {1, 0})].label == "a2[1,0] = -t^2");
    CHECK(d.find(1, {7, 7}) == -1);
}

TEST_CASE("single equation diagram") {
    auto d = equation_diagram(S(GroupName::Z2, 1), {5, 1});
    REQUIRE(d.nodes.size() == 4);
    CHECK(d.nodes[d.find(1, {4, 1})].label == "a1[4,1] = t^2");
    CHECK(d.nodes[d.find(1, {6, 1})].label == "a1[6,1] = -1");
    CHECK(d.nodes[d.find(2, {5, 0})].label == "a2[5,0] = 1");
    CHECK(d.nodes[d.find(2, {5, 2})].label == "a2[5,2] = -t^-10");
    REQUIRE(d.edges.size() == 2);
    for (const auto& e : d.edges) CHECK(d.nodes[e.from].comp == d.nodes[e.to].comp);
    CHECK_FALSE(d.connected());
    CHECK(build_diagram(check_kernel(S(GroupName::Z2, 1), {}, {})).nodes.empty());
}

TEST_CASE("DOT and SVG rendering") {
    auto d = build_diagram(a4_solution(S(GroupName::Z2, 1), Scalar(1), {0, 0}));
    std::string dot = to_dot(d, "a4");
    CHECK(dot.rfind("graph a4 {", 0) == 0);
    CHECK(count(dot, "shape=box") == 2);
    CHECK(count(dot, "shape=circle") == 2);
    CHECK(count(dot, " -- ") == 4);
    CHECK(dot.find("pos=\"0,1!\"") != std::string::npos);
    std::string svg = to_svg(d);
    CHECK(count(svg, "<rect class=\"a1\"") == 2);
    CHECK(count(svg, "<circle class=\"a2\"") == 2);
    CHECK(count(svg, "<line ") == 4);
    CHECK(count(svg, "</svg>") == 1);
}

TEST_CASE("anchor components and offsets") {
    struct Case {
        GroupName g;
        int k;
        LatticePoint offset;
    };
    for (const auto& c : std::vector<Case>{{GroupName::Z2, 1, {-1, 0}},
                                           {GroupName::Z3, 1, {0, -1}},
                                           {GroupName::Z3, 2, {-1, 0}},
                                           {GroupName::Z4, 1, {0, -1}},
                                           {GroupName::Z4, 2, {-1, 0}},
                                           {GroupName::Z4, 3, {-1, 0}},
                                           {GroupName::Z6, 1, {-1, 1}},
                                           {GroupName::Z6, 2, {-1, 0}},
                                           {GroupName::Z6, 3, {-1, 0}},
                                           {GroupName::Z6, 4, {0, -1}},
                                           {GroupName::Z6, 5, {0, 1}}}) {
        auto s = S(c.g, c.k);
        CAPTURE(s.group.str());
        CAPTURE(c.k);
        CHECK(pattern_offset(s) == c.offset);
        auto [f, g] = b2_unit(s, {0, 0});
        CHECK(f.size() + g.size() == 4);
    }
    CHECK(anchor_component(S(GroupName::Z2, 1)) == 2);
    CHECK(anchor_component(S(GroupName::Z3, 1)) == 2);
    CHECK(anchor_component(S(GroupName::Z4, 1)) == 2);
    CHECK(anchor_component(S(GroupName::Z6, 1)) == 1);
    CHECK_THROWS(anchor_component(S(GroupName::Z6, 0)));
}

TEST_CASE("one wedge step clears a single image pattern") {
    auto s = S(GroupName::Z2, 1);
    auto sol = a4_solution(s, Scalar(3), {2, -1});
    auto [next, inc] = wedge_step(sol);
    CHECK(next.is_zero());
    CHECK(inc.point == LatticePoint{2, -1});
    CHECK(inc.coeff == Scalar(3));
    auto acc = reduce_to_zero(sol);
    CHECK(acc.steps.size() == 1);
    CHECK(acc.total == U(2, -1).scaled(Scalar(3)));
}

TEST_CASE("reduction recovers random preimages") {
    testutil::Rng rng(61);
    for (const auto& g : all_groups())
        for (const auto& s : all_sectors(g)) {
            if (s.is_identity()) continue;
            for (int i = 0; i < 15; ++i) {
                TorusElement u = rng.element(rng.uniform(1, 5), 6);
                auto [f, h] = twisted_b2(s, u);
                auto acc = reduce_to_zero(check_kernel(s, f, h));
                CHECK(acc.total == u);
                CHECK(acc.steps.size() == u.size());
            }
        }
}

TEST_CASE("reduction budget") {
    auto sol = a4_solution(S(GroupName::Z2, 1), Scalar(1), {0, 0});
    CHECK_THROWS_AS(reduce_to_zero(sol, 0), InconclusiveError);
    CHECK(default_budget(sol) == 16 * 4 * 3);
    CHECK(reduce_to_zero(sol, 1).steps.size() == 1);
}

TEST_CASE("no small cycles in twisted sectors") {
    auto r2 = no_small_solutions(S(GroupName::Z2, 1), 3, {2});
    CHECK(r2.confirmed);
    CHECK(r2.patterns > 0);
    CHECK(r2.witness.empty());
    auto r3 = no_small_solutions(S(GroupName::Z3, 2), 3, {2});
    CHECK(r3.confirmed);
    auto e = no_small_solutions(S(GroupName::Z2, 0), 3, {2});
    CHECK_FALSE(e.confirmed);
    CHECK_FALSE(e.witness.empty());
    CHECK(e.witness.size() <= 3);
    // the witness columns are dependent: their images span less than their count
    Matrix m;
    std::map<LatticePoint, size_t> rows;
    for (size_t j = 0; j < e.witness.size(); ++j) {
        TorusElement img = b1_unit(S(GroupName::Z2, 0), e.witness[j].first, e.witness[j].second);
        for (const auto& [p, c] : img.support()) {
            auto [it, fresh] = rows.try_emplace(p, m.size());
            if (fresh) m.push_back(std::vector<Scalar>(e.witness.size()));
            m[it->second][j] = c;
        }
    }
    CHECK(rank_over_field(m) < static_cast<int>(e.witness.size()));
}
