#include "nct/assembler.hpp"
#include "nct/io.hpp"

#include <doctest.h>

using namespace nct;

namespace {

const HomologyReport& report(GroupName g) {
    static std::map<GroupName, HomologyReport> cache;
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, full_report(FiniteGroup::make(g), default_schedule())).first;
    return it->second;
}

}  // namespace

TEST_CASE("assembled tables") {
    struct Row {
        GroupName g;
        std::array<int, 3> hh;
        int even;
    };
    for (const auto& row : std::vector<Row>{{GroupName::Z2, {5, 0, 1}, 6},
                                            {GroupName::Z3, {7, 0, 1}, 8},
                                            {GroupName::Z4, {8, 0, 1}, 9},
                                            {GroupName::Z6, {9, 0, 1}, 10}}) {
        const auto& r = report(row.g);
        CAPTURE(r.group.str());
        CHECK(r.hh == row.hh);
        CHECK(r.has_hc);
        CHECK(r.hc_even == row.even);
        CHECK(r.hc_odd == 0);
        for (const auto& c : compare_to_reference(r)) CHECK(c.pass);
    }
}

TEST_CASE("Z4 sector breakdown") {
    const auto& r = report(GroupName::Z4);
    REQUIRE(r.sectors.size() == 4);
    std::vector<int> inv0;
    for (const auto& s : r.sectors) inv0.push_back(s.invariant_dims[0]);
    CHECK(inv0 == std::vector<int>{1, 2, 3, 2});
    CHECK(r.sectors[2].dims == std::array<int, 3>{4, 0, 0});
    CHECK(r.sectors[0].dims == std::array<int, 3>{1, 2, 1});
    CHECK(r.sectors[0].invariant_dims == std::array<int, 3>{1, 0, 1});
}

TEST_CASE("totals are sums of sector invariants") {
    for (auto g : {GroupName::Z2, GroupName::Z3, GroupName::Z4, GroupName::Z6}) {
        const auto& r = report(g);
        std::array<int, 3> sum{};
        int euler = 0;
        for (const auto& s : r.sectors) {
            for (int d = 0; d < 3; ++d) sum[d] += s.invariant_dims[d];
            euler += s.dims[0] - s.dims[1] + s.dims[2];
        }
        CHECK(sum == r.hh);
        CHECK(r.hc_even == r.hh[0] + r.hh[2]);
        CHECK(static_cast<int>(r.sectors.size()) == r.group.order);
        CHECK(euler > 0);
    }
    CHECK(report(GroupName::Z6).notes.size() >= 1);
}

TEST_CASE("cyclic shortcut refuses when its hypotheses fail") {
    HomologyReport r = report(GroupName::Z2);
    r.has_hc = false;
    r.sectors[1].dims[1] = 1;
    CHECK_THROWS_AS(cyclic_table(r), HypothesisError);
    HomologyReport q = report(GroupName::Z2);
    q.sectors[0].invariant_dims[1] = 2;
    CHECK_THROWS_AS(cyclic_table(q), HypothesisError);
}

TEST_CASE("mismatches are reported per cell") {
    HomologyReport r = report(GroupName::Z3);
    r.hh[0] = 6;
    auto cells = compare_to_reference(r);
    CHECK_FALSE(cells[0].pass);
    CHECK(cells[0].expected == 7);
    CHECK(cells[1].pass);
}

TEST_CASE("text and JSON output") {
    const auto& r = report(GroupName::Z2);
    std::string text = format_table(r);
    CHECK(text.find("HH 5 0 1\n") != std::string::npos);
    CHECK(text.find("HC even 6, odd 0\n") != std::string::npos);
    std::string a = to_json(r).dump(), b = to_json(full_report(FiniteGroup::make(GroupName::Z2), {4, 6, 8})).dump();
    CHECK(a == b);
    auto j = json::parse(a);
    CHECK(j["HH"] == json::array({5, 0, 1}));
    CHECK(j["HC"]["even"] == 6);
}
