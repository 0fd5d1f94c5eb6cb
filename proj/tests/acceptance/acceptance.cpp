#include "nct/io.hpp"
#include "nct/properties.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

using namespace nct;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

int stable(const SectorComplex& s, int degree, const std::vector<int>& sched) {
    return stabilized_dimension([&](int r) { return sector_dimension(s, degree, {r}); }, sched).value;
}

SectorComplex sector(GroupName g, int k) { return SectorComplex::make(FiniteGroup::make(g), k); }

void criterion1(Outcome& o, const std::vector<int>& sched, std::vector<HomologyReport>& reports) {
    for (const auto& g : all_groups()) {
        auto t0 = Clock::now();
        HomologyReport r = hochschild_table(g, sched);
        double dt = seconds_since(t0);
        ReferenceTable p = reference_table(g);
        std::ostringstream got;
        got << g.str() << " HH = " << r.hh[0] << "," << r.hh[1] << "," << r.hh[2];
        o.require(r.hh == std::array<int, 3>{p.hh0, p.hh1, p.hh2}, got.str());
        o.require(dt <= 300, g.str() + " took " + std::to_string(dt) + " s");
        reports.push_back(r);
    }
    if (o.pass)
        for (const auto& r : reports) o.detail << r.group.str() << " " << r.hh[0] << "," << r.hh[1] << "," << r.hh[2] << " ";
}

void criterion2(Outcome& o, std::vector<HomologyReport>& reports) {
    for (auto& r : reports) {
        try {
            cyclic_table(r);
        } catch (const HypothesisError& e) {
            o.require(false, r.group.str() + " hypotheses fail: " + e.what());
            continue;
        }
        ReferenceTable p = reference_table(r.group);
        o.require(r.hc_even == p.hc_even && r.hc_odd == p.hc_odd,
                  r.group.str() + " HC = " + std::to_string(r.hc_even) + "," + std::to_string(r.hc_odd));
    }
    if (o.pass)
        for (const auto& r : reports) o.detail << r.group.str() << " even " << r.hc_even << " odd " << r.hc_odd << " ";
}

void criterion3(Outcome& o, const std::vector<int>& sched) {
    struct Case {
        GroupName g;
        int k, h0;
    };
    for (const auto& c : std::vector<Case>{{GroupName::Z2, 1, 4},
                                           {GroupName::Z3, 1, 3},
                                           {GroupName::Z3, 2, 3},
                                           {GroupName::Z4, 1, 2},
                                           {GroupName::Z4, 3, 2},
                                           {GroupName::Z6, 1, 1},
                                           {GroupName::Z6, 5, 1}}) {
        auto s = sector(c.g, c.k);
        int d = stable(s, 0, sched);
        o.require(d == c.h0, s.group.str() + " " + s.label() + " H0 = " + std::to_string(d));
    }
    for (const auto& g : all_groups())
        for (const auto& s : all_sectors(g)) {
            int d2 = stable(s, 2, sched);
            if (!s.is_identity()) {
                o.require(d2 == 0, g.str() + " " + s.label() + " H2 = " + std::to_string(d2));
                continue;
            }
            auto h2 = sector_h2(s, {sched.back()});
            o.require(d2 == 1 && h2.basis.size() == 1 && h2.basis[0] == TorusElement::monomial({-1, -1}),
                      g.str() + " identity H2 is not spanned by U^(-1,-1)");
        }
}

void criterion4(Outcome& o, const std::vector<int>& sched) {
    Box box{sched.back()};
    auto fixed = [&](GroupName gn, int k, int degree) {
        auto g = FiniteGroup::make(gn);
        auto s = SectorComplex::make(g, k);
        return invariant_dimension(action_on_homology(s, generator(g), g.order, degree, homology_bases(s, box)));
    };
    {
        auto g = FiniteGroup::make(GroupName::Z2);
        auto s = SectorComplex::make(g, 0);
        auto m = action_on_homology(s, generator(g), 2, 1, homology_bases(s, box));
        Matrix minus{{Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(-1)}};
        o.require(m.matrix == minus, "Z2 on identity H1 is not -I");
        o.require(invariant_dimension(m) == 0, "Z2 identity H1 has fixed vectors");
    }
    o.require(fixed(GroupName::Z4, 2, 0) == 3, "Z4 on the -1 sector H0 fixed space != 3");
    o.require(fixed(GroupName::Z6, 3, 0) == 2, "Z6 on the -1 sector H0 fixed space != 2");
    o.require(fixed(GroupName::Z6, 2, 0) == 2, "Z6 on the g^2 sector H0 fixed space != 2");
    o.require(fixed(GroupName::Z6, 4, 0) == 2, "Z6 on the g^4 sector H0 fixed space != 2");
    for (const auto& g : all_groups())
        o.require(fixed(g.name, 0, 0) == 1, g.str() + " identity H0 fixed space != 1");
}

void criterion5(Outcome& o, uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
    long total = 0;
    for (const auto& g : all_groups())
        for (const auto& s : all_sectors(g)) {
            if (s.is_identity()) continue;
            auto t0 = Clock::now();
            for (int i = 0; i < 100; ++i) {
                TorusElement u0;
                int terms = uni(1, 5);
                for (int j = 0; j < terms; ++j) {
                    long c = uni(1, 9) * (uni(0, 1) ? 1 : -1);
                    u0.add_term({uni(-6, 6), uni(-6, 6)}, Scalar(c) * Scalar::t_power(uni(-4, 4)));
                }
                if (u0.is_zero()) u0 = TorusElement::one();
                auto [f, h] = twisted_b2(s, u0);
                try {
                    auto acc = reduce_to_zero(check_kernel(s, f, h));
                    auto [f2, h2] = twisted_b2(s, acc.total);
                    o.require(f2 == f && h2 == h, g.str() + " " + s.label() + " preimage mismatch for " + u0.str());
                } catch (const std::exception& e) {
                    o.require(false, g.str() + " " + s.label() + ": " + e.what());
                }
                ++total;
            }
            double dt = seconds_since(t0);
            o.require(dt <= 60, g.str() + " " + s.label() + " took " + std::to_string(dt) + " s");
        }
    if (o.pass) o.detail << total << " reductions";
}

void criterion6(Outcome& o, uint64_t seed) {
    long checks = 0;
    for (const auto& r : run_property_suites(seed)) {
        checks += r.checked;
        o.require(r.passed, r.name + ": " + r.detail);
    }
    if (o.pass) o.detail << checks << " checks";
}

void criterion7(Outcome& o) {
    auto t0 = Clock::now();
    long patterns = 0;
    for (const auto& g : all_groups())
        for (const auto& s : all_sectors(g)) {
            if (s.is_identity()) continue;
            auto rep = no_small_solutions(s, 3, {4});
            patterns += rep.patterns;
            std::ostringstream w;
            for (const auto& [c, p] : rep.witness) w << " a" << c << p.str();
            o.require(rep.confirmed, g.str() + " " + s.label() + " has a small cycle:" + w.str());
        }
    double dt = seconds_since(t0);
    o.require(dt <= 120, "enumeration took " + std::to_string(dt) + " s");
    if (o.pass) o.detail << patterns << " patterns";
}

std::map<std::string, std::string> dot_labels(const std::string& dot) {
    std::map<std::string, std::string> out;
    static const std::regex node(R"re(label="(a[12]\[-?\d+,-?\d+\]) = ([^"]*)")re");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), node); it != std::sregex_iterator(); ++it)
        out[(*it)[1]] = (*it)[2];
    return out;
}

void criterion8(Outcome& o) {
    auto s = sector(GroupName::Z2, 1);
    KernelDiagram eq = equation_diagram(s, {5, 1});
    int boxes = 0, discs = 0;
    for (const auto& n : eq.nodes) (n.comp == 1 ? boxes : discs)++;
    std::string eq_dot = to_dot(eq, "equation");
    o.require(eq.nodes.size() == 4 && boxes == 2 && discs == 2, "worked equation diagram is not 2 boxes + 2 discs");
    o.require(dot_labels(eq_dot).size() == 4, "worked equation DOT does not label 4 nodes");

    std::string dot = to_dot(build_diagram(a4_solution(s, Scalar(1), {0, 0})), "a4");
    auto labels = dot_labels(dot);
    const char* keys[] = {"a1[0,1]", "a1[0,-1]", "a2[-1,0]", "a2[1,0]"};
    for (const char* k : keys) o.require(labels.count(k) == 1, std::string("A4 DOT has no node ") + k);
    if (!o.pass) return;
    Scalar a = Scalar::parse(labels["a1[0,1]"]), b = Scalar::parse(labels["a1[0,-1]"]);
    Scalar c = Scalar::parse(labels["a2[-1,0]"]), d = Scalar::parse(labels["a2[1,0]"]);
    Scalar lam = lambda();
    o.require(!a.is_zero() && b == -lam * a && b == -lam * c && b == d, "A4 labels break b = -lambda a = -lambda c = d");
    std::string svg = to_svg(build_diagram(a4_solution(s, Scalar(1), {0, 0})));
    o.require(svg.find("<rect class=\"a1\"") != std::string::npos && svg.find("<circle class=\"a2\"") != std::string::npos,
              "A4 SVG lacks box or disc shapes");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria 1-8"};
    uint64_t seed = 20240601;
    std::vector<int> expect_fail;
    app.add_option("--seed", seed, "seed for randomized criteria")->capture_default_str();
    app.add_option("--expect-fail", expect_fail, "criteria recorded as known failures")->delimiter(',');
    CLI11_PARSE(app, argc, argv);
    const std::vector<int> sched = default_schedule();

    std::vector<HomologyReport> reports;
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"HH table", [&](Outcome& o) { criterion1(o, sched, reports); }},
        {"HC table", [&](Outcome& o) { criterion2(o, reports); }},
        {"per-sector dimensions", [&](Outcome& o) { criterion3(o, sched); }},
        {"invariant subspaces", [&](Outcome& o) { criterion4(o, sched); }},
        {"constructive H1 vanishing", [&](Outcome& o) { criterion5(o, seed); }},
        {"property suites", [&](Outcome& o) { criterion6(o, seed); }},
        {"small-solution exclusion", [&](Outcome& o) { criterion7(o); }},
        {"diagram fidelity", [&](Outcome& o) { criterion8(o); }},
    };
    std::set<int> failed;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        int id = static_cast<int>(i) + 1;
        if (!o.pass) failed.insert(id);
        std::printf("%s %d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    seconds_since(t0), o.detail.str().empty() ? "" : ": ", o.detail.str().c_str());
    }
    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (failed == expected) {
        if (!expected.empty()) std::printf("failures match the expected list\n");
        return 0;
    }
    if (!expected.empty()) std::printf("failures differ from the expected list\n");
    return 1;
}
