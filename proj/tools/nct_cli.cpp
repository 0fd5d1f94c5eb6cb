#include "nct/io.hpp"
#include "nct/properties.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nct;

namespace {

enum Exit { kOk = 0, kFail = 1, kInconclusive = 2, kUsage = 64, kMalformed = 65 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string group;
    std::string element;
    int degree = -1;
    std::string boxes = "4,6,8";
    std::string format;
    uint64_t seed = 1;
    long budget = -1;
    std::string out;
    std::string input;
    std::string equation;
};

FiniteGroup need_group(const RunConfig& c) {
    if (c.group.empty()) throw UsageError("--group is required");
    auto g = FiniteGroup::parse(c.group);
    if (!g) throw UsageError("unknown group '" + c.group + "' (expected z2, z3, z4 or z6)");
    return *g;
}

std::vector<int> schedule(const RunConfig& c) {
    std::vector<int> out;
    std::stringstream ss(c.boxes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int r = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(r);
        } catch (const std::exception&) {
            throw UsageError("bad --boxes entry '" + tok + "'");
        }
    }
    if (out.size() < 3) throw UsageError("--boxes needs at least three radii");
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i] < 2) throw UsageError("--boxes radii must be at least 2");
        if (i && out[i] <= out[i - 1]) throw UsageError("--boxes must be strictly increasing");
    }
    return out;
}

std::vector<SectorComplex> sectors(const RunConfig& c, const FiniteGroup& g) {
    if (c.element.empty()) return all_sectors(g);
    auto k = parse_element(g, c.element);
    if (!k) throw UsageError("unknown element '" + c.element + "' for " + g.str());
    return {SectorComplex::make(g, *k)};
}

std::vector<int> degrees(const RunConfig& c) {
    if (c.degree < 0) return {0, 1, 2};
    if (c.degree > 2) throw UsageError("--degree must be 0, 1 or 2");
    return {c.degree};
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
}

json read_json(const std::string& path) {
    std::stringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot read " + path);
        buf << f.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

int cmd_table(const RunConfig& c) {
    FiniteGroup g = need_group(c);
    auto sched = schedule(c);
    HomologyReport r = hochschild_table(g, sched);
    std::string hc_error;
    try {
        cyclic_table(r);
    } catch (const HypothesisError& e) {
        hc_error = e.what();
    }
    auto cells = compare_to_reference(r);
    bool ok = hc_error.empty() && std::all_of(cells.begin(), cells.end(), [](const CellResult& x) { return x.pass; });
    if (c.format == "json") {
        json j = to_json(r);
        j["comparison"] = to_json(cells);
        if (!hc_error.empty()) j["cyclic_refused"] = hc_error;
        j["match"] = ok;
        emit(c, j.dump(2));
    } else {
        std::ostringstream os;
        os << format_table(r);
        if (!hc_error.empty()) os << "cyclic part refused: " << hc_error << "\n";
        for (const auto& x : cells)
            os << (x.pass ? "match " : "MISMATCH ") << x.cell << " expected " << x.expected << " got " << x.actual
               << "\n";
        emit(c, os.str());
    }
    return ok ? kOk : kFail;
}

int cmd_sector(const RunConfig& c) {
    FiniteGroup g = need_group(c);
    auto sched = schedule(c);
    json out = json::array();
    for (const auto& s : sectors(c, g))
        for (int d : degrees(c)) {
            auto st = stabilized_dimension([&](int r) { return sector_dimension(s, d, {r}); }, sched);
            json j = sector_json(s, d, {st.radius});
            json trace = json::array();
            for (const auto& [r, v] : st.trace) trace.push_back({r, v});
            j["trace"] = trace;
            out.push_back(j);
        }
    if (c.format == "table") {
        std::ostringstream os;
        for (const auto& j : out)
            os << g.str() << " " << j["sector"].get<std::string>() << " H" << j["degree"].get<int>() << " = "
               << j["dimension"].get<int>() << " (box " << j["box"].get<int>() << ")\n";
        emit(c, os.str());
    } else {
        emit(c, (out.size() == 1 ? out[0] : out).dump(2));
    }
    return kOk;
}

int cmd_reduce(const RunConfig& c) {
    KernelSolution sol = solution_from_json(read_json(c.input));
    if (sol.sector.is_identity()) throw UsageError("reduction is defined for non-identity sectors only");
    PreimageAccumulator acc = reduce_to_zero(sol, c.budget);
    emit(c, to_json(acc, sol).dump(2));
    return kOk;
}

int cmd_diagram(const RunConfig& c) {
    KernelDiagram d;
    if (!c.equation.empty()) {
        FiniteGroup g = need_group(c);
        auto ss = sectors(c, g);
        if (ss.size() != 1) throw UsageError("--equation needs --element");
        int n = 0, m = 0;
        char comma = 0;
        std::stringstream in(c.equation);
        if (!(in >> n >> comma >> m) || comma != ',' || !in.eof()) throw UsageError("--equation expects n,m");
        d = equation_diagram(ss[0], {n, m});
    } else {
        d = build_diagram(solution_from_json(read_json(c.input)));
    }
    if (c.format == "svg") emit(c, to_svg(d));
    else if (c.format == "json") emit(c, to_json(d).dump(2));
    else emit(c, to_dot(d));
    return kOk;
}

int cmd_invariants(const RunConfig& c) {
    FiniteGroup g = need_group(c);
    auto sched = schedule(c);
    Automorphism gen = generator(g);
    json out = json::array();
    for (const auto& s : sectors(c, g))
        for (int d : degrees(c)) {
            auto st = stabilized_dimension([&](int r) { return sector_dimension(s, d, {r}); }, sched);
            Box box{st.radius};
            HomologyBases b;
            if (d == 0) b.h0 = sector_h0(s, box);
            if (d == 1) b.h1 = sector_h1(s, box);
            if (d == 2) b.h2 = sector_h2(s, box);
            json j = to_json(action_on_homology(s, gen, g.order, d, b));
            j["group"] = g.str();
            j["box"] = box.radius;
            out.push_back(j);
        }
    emit(c, out.dump(2));
    return kOk;
}

int cmd_verify(const RunConfig& c) {
    auto results = run_property_suites(c.seed);
    bool ok = true;
    json j = json::array();
    std::ostringstream os;
    for (const auto& r : results) {
        ok = ok && r.passed;
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)";
        if (!r.passed) os << ": " << r.detail;
        os << "\n";
        j.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"detail", r.detail}});
    }
    emit(c, c.format == "json" ? j.dump(2) : os.str());
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild and cyclic homology of the noncommutative torus crossed with Z2, Z3, Z4, Z6"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
        sub->add_option("--group", cfg.group, "z2, z3, z4 or z6");
        sub->add_option("--element", cfg.element, "sector element: e, g, g^k or k");
        sub->add_option("--degree", cfg.degree, "homological degree 0..2");
        sub->add_option("--boxes", cfg.boxes, "comma-separated radius schedule")->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
        sub->add_option("--budget", cfg.budget, "step budget for reductions");
        sub->add_option("--out", cfg.out, "write output to this file");
    };
    auto* table = app.add_subcommand("table", "assembled HH and HC tables compared to the expected values");
    common(table, {"table", "json"});
    auto* sector = app.add_subcommand("sector", "per-sector dimensions and bases");
    common(sector, {"table", "json"});
    auto* reduce = app.add_subcommand("reduce", "constructive preimage of a kernel solution");
    common(reduce, {"json"});
    reduce->add_option("input", cfg.input, "kernel solution JSON file, - for stdin");
    auto* diagram = app.add_subcommand("diagram", "kernel diagram of a solution or of one equation");
    common(diagram, {"dot", "svg", "json"});
    diagram->add_option("input", cfg.input, "kernel solution JSON file, - for stdin");
    diagram->add_option("--equation", cfg.equation, "draw the kernel equation at n,m instead");
    auto* invariants = app.add_subcommand("invariants", "group action matrices on homology");
    common(invariants, {"json"});
    auto* verify = app.add_subcommand("verify", "run the property suites");
    common(verify, {"table", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    auto chosen = app.get_subcommands().front();
    if (chosen->count("--format") == 0) {
        static const std::map<std::string, std::string> defaults{{"table", "table"}, {"sector", "json"},
                                                                 {"reduce", "json"},  {"diagram", "dot"},
                                                                 {"invariants", "json"}, {"verify", "table"}};
        cfg.format = defaults.at(chosen->get_name());
    }
    try {
        const std::string name = chosen->get_name();
        if (name == "table") return cmd_table(cfg);
        if (name == "sector") return cmd_sector(cfg);
        if (name == "reduce") return cmd_reduce(cfg);
        if (name == "diagram") return cmd_diagram(cfg);
        if (name == "invariants") return cmd_invariants(cfg);
        return cmd_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const StructuralError& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
