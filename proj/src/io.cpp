#include "nct/io.hpp"

namespace nct {

namespace {

json point_json(const LatticePoint& p) { return json::array({p.n, p.m}); }

LatticePoint point_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw InputError("lattice point must be [n, m]");
    return {j[0].get<int>(), j[1].get<int>()};
}

Scalar scalar_from(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw InputError("coefficient must be a string or integer");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(std::string("bad coefficient: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json to_json(const TorusElement& a) {
    json out = json::array();
    for (const auto& [p, c] : a.support()) out.push_back({{"n", p.n}, {"m", p.m}, {"c", c.str()}});
    return out;
}

TorusElement torus_from_json(const json& j) {
    if (!j.is_array()) throw InputError("torus element must be an array");
    TorusElement a;
    for (const auto& t : j) {
        const json& n = field(t, "n");
        const json& m = field(t, "m");
        if (!n.is_number_integer() || !m.is_number_integer()) throw InputError("exponents must be integers");
        a.add_term({n.get<int>(), m.get<int>()}, scalar_from(field(t, "c")));
    }
    return a;
}

json to_json(const EnvElement& e) {
    json out = json::array();
    for (const auto& [k, c] : e.terms())
        out.push_back({{"left", point_json(k.first)}, {"right", point_json(k.second)}, {"c", c.str()}});
    return out;
}

EnvElement env_from_json(const json& j) {
    if (!j.is_array()) throw InputError("env element must be an array");
    EnvElement e;
    for (const auto& t : j) e.add_term(scalar_from(field(t, "c")), point_from(field(t, "left")), point_from(field(t, "right")));
    return e;
}

json to_json(const BarChain& c) {
    json terms = json::array();
    for (const auto& [f, x] : c.terms()) {
        json fs = json::array();
        for (const auto& p : f) fs.push_back(point_json(p));
        terms.push_back({{"factors", fs}, {"c", x.str()}});
    }
    return {{"degree", c.degree()}, {"terms", terms}};
}

BarChain bar_from_json(const json& j) {
    const json& d = field(j, "degree");
    if (!d.is_number_integer() || d.get<int>() < 0 || d.get<int>() > 2) throw InputError("bar degree must be 0..2");
    BarChain c(d.get<int>());
    for (const auto& t : field(j, "terms")) {
        BarChain::Factors f;
        for (const auto& p : field(t, "factors")) f.push_back(point_from(p));
        if (static_cast<int>(f.size()) != c.degree() + 1) throw InputError("factor count does not match degree");
        c.add_term(scalar_from(field(t, "c")), f);
    }
    return c;
}

json to_json(const KoszulChain& z) {
    if (z.degree == 1) return {{"degree", 1}, {"e1", to_json(z.a)}, {"e2", to_json(z.b)}};
    return {{"degree", z.degree}, {"a", to_json(z.a)}};
}

json to_json(const KernelSolution& s) {
    return {{"group", s.sector.group.str()},
            {"element", s.sector.label()},
            {"phi1", to_json(s.phi1)},
            {"phi2", to_json(s.phi2)}};
}

KernelSolution solution_from_json(const json& j) {
    const json& g = field(j, "group");
    if (!g.is_string()) throw InputError("group must be a string");
    auto group = FiniteGroup::parse(g.get<std::string>());
    if (!group) throw InputError("unknown group " + g.get<std::string>());
    const json& e = field(j, "element");
    std::string es = e.is_number_integer() ? std::to_string(e.get<int>()) : e.is_string() ? e.get<std::string>() : "";
    auto k = parse_element(*group, es);
    if (!k) throw InputError("unknown element " + e.dump());
    return check_kernel(SectorComplex::make(*group, *k), torus_from_json(field(j, "phi1")),
                        torus_from_json(field(j, "phi2")));
}

json to_json(const PreimageAccumulator& acc, const KernelSolution& sol) {
    json steps = json::array();
    for (const auto& s : acc.steps)
        steps.push_back({{"anchor", point_json(s.anchor)},
                         {"component", s.comp},
                         {"point", point_json(s.point)},
                         {"c", s.coeff.str()}});
    return {{"group", sol.sector.group.str()},
            {"element", sol.sector.label()},
            {"steps", steps},
            {"preimage", to_json(acc.total)},
            {"verified", true}};
}

json to_json(const KernelDiagram& d) {
    json nodes = json::array(), edges = json::array();
    for (const auto& n : d.nodes)
        nodes.push_back({{"point", point_json(n.point)},
                         {"component", n.comp},
                         {"shape", n.comp == 1 ? "box" : "disc"},
                         {"value", n.value.str()},
                         {"label", n.label}});
    for (const auto& e : d.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"equation", point_json(e.equation)}});
    return {{"nodes", nodes}, {"edges", edges}};
}

json to_json(const ActionMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.matrix) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.str());
        rows.push_back(row);
    }
    return {{"sector", m.sector}, {"degree", m.degree}, {"matrix", rows}, {"fixed", invariant_dimension(m)}};
}

json to_json(const SectorSummary& s) {
    return {{"sector", s.sector},
            {"dims", s.dims},
            {"invariant_dims", s.invariant_dims},
            {"settled_at", s.radius}};
}

json to_json(const HomologyReport& r) {
    json sectors = json::array();
    for (const auto& s : r.sectors) sectors.push_back(to_json(s));
    json out = {{"group", r.group.str()}, {"boxes", r.schedule}, {"sectors", sectors}, {"HH", r.hh}};
    if (r.has_hc) out["HC"] = {{"even", r.hc_even}, {"odd", r.hc_odd}};
    out["notes"] = r.notes;
    return out;
}

json to_json(const std::vector<CellResult>& cells) {
    json out = json::array();
    for (const auto& c : cells)
        out.push_back({{"cell", c.cell}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return out;
}

json sector_json(const SectorComplex& s, int degree, const Box& box) {
    json basis = json::array();
    int dim = 0;
    if (degree == 0) {
        auto h = sector_h0(s, box);
        dim = h.dim;
        for (const auto& p : h.reps) basis.push_back(to_json(TorusElement::monomial(p)));
    } else if (degree == 1) {
        auto h = sector_h1(s, box);
        dim = h.dim;
        for (const auto& z : h.reps) basis.push_back(to_json(z));
    } else if (degree == 2) {
        auto h = sector_h2(s, box);
        dim = h.dim;
        for (const auto& b : h.basis) basis.push_back(to_json(b));
    } else {
        throw std::invalid_argument("degree must be 0..2");
    }
    return {{"group", s.group.str()},
            {"sector", s.label()},
            {"degree", degree},
            {"box", box.radius},
            {"dimension", dim},
            {"basis", basis}};
}

}  // namespace nct
