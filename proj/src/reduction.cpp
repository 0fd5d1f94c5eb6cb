#include "nct/reduction.hpp"

#include "nct/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace nct {

namespace {

std::string node_label(int comp, const LatticePoint& p, const Scalar& v) {
    return "a" + std::to_string(comp) + "[" + std::to_string(p.n) + "," + std::to_string(p.m) + "] = " + v.pretty();
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

KernelSolution check_kernel(const SectorComplex& s, const TorusElement& phi1, const TorusElement& phi2) {
    TorusElement r = twisted_b1(s, phi1, phi2);
    if (!r.is_zero()) {
        const auto& [p, c] = *r.support().begin();
        std::string eq = coefficient_equations(s, 1).at(p).str();
        throw KernelViolation(p, c, "not a kernel solution: residual " + c.pretty() + " at " + p.str() + " violates " + eq);
    }
    return {s, phi1, phi2};
}

int KernelDiagram::find(int comp, const LatticePoint& p) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].comp == comp && nodes[i].point == p) return static_cast<int>(i);
    return -1;
}

bool KernelDiagram::connected() const {
    if (nodes.empty()) return true;
    std::vector<int> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
    for (const auto& e : edges) parent[root(e.from)] = root(e.to);
    for (size_t i = 0; i < nodes.size(); ++i)
        if (root(static_cast<int>(i)) != root(0)) return false;
    return true;
}

KernelDiagram build_diagram(const KernelSolution& sol) {
    KernelDiagram d;
    std::map<std::pair<int, LatticePoint>, int> index;
    for (int comp = 1; comp <= 2; ++comp)
        for (const auto& [p, c] : (comp == 1 ? sol.phi1 : sol.phi2).support()) {
            index[{comp, p}] = static_cast<int>(d.nodes.size());
            d.nodes.push_back({p, comp, c, node_label(comp, p, c)});
        }
    std::set<LatticePoint> eq_points;
    for (const auto& n : d.nodes) {
        TorusElement img = b1_unit(sol.sector, n.comp, n.point);
        for (const auto& kv : img.support()) eq_points.insert(kv.first);
    }
    CoefficientEquations eqs(sol.sector, 1);
    for (const auto& p : eq_points) {
        std::vector<int> present;
        for (const auto& t : eqs.at(p).terms) {
            auto it = index.find({t.comp, t.point});
            if (it != index.end()) present.push_back(it->second);
        }
        for (size_t i = 0; i < present.size(); ++i)
            for (size_t j = i + 1; j < present.size(); ++j) d.edges.push_back({present[i], present[j], p});
    }
    return d;
}

KernelDiagram equation_diagram(const SectorComplex& s, const LatticePoint& p) {
    KernelDiagram d;
    for (const auto& t : coefficient_equations(s, 1).at(p).terms)
        d.nodes.push_back({t.point, t.comp, t.coeff, node_label(t.comp, t.point, t.coeff)});
    for (size_t i = 0; i < d.nodes.size(); ++i)
        for (size_t j = i + 1; j < d.nodes.size(); ++j)
            if (d.nodes[i].comp == d.nodes[j].comp) d.edges.push_back({static_cast<int>(i), static_cast<int>(j), p});
    return d;
}

std::string to_dot(const KernelDiagram& d, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  node [fontsize=10];\n";
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& n = d.nodes[i];
        os << "  n" << i << " [label=\"" << dot_escape(n.label) << "\", shape="
           << (n.comp == 1 ? "box" : "circle, style=filled") << ", pos=\"" << n.point.n << "," << n.point.m
           << "!\"];\n";
    }
    for (const auto& e : d.edges)
        os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.equation.n << "," << e.equation.m << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_svg(const KernelDiagram& d) {
    const int pitch = 80, margin = 60;
    int nlo = 0, nhi = 0, mlo = 0, mhi = 0;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& p = d.nodes[i].point;
        if (i == 0) nlo = nhi = p.n, mlo = mhi = p.m;
        nlo = std::min(nlo, p.n), nhi = std::max(nhi, p.n);
        mlo = std::min(mlo, p.m), mhi = std::max(mhi, p.m);
    }
    auto x = [&](const LatticePoint& p) { return margin + (p.n - nlo) * pitch; };
    auto y = [&](const LatticePoint& p) { return margin + (mhi - p.m) * pitch; };
    int w = 2 * margin + (nhi - nlo) * pitch, h = 2 * margin + (mhi - mlo) * pitch;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << " " << h << "\">\n";
    for (const auto& e : d.edges) {
        const auto &a = d.nodes[e.from].point, &b = d.nodes[e.to].point;
        os << "  <line x1=\"" << x(a) << "\" y1=\"" << y(a) << "\" x2=\"" << x(b) << "\" y2=\"" << y(b)
           << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& n : d.nodes) {
        if (n.comp == 1)
            os << "  <rect class=\"a1\" x=\"" << x(n.point) - 8 << "\" y=\"" << y(n.point) - 8
               << "\" width=\"16\" height=\"16\" fill=\"white\" stroke=\"black\"/>\n";
        else
            os << "  <circle class=\"a2\" cx=\"" << x(n.point) << "\" cy=\"" << y(n.point)
               << "\" r=\"8\" fill=\"black\"/>\n";
        os << "  <text x=\"" << x(n.point) << "\" y=\"" << y(n.point) + 24
           << "\" font-size=\"11\" text-anchor=\"middle\">" << xml_escape(n.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

KernelSolution a4_solution(const SectorComplex& s, const Scalar& c, const LatticePoint& center) {
    if (s.group.name != GroupName::Z2 || s.k != 1) throw std::invalid_argument("A4 solutions live in the Z2 sector g");
    auto [f, g] = twisted_b2(s, TorusElement::monomial(c, center));
    return check_kernel(s, f, g);
}

namespace {

// Lowest point of B2(1) and the component carrying it.
std::pair<LatticePoint, int> image_anchor(const SectorComplex& s) {
    if (s.is_identity()) throw std::invalid_argument("no reduction in the identity sector");
    auto [f, g] = b2_unit(s, {0, 0});
    LatticePoint lo = std::min(f.support().begin()->first, g.support().begin()->first);
    bool in1 = !f.coeff(lo).is_zero(), in2 = !g.coeff(lo).is_zero();
    if (in1 == in2) throw StructuralError("image pattern of " + s.label() + " has no single anchor component");
    int comp = in1 ? 1 : 2;
    // Generator sectors carry the component fixed by the contradiction arguments.
    if (s.k == 1 && comp != (s.group.name == GroupName::Z6 ? 1 : 2))
        throw StructuralError("image pattern of " + s.label() + " is anchored on the wrong component");
    return {lo, comp};
}

}  // namespace

int anchor_component(const SectorComplex& s) { return image_anchor(s).second; }

LatticePoint pattern_offset(const SectorComplex& s) { return image_anchor(s).first; }

std::pair<KernelSolution, WedgeIncrement> wedge_step(const KernelSolution& sol) {
    if (sol.is_zero()) throw std::invalid_argument("wedge step needs a nonzero solution");
    const SectorComplex& s = sol.sector;
    int comp = anchor_component(s);
    LatticePoint p;
    if (sol.phi1.is_zero()) p = sol.phi2.support().begin()->first;
    else if (sol.phi2.is_zero()) p = sol.phi1.support().begin()->first;
    else p = std::min(sol.phi1.support().begin()->first, sol.phi2.support().begin()->first);
    Scalar value = (comp == 1 ? sol.phi1 : sol.phi2).coeff(p);
    if (value.is_zero()) {
        int other = 3 - comp;
        LatticePoint out = b1_unit(s, other, p).support().begin()->first;
        std::string eq = coefficient_equations(s, 1).at(out).str();
        throw StructuralError("anchor " + p.str() + " carries only a" + std::to_string(other) +
                              "; degenerate kernel equation " + eq);
    }
    LatticePoint w = p - pattern_offset(s);
    auto [f, g] = b2_unit(s, w);
    Scalar c = value / (comp == 1 ? f : g).coeff(p);
    KernelSolution next = check_kernel(s, sol.phi1 - f.scaled(c), sol.phi2 - g.scaled(c));
    return {next, {p, comp, w, c}};
}

long default_budget(const KernelSolution& sol) {
    int r = std::max({sol.phi1.radius(), sol.phi2.radius(), 1});
    return 16L * static_cast<long>(std::max<size_t>(sol.support_size(), 1)) * (2L * r + 1);
}

PreimageAccumulator reduce_to_zero(const KernelSolution& sol, long budget) {
    anchor_component(sol.sector);
    if (budget < 0) budget = default_budget(sol);
    PreimageAccumulator acc;
    KernelSolution cur = sol;
    while (!cur.is_zero()) {
        if (static_cast<long>(acc.steps.size()) >= budget)
            throw InconclusiveError("step budget " + std::to_string(budget) + " exhausted; remaining phi1 = " +
                                    cur.phi1.str() + ", phi2 = " + cur.phi2.str());
        auto [next, inc] = wedge_step(cur);
        acc.total.add_term(inc.point, inc.coeff);
        acc.steps.push_back(inc);
        cur = std::move(next);
    }
    auto [f, g] = twisted_b2(sol.sector, acc.total);
    if (f != sol.phi1 || g != sol.phi2) throw StructuralError("accumulated preimage does not reproduce the solution");
    return acc;
}

SmallSolutionReport no_small_solutions(const SectorComplex& s, int max_support, const Box& box) {
    std::vector<std::pair<int, LatticePoint>> cols;
    for (const auto& p : box.points())
        for (int comp = 1; comp <= 2; ++comp) cols.push_back({comp, p});
    std::map<LatticePoint, int> row_id;
    std::vector<std::vector<std::pair<int, Scalar>>> images(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        TorusElement img = b1_unit(s, cols[c].first, cols[c].second);
        for (const auto& [p, x] : img.support()) {
            auto [it, fresh] = row_id.try_emplace(p, static_cast<int>(row_id.size()));
            images[c].emplace_back(it->second, x);
        }
    }
    SmallSolutionReport rep;
    std::vector<int> pick;
    std::function<bool(size_t)> rec = [&](size_t start) {
        if (!pick.empty()) {
            ++rep.patterns;
            std::map<int, int> cover;
            for (int c : pick)
                for (const auto& [r, x] : images[c]) ++cover[r];
            bool viable = std::all_of(cover.begin(), cover.end(), [](const auto& kv) { return kv.second >= 2; });
            if (viable) {
                ++rep.rank_checks;
                std::map<int, size_t> rows;
                for (const auto& [r, n] : cover) rows.emplace(r, rows.size());
                Matrix m(rows.size(), std::vector<Scalar>(pick.size()));
                for (size_t j = 0; j < pick.size(); ++j)
                    for (const auto& [r, x] : images[pick[j]]) m[rows[r]][j] = x;
                if (rank_over_field(m) < static_cast<int>(pick.size())) {
                    rep.confirmed = false;
                    for (int c : pick) rep.witness.push_back(cols[c]);
                    return false;
                }
            }
        }
        if (static_cast<int>(pick.size()) == max_support) return true;
        for (size_t c = start; c < cols.size(); ++c) {
            pick.push_back(static_cast<int>(c));
            bool ok = rec(c + 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    rec(0);
    return rep;
}

}  // namespace nct
