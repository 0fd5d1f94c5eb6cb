#include "nct/koszul.hpp"

#include "nct/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace nct {

SectorComplex SectorComplex::make(const FiniteGroup& g, int k) {
    if (k < 0 || k >= g.order) throw std::invalid_argument("sector element out of range");
    return {g, k, power(generator(g), k)};
}

std::string SectorComplex::label() const { return k == 0 ? "e" : "g^" + std::to_string(k); }

std::vector<SectorComplex> all_sectors(const FiniteGroup& g) {
    std::vector<SectorComplex> out;
    for (int k = 0; k < g.order; ++k) out.push_back(SectorComplex::make(g, k));
    return out;
}

std::optional<int> parse_element(const FiniteGroup& g, const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
    if (s == "e" || s == "1" || s == "id") return 0;
    if (s == "g") return g.order > 1 ? std::optional<int>(1) : std::nullopt;
    std::string digits;
    if (s.rfind("g^", 0) == 0) digits = s.substr(2);
    else if (s.rfind("g", 0) == 0) digits = s.substr(1);
    else digits = s;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
        return std::nullopt;
    if (digits.size() > 3) return std::nullopt;
    int k = std::stoi(digits);
    if (k < 0 || k >= g.order) return std::nullopt;
    return k;
}

std::vector<LatticePoint> Box::points() const {
    std::vector<LatticePoint> out;
    for (int n = -radius; n <= radius; ++n)
        for (int m = -radius; m <= radius; ++m) out.push_back({n, m});
    return out;
}

std::pair<TorusElement, TorusElement> twisted_b2(const SectorComplex& s, const TorusElement& a) {
    const Mono& su1 = s.sigma.image_u1();
    const Mono& su2 = s.sigma.image_u2();
    TorusElement first = times_mono(a, {Scalar::one(), kE2}) - mono_times({lambda() * su2.c, su2.p}, a);
    TorusElement second = mono_times(su1, a) - times_mono(a, {lambda(), kE1});
    return {first, second};
}

TorusElement twisted_b1(const SectorComplex& s, const TorusElement& a1, const TorusElement& a2) {
    TorusElement r = times_mono(a1, {Scalar::one(), kE1}) - mono_times(s.sigma.image_u1(), a1);
    r += times_mono(a2, {Scalar::one(), kE2}) - mono_times(s.sigma.image_u2(), a2);
    return r;
}

TorusElement b1_unit(const SectorComplex& s, int j, const LatticePoint& v) {
    TorusElement u = TorusElement::monomial(v);
    return j == 1 ? twisted_b1(s, u, {}) : twisted_b1(s, {}, u);
}

std::pair<TorusElement, TorusElement> b2_unit(const SectorComplex& s, const LatticePoint& w) {
    return twisted_b2(s, TorusElement::monomial(w));
}

bool rep_less(const LatticePoint& a, const LatticePoint& b) {
    auto key = [](const LatticePoint& p) {
        return std::make_tuple(std::abs(p.n) + std::abs(p.m), p.n < 0, p.m < 0, std::abs(p.m), p.n, p.m);
    };
    return key(a) < key(b);
}

namespace {

int twist_reach(const SectorComplex& s) {
    int r = 1;
    for (const Mono* m : {&s.sigma.image_u1(), &s.sigma.image_u2()}) r = std::max({r, std::abs(m->p.n), std::abs(m->p.m)});
    return r;
}

template <class Key>
struct Indexer {
    std::map<Key, int> ids;
    std::vector<Key> keys;
    int get(const Key& k) {
        auto [it, fresh] = ids.try_emplace(k, static_cast<int>(keys.size()));
        if (fresh) keys.push_back(k);
        return it->second;
    }
    std::optional<int> find(const Key& k) const {
        auto it = ids.find(k);
        if (it == ids.end()) return std::nullopt;
        return it->second;
    }
};

using Coord = std::pair<int, LatticePoint>;  // (component, point)

// Rows of B2 restricted to the given columns, keyed by output coordinate.
std::map<Coord, std::vector<std::pair<int, Scalar>>> b2_rows(const SectorComplex& s,
                                                             const std::vector<LatticePoint>& cols) {
    std::map<Coord, std::vector<std::pair<int, Scalar>>> rows;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        auto [f, g] = b2_unit(s, cols[c]);
        for (const auto& [p, x] : f.support()) rows[{1, p}].emplace_back(c, x);
        for (const auto& [p, x] : g.support()) rows[{2, p}].emplace_back(c, x);
    }
    return rows;
}

void apply_row(GainGraph& gg, const std::vector<std::pair<int, Scalar>>& row, const char* what) {
    if (row.size() == 1) gg.kill(row[0].first);
    else if (row.size() == 2) gg.constrain(row[0].first, row[0].second, row[1].first, row[1].second);
    else if (row.size() > 2) throw StructuralError(std::string("non-binomial relation in ") + what);
}

// Component vectors (x_v = potential) of the live components.
std::vector<std::vector<std::pair<int, Scalar>>> live_vectors(GainGraph& gg) {
    std::map<int, size_t> slot;
    std::vector<std::vector<std::pair<int, Scalar>>> out;
    for (int r : gg.live_roots()) {
        slot[r] = out.size();
        out.emplace_back();
    }
    for (int i = 0; i < gg.size(); ++i) {
        auto [r, w] = gg.find(i);
        auto it = slot.find(r);
        if (it != slot.end()) out[it->second].emplace_back(i, w);
    }
    return out;
}

}  // namespace

struct H0Result::Impl {
    Box box;
    std::map<LatticePoint, int> index;
    GainGraph gg;
    std::map<int, int> root_to_rep;
    std::vector<Scalar> rep_weight;
};

std::pair<int, Scalar> H0Result::express(const LatticePoint& w) const {
    auto it = impl->index.find(w);
    if (it == impl->index.end()) throw StructuralError("monomial " + w.str() + " lies outside the H0 box");
    auto [root, weight] = impl->gg.find(it->second);
    auto rep = impl->root_to_rep.find(root);
    if (rep == impl->root_to_rep.end()) return {-1, Scalar()};
    return {rep->second, weight / impl->rep_weight[rep->second]};
}

H0Result sector_h0(const SectorComplex& s, const Box& box) {
    auto impl = std::make_shared<H0Result::Impl>();
    impl->box = box;
    auto pts = box.points();
    impl->gg = GainGraph(static_cast<int>(pts.size()));
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) impl->index[pts[i]] = i;
    Box outer{box.radius + twist_reach(s) + 1};
    for (const auto& v : outer.points()) {
        for (int j = 1; j <= 2; ++j) {
            TorusElement r = b1_unit(s, j, v);
            if (r.is_zero()) continue;
            if (r.size() > 2) throw StructuralError("non-binomial B1 relation at " + v.str());
            std::vector<std::pair<int, Scalar>> row;
            bool inside = true;
            for (const auto& [p, c] : r.support()) {
                if (!box.contains(p)) {
                    inside = false;
                    break;
                }
                row.emplace_back(impl->index[p], c);
            }
            if (!inside) continue;
            apply_row(impl->gg, row, "H0");
        }
    }
    std::map<int, LatticePoint> best;
    for (const auto& p : pts) {
        int i = impl->index[p];
        if (impl->gg.dead(i)) continue;
        int r = impl->gg.find(i).first;
        auto it = best.find(r);
        if (it == best.end() || rep_less(p, it->second)) best[r] = p;
    }
    std::vector<std::pair<LatticePoint, int>> order;
    for (const auto& [r, p] : best) order.emplace_back(p, r);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return rep_less(a.first, b.first); });
    H0Result out;
    out.radius = box.radius;
    for (const auto& [p, r] : order) {
        impl->root_to_rep[r] = static_cast<int>(out.reps.size());
        impl->rep_weight.push_back(impl->gg.find(impl->index[p]).second);
        out.reps.push_back(p);
    }
    out.dim = static_cast<int>(out.reps.size());
    out.impl = impl;
    return out;
}

std::vector<Scalar> H2Result::express(const TorusElement& a) const {
    std::vector<Scalar> coords;
    TorusElement rest = a;
    for (const auto& b : basis) {
        const auto& [p, c] = *b.support().begin();
        Scalar x = a.coeff(p) / c;
        coords.push_back(x);
        rest -= b.scaled(x);
    }
    if (!rest.is_zero()) throw StructuralError("element is not in the span of the H2 basis");
    return coords;
}

H2Result sector_h2(const SectorComplex& s, const Box& box) {
    auto cols = box.points();
    GainGraph gg(static_cast<int>(cols.size()));
    for (const auto& [coord, row] : b2_rows(s, cols)) apply_row(gg, row, "H2");
    H2Result out;
    out.radius = box.radius;
    for (const auto& vec : live_vectors(gg)) {
        TorusElement e;
        for (const auto& [i, w] : vec) e.add_term(cols[i], w);
        out.basis.push_back(e);
    }
    std::sort(out.basis.begin(), out.basis.end(), [](const TorusElement& x, const TorusElement& y) {
        return rep_less(x.support().begin()->first, y.support().begin()->first);
    });
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

struct H1Result::Impl {
    Indexer<Coord> coords;
    SparseEchelon ech;
};

namespace {

SparseVec to_vec(Indexer<Coord>& ix, const TorusElement& a, const TorusElement& b) {
    SparseVec v;
    for (const auto& [p, c] : a.support()) v[ix.get({1, p})] = c;
    for (const auto& [p, c] : b.support()) v[ix.get({2, p})] = c;
    return v;
}

}  // namespace

std::vector<Scalar> H1Result::express(const KoszulChain& z) const {
    if (z.degree != 1) throw std::invalid_argument("H1 express needs a degree-1 chain");
    SparseVec v;
    for (const auto& [p, c] : z.a.support()) {
        auto id = impl->coords.find({1, p});
        if (!id) throw StructuralError("cycle leaves the H1 box at " + p.str());
        v[*id] = c;
    }
    for (const auto& [p, c] : z.b.support()) {
        auto id = impl->coords.find({2, p});
        if (!id) throw StructuralError("cycle leaves the H1 box at " + p.str());
        v[*id] = c;
    }
    auto tag = impl->ech.express(v);
    if (!tag) throw StructuralError("cycle is not expressible in the H1 basis modulo boundaries");
    std::vector<Scalar> out(dim);
    for (const auto& [i, c] : *tag) out.at(i) = c;
    return out;
}

H1Result sector_h1(const SectorComplex& s, const Box& box, bool with_reps) {
    auto pts = box.points();
    // Cycles: left kernel of B1 columns as a gain graph over output points.
    std::vector<Coord> cols;
    for (const auto& v : pts)
        for (int j = 1; j <= 2; ++j) cols.push_back({j, v});
    Indexer<LatticePoint> rows;
    std::vector<TorusElement> images(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        images[c] = b1_unit(s, cols[c].first, cols[c].second);
        for (const auto& kv : images[c].support()) rows.get(kv.first);
    }
    GainGraph rg(static_cast<int>(rows.keys.size()));
    for (const auto& img : images) {
        std::vector<std::pair<int, Scalar>> row;
        for (const auto& [p, c] : img.support()) row.emplace_back(*rows.find(p), c);
        apply_row(rg, row, "B1");
    }
    int rank_b1 = rg.rank();
    int dim_v = static_cast<int>(cols.size()) - rank_b1;

    // Boundaries: B2 of the enlarged box whose image stays inside the box.
    Box outer{box.radius + 2};
    auto ucols = outer.points();
    auto brows = b2_rows(s, ucols);
    GainGraph g_all(static_cast<int>(ucols.size())), g_out(static_cast<int>(ucols.size()));
    for (const auto& [coord, row] : brows) {
        apply_row(g_all, row, "B2");
        if (!box.contains(coord.second)) apply_row(g_out, row, "B2");
    }
    int dim_w = g_out.live_count() - g_all.live_count();

    H1Result out;
    out.radius = box.radius;
    out.dim_cycles = dim_v;
    out.dim_boundaries = dim_w;
    out.dim = dim_v - dim_w;
    auto impl = std::make_shared<H1Result::Impl>();
    out.impl = impl;
    for (const auto& v : pts)
        for (int j = 1; j <= 2; ++j) impl->coords.get({j, v});
    if (!with_reps || out.dim == 0) {
        if (out.dim < 0) throw StructuralError("negative H1 dimension");
        if (with_reps) {
            for (const auto& vec : live_vectors(g_out)) {
                TorusElement u;
                for (const auto& [i, w] : vec) u.add_term(ucols[i], w);
                auto [f, g] = twisted_b2(s, u);
                impl->ech.insert(to_vec(impl->coords, f, g));
            }
        }
        return out;
    }
    for (const auto& vec : live_vectors(g_out)) {
        TorusElement u;
        for (const auto& [i, w] : vec) u.add_term(ucols[i], w);
        auto [f, g] = twisted_b2(s, u);
        impl->ech.insert(to_vec(impl->coords, f, g));
    }
    auto add_rep = [&](const KoszulChain& z) {
        SparseVec tag{{static_cast<int>(out.reps.size()), Scalar::one()}};
        if (impl->ech.insert(to_vec(impl->coords, z.a, z.b), tag)) out.reps.push_back(z);
    };
    // Prefer single-monomial cycles, smallest first.
    std::vector<size_t> unit;
    for (size_t c = 0; c < cols.size(); ++c)
        if (images[c].is_zero()) unit.push_back(c);
    std::sort(unit.begin(), unit.end(), [&](size_t x, size_t y) {
        if (cols[x].second != cols[y].second) return rep_less(cols[x].second, cols[y].second);
        return cols[x].first < cols[y].first;
    });
    for (size_t c : unit) {
        if (static_cast<int>(out.reps.size()) == out.dim) break;
        KoszulChain z{1, {}, {}};
        (cols[c].first == 1 ? z.a : z.b) = TorusElement::monomial(cols[c].second);
        add_rep(z);
    }
    if (static_cast<int>(out.reps.size()) < out.dim) {
        // General cycle basis from dependent columns.
        Indexer<LatticePoint> rix;
        SparseEchelon colech;
        for (size_t c = 0; c < cols.size() && static_cast<int>(out.reps.size()) < out.dim; ++c) {
            SparseVec v, tag{{static_cast<int>(c), Scalar::one()}};
            for (const auto& [p, x] : images[c].support()) v[rix.get(p)] = x;
            colech.reduce(v, tag);
            if (!v.empty()) {
                colech.insert(v, tag);
                continue;
            }
            KoszulChain z{1, {}, {}};
            for (const auto& [ci, x] : tag) (cols[ci].first == 1 ? z.a : z.b).add_term(cols[ci].second, x);
            add_rep(z);
        }
    }
    if (static_cast<int>(out.reps.size()) != out.dim) throw StructuralError("could not complete an H1 basis");
    return out;
}

int sector_dimension(const SectorComplex& s, int degree, const Box& box) {
    switch (degree) {
        case 0: return sector_h0(s, box).dim;
        case 1: return sector_h1(s, box, false).dim;
        case 2: return sector_h2(s, box).dim;
        default: return 0;
    }
}

const std::vector<int>& default_schedule() {
    static const std::vector<int> s{4, 6, 8};
    return s;
}

Stabilized stabilized_dimension(const std::function<int(int)>& compute, const std::vector<int>& schedule) {
    if (schedule.size() < 3) throw std::invalid_argument("schedule needs at least 3 radii");
    for (size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1]) throw std::invalid_argument("schedule must be strictly increasing");
    Stabilized st;
    for (size_t i = 0; i < schedule.size(); ++i) {
        int v = compute(schedule[i]);
        st.trace.emplace_back(schedule[i], v);
        if (i > 0 && st.trace[i - 1].second == v) {
            st.value = v;
            st.radius = schedule[i];
            return st;
        }
    }
    std::ostringstream os;
    os << "dimension did not stabilize:";
    for (const auto& [r, v] : st.trace) os << " N=" << r << "->" << v;
    throw InconclusiveError(os.str());
}

std::string LinearEquation::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.pretty() << ")*a" << (t.comp ? std::to_string(t.comp) : "") << "[" << t.point.n << ","
           << t.point.m << "]";
    }
    if (first) os << "0";
    os << " = 0";
    return os.str();
}

bool proportional(const LinearEquation& a, const LinearEquation& b) {
    if (a.terms.size() != b.terms.size() || a.terms.empty()) return a.terms.size() == b.terms.size();
    Scalar ratio = a.terms[0].coeff / b.terms[0].coeff;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].comp != b.terms[i].comp || a.terms[i].point != b.terms[i].point) return false;
        if (a.terms[i].coeff != ratio * b.terms[i].coeff) return false;
    }
    return true;
}

CoefficientEquations::CoefficientEquations(SectorComplex s, int degree) : s_(std::move(s)), degree_(degree) {
    if (degree != 1 && degree != 2) throw std::invalid_argument("coefficient equations exist in degrees 1 and 2");
}

LinearEquation CoefficientEquations::at(const LatticePoint& p, int comp) const {
    const LatticePoint p1 = s_.sigma.image_u1().p, p2 = s_.sigma.image_u2().p;
    LinearEquation eq;
    std::set<std::pair<int, LatticePoint>> seen;
    if (degree_ == 1) {
        for (int j = 1; j <= 2; ++j) {
            const LatticePoint ej = j == 1 ? kE1 : kE2;
            const LatticePoint pj = j == 1 ? p1 : p2;
            for (const auto& v : {p - ej, p - pj}) {
                if (!seen.insert({j, v}).second) continue;
                Scalar c = b1_unit(s_, j, v).coeff(p);
                if (!c.is_zero()) eq.terms.push_back({j, v, c});
            }
        }
    } else {
        auto cands = comp == 1 ? std::vector<LatticePoint>{p - kE2, p - p2} : std::vector<LatticePoint>{p - p1, p - kE1};
        for (const auto& w : cands) {
            if (!seen.insert({0, w}).second) continue;
            auto [f, g] = b2_unit(s_, w);
            Scalar c = (comp == 1 ? f : g).coeff(p);
            if (!c.is_zero()) eq.terms.push_back({0, w, c});
        }
    }
    std::sort(eq.terms.begin(), eq.terms.end(), [](const EqTerm& x, const EqTerm& y) {
        return std::tie(x.comp, x.point) < std::tie(y.comp, y.point);
    });
    return eq;
}

CoefficientEquations coefficient_equations(const SectorComplex& s, int degree) { return {s, degree}; }

}  // namespace nct
