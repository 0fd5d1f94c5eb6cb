#include "nct/chainmaps.hpp"

#include "nct/errors.hpp"

#include <tuple>

namespace nct {

EnvElement gdd(const EnvElement& x, const EnvElement& y, const Scalar& alpha, const Scalar& beta, int n) {
    EnvElement ax = x.scaled(alpha), by = y.scaled(beta);
    EnvElement r;
    if (n >= 1) {
        for (int j = 0; j < n; ++j) r = r + ax.pow(j) * by.pow(n - 1 - j);
    } else if (n < 0) {
        for (int j = n; j <= -1; ++j) r = r - ax.pow(j) * by.pow(n - 1 - j);
    }
    return r;
}

BarChain h_map(const KoszulChain& z) {
    switch (z.degree) {
        case 0: return bar_from_torus(z.a);
        case 1: return bar_tensor(z.a, {kE1}) + bar_tensor(z.b, {kE2});
        case 2: return bar_tensor(z.a, {kE2, kE1}) - bar_tensor(z.a, {kE1, kE2}, lambda());
        default: throw std::invalid_argument("h_map degree must be 0..2");
    }
}

std::pair<EnvElement, EnvElement> k1_coefficients(const LatticePoint& nu) {
    const Scalar one = Scalar::one();
    EnvElement e1 = gdd(EnvElement::right(kE1), EnvElement::left(kE1), one, one, nu.n) * EnvElement::left({0, nu.m});
    EnvElement e2 = gdd(EnvElement::right(kE2), EnvElement::left(kE2), one, one, nu.m) * EnvElement::right({nu.n, 0});
    return {e1, e2};
}

namespace {

// Exact left division by right(e2) - lambda left(e2).
EnvElement divide_op1(const EnvElement& r) {
    // Group by (L.n, R.n, L.m + R.m); index by x = L.m.
    std::map<std::tuple<int, int, int>, std::map<int, Scalar>> groups;
    for (const auto& [key, c] : r.terms()) {
        const auto& [l, rr] = key;
        groups[{l.n, rr.n, l.m + rr.m}][l.m] = c;
    }
    EnvElement q;
    for (const auto& [g, terms] : groups) {
        const auto& [ln, rn, sum] = g;
        Scalar gamma = lambda() * Scalar::t_power(2 * ln);
        int lo = terms.begin()->first, hi = terms.rbegin()->first;
        Scalar prev;
        for (int x = lo; x <= hi; ++x) {
            auto it = terms.find(x);
            Scalar cur = (it == terms.end() ? Scalar() : it->second) + gamma * prev;
            if (x == hi) {
                if (!cur.is_zero()) throw StructuralError("k2 numerator is not divisible");
                break;
            }
            if (!cur.is_zero()) q.add_term(cur, {ln, x}, {rn, sum - 1 - x});
            prev = cur;
        }
    }
    return q;
}

}  // namespace

EnvElement k2_coefficient(const LatticePoint& nu, const LatticePoint& mu) {
    auto [a_mu, b_mu] = k1_coefficients(mu);
    auto [a_nu, b_nu] = k1_coefficients(nu);
    auto [a_sum, b_sum] = k1_coefficients(nu + mu);
    Scalar ph = Scalar::t_power(phase_exponent(nu, mu));
    EnvElement r1 = a_mu * EnvElement::right(nu) - a_sum.scaled(ph) + a_nu * EnvElement::left(mu);
    EnvElement r2 = b_mu * EnvElement::right(nu) - b_sum.scaled(ph) + b_nu * EnvElement::left(mu);
    EnvElement kappa = divide_op1(r1);
    EnvElement op2 = EnvElement::left(kE1) - EnvElement::right(kE1).scaled(lambda());
    if (op2 * kappa != r2) throw StructuralError("k2 second component does not match");
    return kappa;
}

KoszulChain k_map(const SectorComplex& s, const BarChain& c) {
    KoszulChain z{c.degree(), {}, {}};
    for (const auto& [f, x] : c.terms()) {
        TorusElement m = TorusElement::monomial(x, f[0]);
        if (c.degree() == 0) {
            z.a += m;
        } else if (c.degree() == 1) {
            auto [e1, e2] = k1_coefficients(f[1]);
            z.a += env_act(e1, m, &s.sigma);
            z.b += env_act(e2, m, &s.sigma);
        } else {
            z.a += env_act(k2_coefficient(f[1], f[2]), m, &s.sigma);
        }
    }
    return z;
}

BarChain bar_boundary(const SectorComplex& s, const BarChain& c) {
    if (c.degree() == 0) throw std::invalid_argument("no boundary on degree-0 bar chains");
    BarChain out(c.degree() - 1);
    for (const auto& [f, x] : c.terms()) {
        const Mono m{x, f[0]};
        if (c.degree() == 1) {
            Mono ma = mono_mul(m, {Scalar::one(), f[1]});
            Mono sa = mono_mul(s.sigma.apply(f[1]), m);
            out.add_term(ma.c, {ma.p});
            out.add_term(-sa.c, {sa.p});
        } else {
            Mono ma = mono_mul(m, {Scalar::one(), f[1]});
            out.add_term(ma.c, {ma.p, f[2]});
            auto [ph, ac] = monomial_mul(f[1], f[2]);
            out.add_term(-(x * ph), {f[0], ac});
            Mono cm = mono_mul(s.sigma.apply(f[2]), m);
            out.add_term(cm.c, {cm.p, f[1]});
        }
    }
    return out;
}

KoszulChain koszul_boundary(const SectorComplex& s, const KoszulChain& z) {
    if (z.degree == 2) {
        auto [f, g] = twisted_b2(s, z.a);
        return {1, f, g};
    }
    if (z.degree == 1) return {0, twisted_b1(s, z.a, z.b), {}};
    throw std::invalid_argument("no boundary on degree-0 chains");
}

BarChain act_on_bar(const Automorphism& g, const BarChain& c) {
    BarChain out(c.degree());
    for (const auto& [f, x] : c.terms()) {
        Scalar coeff = x;
        BarChain::Factors img;
        for (const auto& p : f) {
            Mono m = g.apply(p);
            coeff *= m.c;
            img.push_back(m.p);
        }
        out.add_term(coeff, img);
    }
    return out;
}

HomologyBases homology_bases(const SectorComplex& s, const Box& box) {
    return {sector_h0(s, box), sector_h1(s, box), sector_h2(s, box)};
}

ActionMatrix action_on_homology(const SectorComplex& s, const Automorphism& g, int order, int degree,
                                const HomologyBases& bases) {
    ActionMatrix am;
    am.degree = degree;
    am.sector = s.label();
    am.order = order;
    if (degree == 0) {
        const auto& h = bases.h0;
        am.matrix.assign(h.dim, std::vector<Scalar>(h.dim));
        for (int j = 0; j < h.dim; ++j) {
            Mono img = g.apply(h.reps[j]);
            auto [i, c] = h.express(img.p);
            if (i < 0) throw StructuralError("image of an H0 representative vanished");
            am.matrix[i][j] = img.c * c;
        }
    } else if (degree == 1) {
        const auto& h = bases.h1;
        am.matrix.assign(h.dim, std::vector<Scalar>(h.dim));
        for (int j = 0; j < h.dim; ++j) {
            KoszulChain img = k_map(s, act_on_bar(g, h_map(h.reps[j])));
            auto col = h.express(img);
            for (int i = 0; i < h.dim; ++i) am.matrix[i][j] = col[i];
        }
    } else if (degree == 2) {
        const auto& h = bases.h2;
        am.matrix.assign(h.dim, std::vector<Scalar>(h.dim));
        for (int j = 0; j < h.dim; ++j) {
            KoszulChain img = k_map(s, act_on_bar(g, h_map({2, h.basis[j], {}})));
            auto col = h.express(img.a);
            for (int i = 0; i < h.dim; ++i) am.matrix[i][j] = col[i];
        }
    } else {
        throw std::invalid_argument("action degree must be 0..2");
    }
    return am;
}

int invariant_dimension(const ActionMatrix& m) {
    size_t n = m.matrix.size();
    if (n == 0) return 0;
    Matrix p = identity_matrix(n);
    for (int k = 0; k < m.order; ++k) p = mat_mul(p, m.matrix);
    if (p != identity_matrix(n)) throw StructuralError("action matrix does not have the group order");
    return static_cast<int>(n) - rank_over_field(mat_sub(m.matrix, identity_matrix(n)));
}

}  // namespace nct
