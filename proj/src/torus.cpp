#include "nct/torus.hpp"

#include "nct/symmetry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nct {

std::pair<Scalar, LatticePoint> monomial_mul(const LatticePoint& a, const LatticePoint& b) {
    return {Scalar::t_power(phase_exponent(a, b)), a + b};
}

Mono mono_mul(const Mono& a, const Mono& b) {
    return {a.c * b.c * Scalar::t_power(phase_exponent(a.p, b.p)), a.p + b.p};
}

Mono mono_inv(const Mono& a) {
    // (U^(x,y))^{-1} = lambda^{xy} U^(-x,-y)
    return {a.c.inv() * Scalar::t_power(2 * a.p.n * a.p.m), -a.p};
}

Mono mono_pow(const Mono& a, long k) {
    Mono base = k >= 0 ? a : mono_inv(a);
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    Mono acc{Scalar::one(), {0, 0}};
    while (e) {
        if (e & 1UL) acc = mono_mul(acc, base);
        e >>= 1;
        if (e) base = mono_mul(base, base);
    }
    return acc;
}

TorusElement TorusElement::monomial(const Scalar& c, const LatticePoint& p) {
    TorusElement r;
    r.add_term(p, c);
    return r;
}

Scalar TorusElement::coeff(const LatticePoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar() : it->second;
}

void TorusElement::add_term(const LatticePoint& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    TorusElement r = *this;
    r += o;
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
    TorusElement r = *this;
    r -= o;
    return r;
}

TorusElement TorusElement::operator-() const {
    TorusElement r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
    TorusElement r;
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_) r.add_term(p + q, c * d * Scalar::t_power(phase_exponent(p, q)));
    return r;
}

TorusElement TorusElement::scaled(const Scalar& c) const {
    if (c.is_zero()) return {};
    TorusElement r;
    for (const auto& [p, d] : terms_) r.terms_.emplace(p, d * c);
    return r;
}

int TorusElement::radius() const {
    int r = -1;
    for (const auto& kv : terms_) r = std::max({r, std::abs(kv.first.n), std::abs(kv.first.m)});
    return r;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.pretty() << ")*U" << p.str();
    }
    return os.str();
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b) { return a * b; }
TorusElement torus_add(const TorusElement& a, const TorusElement& b) { return a + b; }
TorusElement torus_scale(const TorusElement& a, const Scalar& c) { return a.scaled(c); }

TorusElement mono_times(const Mono& m, const TorusElement& a) {
    TorusElement r;
    for (const auto& [p, c] : a.support()) r.add_term(m.p + p, m.c * c * Scalar::t_power(phase_exponent(m.p, p)));
    return r;
}

TorusElement times_mono(const TorusElement& a, const Mono& m) {
    TorusElement r;
    for (const auto& [p, c] : a.support()) r.add_term(p + m.p, c * m.c * Scalar::t_power(phase_exponent(p, m.p)));
    return r;
}

EnvElement EnvElement::term(const Scalar& c, const LatticePoint& l, const LatticePoint& r) {
    EnvElement e;
    e.add_term(c, l, r);
    return e;
}

void EnvElement::add_term(const Scalar& c, const LatticePoint& l, const LatticePoint& r) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(Key{l, r}, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

EnvElement EnvElement::operator+(const EnvElement& o) const {
    EnvElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
    return r;
}

EnvElement EnvElement::operator-(const EnvElement& o) const { return *this + o.scaled(Scalar(-1L)); }

EnvElement EnvElement::operator*(const EnvElement& o) const {
    EnvElement r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            // left factors in A order, right factors reversed
            int ph = phase_exponent(k1.first, k2.first) + phase_exponent(k2.second, k1.second);
            r.add_term(c1 * c2 * Scalar::t_power(ph), k1.first + k2.first, k1.second + k2.second);
        }
    return r;
}

EnvElement EnvElement::scaled(const Scalar& c) const {
    EnvElement r;
    for (const auto& [k, d] : terms_) r.add_term(d * c, k.first, k.second);
    return r;
}

EnvElement EnvElement::pow(int k) const {
    if (k < 0) {
        if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial env element");
        const auto& [key, c] = *terms_.begin();
        Mono l = mono_inv({c, key.first});
        Mono r = mono_inv({Scalar::one(), key.second});
        return term(l.c * r.c, l.p, r.p).pow(-k);
    }
    EnvElement acc = one();
    EnvElement base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

std::string EnvElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.pretty() << ")*[U" << k.first.str() << " x U" << k.second.str() << "]";
    }
    return os.str();
}

EnvElement env_mul(const EnvElement& a, const EnvElement& b) { return a * b; }

TorusElement env_act(const EnvElement& e, const TorusElement& a, const Automorphism* twist) {
    TorusElement r;
    for (const auto& [k, c] : e.terms()) {
        Mono l = twist ? twist->apply(k.first) : Mono{Scalar::one(), k.first};
        l.c *= c;
        r += times_mono(mono_times(l, a), Mono{Scalar::one(), k.second});
    }
    return r;
}

BarChain::BarChain(int degree) : degree_(degree) {
    if (degree < 0 || degree > 2) throw std::invalid_argument("bar chain degree must be 0..2");
}

BarChain BarChain::term(const Scalar& c, Factors f) {
    if (f.empty()) throw std::invalid_argument("bar chain term needs at least one factor");
    BarChain b(static_cast<int>(f.size()) - 1);
    b.add_term(c, f);
    return b;
}

void BarChain::add_term(const Scalar& c, const Factors& f) {
    if (static_cast<int>(f.size()) != degree_ + 1) throw std::invalid_argument("bar chain arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(f, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BarChain BarChain::operator+(const BarChain& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("bar chain degree mismatch");
    BarChain r = *this;
    for (const auto& [f, c] : o.terms_) r.add_term(c, f);
    return r;
}

BarChain BarChain::operator-(const BarChain& o) const { return *this + o.scaled(Scalar(-1L)); }

BarChain BarChain::scaled(const Scalar& c) const {
    BarChain r(degree_);
    for (const auto& [f, d] : terms_) r.add_term(d * c, f);
    return r;
}

std::string BarChain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.pretty() << ")*";
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " x U" : "U") << f[i].str();
    }
    return os.str();
}

BarChain bar_from_torus(const TorusElement& a) {
    BarChain b(0);
    for (const auto& [p, c] : a.support()) b.add_term(c, {p});
    return b;
}

TorusElement bar_to_torus(const BarChain& c) {
    if (c.degree() != 0) throw std::invalid_argument("bar_to_torus needs a degree-0 chain");
    TorusElement r;
    for (const auto& [f, s] : c.terms()) r.add_term(f[0], s);
    return r;
}

BarChain bar_tensor(const TorusElement& m, const std::vector<LatticePoint>& tail, const Scalar& c) {
    BarChain b(static_cast<int>(tail.size()));
    for (const auto& [p, s] : m.support()) {
        BarChain::Factors f{p};
        f.insert(f.end(), tail.begin(), tail.end());
        b.add_term(s * c, f);
    }
    return b;
}

}  // namespace nct
