#pragma once

#include "nct/scalar.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nct {

// Exponent pair (n, m) of the normal-ordered monomial U1^n U2^m.
struct LatticePoint {
    int n = 0;
    int m = 0;

    auto operator<=>(const LatticePoint&) const = default;
    LatticePoint operator+(const LatticePoint& o) const { return {n + o.n, m + o.m}; }
    LatticePoint operator-(const LatticePoint& o) const { return {n - o.n, m - o.m}; }
    LatticePoint operator-() const { return {-n, -m}; }
    LatticePoint operator*(int k) const { return {n * k, m * k}; }
    std::string str() const { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }
};

inline constexpr LatticePoint kE1{1, 0};
inline constexpr LatticePoint kE2{0, 1};

// t-exponent of the phase in U^a U^b = t^{2 m_a n_b} U^{a+b}.
inline int phase_exponent(const LatticePoint& a, const LatticePoint& b) { return 2 * a.m * b.n; }

std::pair<Scalar, LatticePoint> monomial_mul(const LatticePoint& a, const LatticePoint& b);

// Scalar-weighted monomial c U^p.
struct Mono {
    Scalar c;
    LatticePoint p;
};

Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_inv(const Mono& a);
// Square-and-multiply power, negative k allowed.
Mono mono_pow(const Mono& a, long k);

class TorusElement {
public:
    using Map = std::map<LatticePoint, Scalar>;

    TorusElement() = default;
    static TorusElement monomial(const Scalar& c, const LatticePoint& p);
    static TorusElement monomial(const LatticePoint& p) { return monomial(Scalar::one(), p); }
    static TorusElement one() { return monomial(LatticePoint{0, 0}); }
    static TorusElement from_mono(const Mono& m) { return monomial(m.c, m.p); }

    const Map& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Scalar coeff(const LatticePoint& p) const;

    void add_term(const LatticePoint& p, const Scalar& c);

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement operator-() const;
    TorusElement operator*(const TorusElement& o) const;
    TorusElement scaled(const Scalar& c) const;
    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);

    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    // Sup-norm radius of the support; -1 when zero.
    int radius() const;
    std::string str() const;

private:
    Map terms_;
};

TorusElement torus_mul(const TorusElement& a, const TorusElement& b);
TorusElement torus_add(const TorusElement& a, const TorusElement& b);
TorusElement torus_scale(const TorusElement& a, const Scalar& c);
TorusElement mono_times(const Mono& m, const TorusElement& a);
TorusElement times_mono(const TorusElement& a, const Mono& m);

class Automorphism;

// Sum of c (U^left (x) U^right) in A (x) A^op.
// Acting on a: c sigma(U^left) a U^right.
class EnvElement {
public:
    using Key = std::pair<LatticePoint, LatticePoint>;
    using Map = std::map<Key, Scalar>;

    EnvElement() = default;
    static EnvElement term(const Scalar& c, const LatticePoint& left, const LatticePoint& right);
    static EnvElement one() { return term(Scalar::one(), {0, 0}, {0, 0}); }
    // U^p (x) 1 and 1 (x) U^p.
    static EnvElement left(const LatticePoint& p) { return term(Scalar::one(), p, {0, 0}); }
    static EnvElement right(const LatticePoint& p) { return term(Scalar::one(), {0, 0}, p); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Scalar& c, const LatticePoint& l, const LatticePoint& r);

    EnvElement operator+(const EnvElement& o) const;
    EnvElement operator-(const EnvElement& o) const;
    EnvElement operator*(const EnvElement& o) const;
    EnvElement scaled(const Scalar& c) const;
    EnvElement pow(int k) const;

    bool operator==(const EnvElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const EnvElement& o) const { return !(*this == o); }
    std::string str() const;

private:
    Map terms_;
};

EnvElement env_mul(const EnvElement& a, const EnvElement& b);
TorusElement env_act(const EnvElement& e, const TorusElement& a, const Automorphism* twist = nullptr);

// Sum of c U^{v0} (x) ... (x) U^{vk}, k = degree (0..2).
class BarChain {
public:
    using Factors = std::vector<LatticePoint>;
    using Map = std::map<Factors, Scalar>;

    explicit BarChain(int degree = 0);
    static BarChain term(const Scalar& c, Factors f);

    int degree() const { return degree_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Scalar& c, const Factors& f);

    BarChain operator+(const BarChain& o) const;
    BarChain operator-(const BarChain& o) const;
    BarChain scaled(const Scalar& c) const;

    bool operator==(const BarChain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
    bool operator!=(const BarChain& o) const { return !(*this == o); }
    std::string str() const;

private:
    int degree_;
    Map terms_;
};

// Leading factor as a degree-0 chain.
BarChain bar_from_torus(const TorusElement& a);
TorusElement bar_to_torus(const BarChain& c);
// m (x) U^f1 (x) ... for a module element m.
BarChain bar_tensor(const TorusElement& m, const std::vector<LatticePoint>& tail, const Scalar& c = Scalar::one());

}  // namespace nct
