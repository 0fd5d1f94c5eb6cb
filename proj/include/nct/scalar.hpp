#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace nct {

// Sparse Laurent polynomial in t with rational coefficients.
// Terms are kept sorted by exponent, no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<int, mpq_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(const mpq_class& c, int e = 0);
    static LaurentPoly monomial(const mpq_class& c, int e) { return LaurentPoly(c, e); }
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }
    int low() const { return terms_.front().first; }
    int high() const { return terms_.back().first; }
    int degree_span() const { return is_zero() ? -1 : high() - low(); }
    const mpq_class& leading() const { return terms_.back().second; }
    const mpq_class& trailing() const { return terms_.front().second; }
    mpq_class coeff(int e) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const mpq_class& c) const;
    LaurentPoly shifted(int k) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

    mpq_class eval(const mpq_class& t) const;

    // Division with remainder after shifting both to lowest exponent 0.
    // Quotient/remainder are true polynomials (exponents >= 0).
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
    // Exact division a / b; throws if b does not divide a in Q[t, 1/t].
    static LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);
    // Monic gcd of the polynomial parts (t-power factors ignored).
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    std::string str() const;
    // Human-readable form such as "t^2 - 1".
    std::string pretty() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::vector<Term> terms_;
};

// Element of Q(t) in canonical form:
// gcd(num, den) = 1, den has lowest exponent 0 and leading coefficient 1.
class Scalar {
public:
    Scalar();
    Scalar(long v);
    Scalar(const mpq_class& v);
    explicit Scalar(LaurentPoly num);
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1L); }
    static Scalar t_power(int k);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_monomial() const { return num_.is_monomial() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    mpq_class eval(const mpq_class& t) const;

    std::string str() const;
    std::string pretty() const;
    static Scalar parse(const std::string& s);

    // Re-run canonicalization on the stored pair (idempotent).
    Scalar canon() const { return Scalar(num_, den_); }

private:
    struct Raw {};
    Scalar(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_inv(const Scalar& a);
// t^k, i.e. lambda^{k/2}
Scalar lambda_power(int k);
inline Scalar lambda() { return lambda_power(2); }

}  // namespace nct
