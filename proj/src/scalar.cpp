#include "nct/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nct {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

mpq_class parse_rational(const std::string& s) {
    std::string x = trim(s);
    if (x.empty() || x == "+") return 1;
    if (x == "-") return -1;
    mpq_class q;
    if (q.set_str(x, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace

LaurentPoly::LaurentPoly(const mpq_class& c, int e) {
    if (c != 0) {
        terms_.emplace_back(e, c);
        terms_.back().second.canonicalize();
    }
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        t.second.canonicalize();
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

mpq_class LaurentPoly::coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class s = terms_[i].second + o.terms_[j].second;
            if (s != 0) r.terms_.emplace_back(terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.terms_.size() == 1) return scaled(o.terms_[0].second).shifted(o.terms_[0].first);
    if (terms_.size() == 1) return o.scaled(terms_[0].second).shifted(terms_[0].first);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.emplace_back(a.first + b.first, a.second * b.second);
    return from_terms(std::move(acc));
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
        if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
    }
    return terms_.size() < o.terms_.size();
}

mpq_class LaurentPoly::eval(const mpq_class& t) const {
    if (t == 0 && !is_zero() && low() < 0) throw std::domain_error("evaluation at t = 0 of a negative power");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class p = 1;
        mpq_class base = e >= 0 ? t : mpq_class(1 / t);
        for (int i = 0; i < std::abs(e); ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = LaurentPoly();
    if (a.is_zero()) {
        r = LaurentPoly();
        return;
    }
    // Dense descending coefficient arrays for speed.
    LaurentPoly A = a.shifted(-a.low());
    LaurentPoly B = b.shifted(-b.low());
    int da = A.high(), db = B.high();
    if (da < db) {
        r = A;
        return;
    }
    std::vector<mpq_class> ra(da + 1), rb(db + 1);
    for (const auto& [e, c] : A.terms_) ra[e] = c;
    for (const auto& [e, c] : B.terms_) rb[e] = c;
    mpq_class lead_inv = 1 / rb[db];
    std::vector<Term> qt;
    for (int k = da; k >= db; --k) {
        if (ra[k] == 0) continue;
        mpq_class f = ra[k] * lead_inv;
        qt.emplace_back(k - db, f);
        for (int j = 0; j <= db; ++j)
            if (rb[j] != 0) ra[k - db + j] -= f * rb[j];
    }
    q = from_terms(std::move(qt));
    std::vector<Term> rt;
    for (int e = 0; e < db; ++e)
        if (ra[e] != 0) rt.emplace_back(e, ra[e]);
    r = from_terms(std::move(rt));
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (b.is_monomial()) return a.scaled(1 / b.trailing()).shifted(-b.low());
    LaurentPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q.shifted(a.low() - b.low());
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.is_zero() ? a : a.shifted(-a.low());
    LaurentPoly y = b.is_zero() ? b : b.shifted(-b.low());
    while (!y.is_zero()) {
        LaurentPoly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = r.is_zero() ? r : r.shifted(-r.low());
        if (!y.is_zero()) y = y.scaled(1 / y.leading());
    }
    if (x.is_zero()) return x;
    return x.scaled(1 / x.leading());
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*t^" << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    std::string x;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) x.push_back(ch);
    if (x.empty()) throw std::invalid_argument("empty polynomial text");
    if (x == "0") return {};
    // Split into signed terms; a sign after '^', '+' or '-' belongs to the next token.
    std::vector<std::string> toks;
    size_t start = 0;
    for (size_t i = 1; i <= x.size(); ++i)
        if (i == x.size() || ((x[i] == '+' || x[i] == '-') && std::string("^+-").find(x[i - 1]) == std::string::npos)) {
            toks.push_back(x.substr(start, i - start));
            start = i;
        }
    std::vector<Term> terms;
    for (std::string tok : toks) {
        if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
        if (tok.empty() || tok == "-") throw std::invalid_argument("bad polynomial text: " + s);
        auto tpos = tok.find('t');
        if (tpos == std::string::npos) {
            terms.emplace_back(0, parse_rational(tok));
            continue;
        }
        std::string cpart = tok.substr(0, tpos);
        if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        mpq_class c = cpart.empty() ? mpq_class(1) : cpart == "-" ? mpq_class(-1) : parse_rational(cpart);
        std::string epart = tok.substr(tpos + 1);
        int e = 1;
        if (!epart.empty()) {
            if (epart[0] != '^') throw std::invalid_argument("bad exponent: " + tok);
            size_t used = 0;
            std::string es = epart.substr(1);
            e = std::stoi(es, &used);
            if (used != es.size()) throw std::invalid_argument("bad exponent: " + tok);
        }
        terms.emplace_back(e, c);
    }
    return from_terms(std::move(terms));
}

Scalar::Scalar() : num_(), den_(mpq_class(1)) {}
Scalar::Scalar(long v) : num_(mpq_class(v)), den_(mpq_class(1)) {}
Scalar::Scalar(const mpq_class& v) : num_(v), den_(mpq_class(1)) {}
Scalar::Scalar(LaurentPoly num) : num_(std::move(num)), den_(mpq_class(1)) {}
Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

Scalar Scalar::t_power(int k) { return Scalar(Raw{}, LaurentPoly(mpq_class(1), k), LaurentPoly(mpq_class(1))); }

void Scalar::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(mpq_class(1));
        return;
    }
    int d = den_.low();
    if (d != 0) {
        num_ = num_.shifted(-d);
        den_ = den_.shifted(-d);
    }
    if (den_.is_monomial()) {
        if (den_.trailing() != 1) num_ = num_.scaled(1 / den_.trailing());
        den_ = LaurentPoly(mpq_class(1));
        return;
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (g.high() > 0) {
        num_ = LaurentPoly::divexact(num_, g);
        den_ = LaurentPoly::divexact(den_, g);
    }
    mpq_class c = den_.leading();
    if (c != 1) {
        num_ = num_.scaled(1 / c);
        den_ = den_.scaled(1 / c);
    }
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar Scalar::operator+(const Scalar& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (den_.is_one() && o.den_.is_one()) return Scalar(Raw{}, num_ + o.num_, den_);
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (den_.is_one() && o.den_.is_one()) return Scalar(Raw{}, num_ * o.num_, den_);
    if (o.is_monomial()) return Scalar(Raw{}, num_ * o.num_, den_);
    if (is_monomial()) return Scalar(Raw{}, num_ * o.num_, o.den_);
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (is_monomial()) {
        const auto& [e, c] = num_.terms()[0];
        return Scalar(Raw{}, LaurentPoly(1 / c, -e), den_);
    }
    return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_monomial()) {
        if (is_zero()) return Scalar();
        const auto& [e, c] = o.num_.terms()[0];
        return Scalar(Raw{}, num_.scaled(1 / c).shifted(-e), den_);
    }
    return *this * o.inv();
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

mpq_class Scalar::eval(const mpq_class& t) const {
    mpq_class d = den_.eval(t);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(t) / d;
}

std::string LaurentPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class a = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = a == 1 && e != 0;
        if (!unit) os << a.get_str();
        if (e != 0) os << (unit ? "" : "*") << "t" << (e == 1 ? "" : "^" + std::to_string(e));
    }
    return os.str();
}

std::string Scalar::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

std::string Scalar::pretty() const {
    if (den_.is_one()) return num_.pretty();
    return "(" + num_.pretty() + ")/(" + den_.pretty() + ")";
}

Scalar Scalar::parse(const std::string& s) {
    std::string x = trim(s);
    if (!x.empty() && x.front() == '(') {
        auto mid = x.find(")/(");
        if (mid == std::string::npos || x.back() != ')') throw std::invalid_argument("bad scalar text: " + s);
        LaurentPoly n = LaurentPoly::parse(x.substr(1, mid - 1));
        LaurentPoly d = LaurentPoly::parse(x.substr(mid + 3, x.size() - mid - 4));
        return Scalar(n, d);
    }
    return Scalar(LaurentPoly::parse(x));
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_inv(const Scalar& a) { return a.inv(); }
Scalar lambda_power(int k) { return Scalar::t_power(k); }

}  // namespace nct
