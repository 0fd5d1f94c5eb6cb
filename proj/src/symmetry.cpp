#include "nct/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nct {

std::string FiniteGroup::str() const {
    switch (name) {
        case GroupName::Z2: return "Z2";
        case GroupName::Z3: return "Z3";
        case GroupName::Z4: return "Z4";
        case GroupName::Z6: return "Z6";
    }
    return "?";
}

FiniteGroup FiniteGroup::make(GroupName g) {
    switch (g) {
        case GroupName::Z2: return {g, 2};
        case GroupName::Z3: return {g, 3};
        case GroupName::Z4: return {g, 4};
        case GroupName::Z6: return {g, 6};
    }
    throw std::invalid_argument("unknown group");
}

std::optional<FiniteGroup> FiniteGroup::parse(const std::string& s) {
    std::string x = s;
    std::transform(x.begin(), x.end(), x.begin(), [](unsigned char c) { return std::tolower(c); });
    if (x == "z2") return make(GroupName::Z2);
    if (x == "z3") return make(GroupName::Z3);
    if (x == "z4") return make(GroupName::Z4);
    if (x == "z6") return make(GroupName::Z6);
    return std::nullopt;
}

const std::array<FiniteGroup, 4>& all_groups() {
    static const std::array<FiniteGroup, 4> gs{FiniteGroup::make(GroupName::Z2), FiniteGroup::make(GroupName::Z3),
                                               FiniteGroup::make(GroupName::Z4), FiniteGroup::make(GroupName::Z6)};
    return gs;
}

Automorphism::Automorphism(Mono u1, Mono u2) : u1_(std::move(u1)), u2_(std::move(u2)) {
    if (u1_.c.is_zero() || u2_.c.is_zero()) throw std::invalid_argument("automorphism image has zero scalar");
}

Automorphism Automorphism::identity() { return {{Scalar::one(), kE1}, {Scalar::one(), kE2}}; }

Mono Automorphism::apply(const LatticePoint& p) const { return mono_mul(mono_pow(u1_, p.n), mono_pow(u2_, p.m)); }

Mono Automorphism::apply(const Mono& m) const {
    Mono r = apply(m.p);
    r.c *= m.c;
    return r;
}

TorusElement Automorphism::apply(const TorusElement& a) const {
    TorusElement r;
    for (const auto& [p, c] : a.support()) {
        Mono im = apply(p);
        r.add_term(im.p, im.c * c);
    }
    return r;
}

std::array<std::array<int, 2>, 2> Automorphism::matrix() const {
    return {{{u1_.p.n, u1_.p.m}, {u2_.p.n, u2_.p.m}}};
}

bool Automorphism::is_identity() const { return *this == identity(); }

bool Automorphism::preserves_relation() const {
    Mono lhs = mono_mul(u2_, u1_);
    Mono rhs = mono_mul(u1_, u2_);
    return lhs.p == rhs.p && lhs.c == rhs.c * lambda();
}

bool Automorphism::operator==(const Automorphism& o) const {
    return u1_.p == o.u1_.p && u2_.p == o.u2_.p && u1_.c == o.u1_.c && u2_.c == o.u2_.c;
}

std::string Automorphism::str() const {
    return "U1 -> " + u1_.c.str() + "*U" + u1_.p.str() + ", U2 -> " + u2_.c.str() + "*U" + u2_.p.str();
}

Automorphism generator(const FiniteGroup& g) {
    const Scalar one = Scalar::one();
    const Scalar tinv = lambda_power(-1);
    switch (g.name) {
        case GroupName::Z2: return {{one, {-1, 0}}, {one, {0, -1}}};
        case GroupName::Z3: return {{one, {0, -1}}, {tinv, {1, -1}}};
        case GroupName::Z4: return {{one, {0, -1}}, {one, {1, 0}}};
        case GroupName::Z6: return {{one, {0, 1}}, {tinv, {-1, 1}}};
    }
    throw std::invalid_argument("unknown group");
}

TorusElement apply(const Automorphism& s, const TorusElement& a) { return s.apply(a); }

Automorphism compose(const Automorphism& s, const Automorphism& t) {
    return {s.apply(t.image_u1()), s.apply(t.image_u2())};
}

Automorphism power(const Automorphism& s, int k) {
    if (k < 0) throw std::invalid_argument("negative automorphism power");
    Automorphism r = Automorphism::identity();
    for (int i = 0; i < k; ++i) r = compose(s, r);
    return r;
}

}  // namespace nct
