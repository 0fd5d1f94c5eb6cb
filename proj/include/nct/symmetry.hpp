#pragma once

#include "nct/torus.hpp"

#include <array>
#include <optional>
#include <string>

namespace nct {

enum class GroupName { Z2, Z3, Z4, Z6 };

struct FiniteGroup {
    GroupName name;
    int order;

    std::string str() const;
    static FiniteGroup make(GroupName g);
    // Accepts z2|z3|z4|z6 (case-insensitive); nullopt otherwise.
    static std::optional<FiniteGroup> parse(const std::string& s);
    bool operator==(const FiniteGroup& o) const { return name == o.name; }
};

const std::array<FiniteGroup, 4>& all_groups();

// Algebra automorphism fixed by the images of U1 and U2.
class Automorphism {
public:
    Automorphism(Mono u1, Mono u2);
    static Automorphism identity();

    const Mono& image_u1() const { return u1_; }
    const Mono& image_u2() const { return u2_; }

    Mono apply(const LatticePoint& p) const;
    Mono apply(const Mono& m) const;
    TorusElement apply(const TorusElement& a) const;

    // Integer matrix whose rows are the exponent images of U1, U2.
    std::array<std::array<int, 2>, 2> matrix() const;
    bool is_identity() const;
    // image_U2 image_U1 == lambda image_U1 image_U2
    bool preserves_relation() const;

    bool operator==(const Automorphism& o) const;
    bool operator!=(const Automorphism& o) const { return !(*this == o); }
    std::string str() const;

private:
    Mono u1_;
    Mono u2_;
};

Automorphism generator(const FiniteGroup& g);
TorusElement apply(const Automorphism& s, const TorusElement& a);
// (s o t)(x) = s(t(x))
Automorphism compose(const Automorphism& s, const Automorphism& t);
Automorphism power(const Automorphism& s, int k);

}  // namespace nct
