#pragma once

#include "nct/linalg.hpp"
#include "nct/symmetry.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nct {

// Twisted coefficient module of the sector g = generator^k.
struct SectorComplex {
    FiniteGroup group;
    int k;
    Automorphism sigma;

    static SectorComplex make(const FiniteGroup& g, int k);
    bool is_identity() const { return k == 0; }
    // "e" or "g^k"
    std::string label() const;
};

std::vector<SectorComplex> all_sectors(const FiniteGroup& g);
// Accepts e, g, g^k, gk or a bare integer k; nullopt when out of range.
std::optional<int> parse_element(const FiniteGroup& g, const std::string& s);

// Degree 0 and 2 use a only; degree 1 is the pair (a, b) on (e1, e2).
struct KoszulChain {
    int degree = 0;
    TorusElement a;
    TorusElement b;

    bool operator==(const KoszulChain& o) const { return degree == o.degree && a == o.a && b == o.b; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

struct Box {
    int radius = 1;
    bool contains(const LatticePoint& p) const { return std::abs(p.n) <= radius && std::abs(p.m) <= radius; }
    std::vector<LatticePoint> points() const;
};

std::pair<TorusElement, TorusElement> twisted_b2(const SectorComplex& s, const TorusElement& a);
TorusElement twisted_b1(const SectorComplex& s, const TorusElement& a1, const TorusElement& a2);
// B1 of the monomial U^v placed in component j (1 or 2).
TorusElement b1_unit(const SectorComplex& s, int j, const LatticePoint& v);
std::pair<TorusElement, TorusElement> b2_unit(const SectorComplex& s, const LatticePoint& w);

struct H0Result {
    int radius = 0;
    int dim = 0;
    std::vector<LatticePoint> reps;
    // [U^w] = coeff * [U^{reps[index]}]; index -1 when the class is zero.
    std::pair<int, Scalar> express(const LatticePoint& w) const;

    struct Impl;
    std::shared_ptr<Impl> impl;
};

struct H2Result {
    int radius = 0;
    int dim = 0;
    std::vector<TorusElement> basis;
    // Coordinates of a kernel element in the basis; throws if not in the span.
    std::vector<Scalar> express(const TorusElement& a) const;
};

struct H1Result {
    int radius = 0;
    int dim = 0;
    int dim_cycles = 0;
    int dim_boundaries = 0;
    std::vector<KoszulChain> reps;
    // Coordinates of a cycle modulo boundaries; throws if not expressible.
    std::vector<Scalar> express(const KoszulChain& z) const;

    struct Impl;
    std::shared_ptr<Impl> impl;
};

H0Result sector_h0(const SectorComplex& s, const Box& box);
H1Result sector_h1(const SectorComplex& s, const Box& box, bool with_reps = true);
H2Result sector_h2(const SectorComplex& s, const Box& box);
// Dimension only, via the same machinery; degree in 0..2.
int sector_dimension(const SectorComplex& s, int degree, const Box& box);

struct Stabilized {
    int value = 0;
    int radius = 0;
    std::vector<std::pair<int, int>> trace;  // (radius, value)
};

// First value on which two consecutive radii agree; InconclusiveError otherwise.
Stabilized stabilized_dimension(const std::function<int(int)>& compute, const std::vector<int>& schedule);

const std::vector<int>& default_schedule();

// Ordering used to pick class representatives.
bool rep_less(const LatticePoint& a, const LatticePoint& b);

struct EqTerm {
    int comp;  // 1 or 2 for degree 1 unknowns; 0 for the single degree-2 unknown
    LatticePoint point;
    Scalar coeff;
};

struct LinearEquation {
    std::vector<EqTerm> terms;  // sorted by (comp, point)
    std::string str() const;
};

bool proportional(const LinearEquation& a, const LinearEquation& b);

// Per-point linear conditions equivalent to the vanishing of B1 (degree 1)
// or B2 (degree 2, one equation per output component).
class CoefficientEquations {
public:
    CoefficientEquations(SectorComplex s, int degree);
    // Degree 1: equation at output point p. Degree 2: comp selects the component.
    LinearEquation at(const LatticePoint& p, int comp = 1) const;
    int degree() const { return degree_; }

private:
    SectorComplex s_;
    int degree_;
};

CoefficientEquations coefficient_equations(const SectorComplex& s, int degree);

}  // namespace nct
