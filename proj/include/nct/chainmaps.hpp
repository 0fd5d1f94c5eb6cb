#pragma once

#include "nct/koszul.hpp"

namespace nct {

// Divided difference: (aX - bY) * gdd(X, Y, a, b, n) = (aX)^n - (bY)^n.
EnvElement gdd(const EnvElement& x, const EnvElement& y, const Scalar& alpha, const Scalar& beta, int n);

// Koszul -> bar. Degree 1 uses the pair (a, b) on (e1, e2).
BarChain h_map(const KoszulChain& z);

// Coefficients of k1(1 (x) U^nu) on e1 and e2, as enveloping elements.
std::pair<EnvElement, EnvElement> k1_coefficients(const LatticePoint& nu);
// Enveloping element kappa with B2(kappa . m) = k1(b2(m (x) U^nu (x) U^mu)).
EnvElement k2_coefficient(const LatticePoint& nu, const LatticePoint& mu);

// Bar -> Koszul in the given sector; the module factor is acted on with the twist.
KoszulChain k_map(const SectorComplex& s, const BarChain& c);

// Twisted bar differentials of the sector.
BarChain bar_boundary(const SectorComplex& s, const BarChain& c);
// Koszul differential as a chain: degree 2 -> 1 -> 0.
KoszulChain koszul_boundary(const SectorComplex& s, const KoszulChain& z);

// Diagonal action of an automorphism on every tensor factor.
BarChain act_on_bar(const Automorphism& g, const BarChain& c);

struct ActionMatrix {
    int degree = 0;
    std::string sector;  // label of the sector
    int order = 1;
    Matrix matrix;  // column j = image of basis vector j
};

struct HomologyBases {
    H0Result h0;
    H1Result h1;
    H2Result h2;
};

HomologyBases homology_bases(const SectorComplex& s, const Box& box);

ActionMatrix action_on_homology(const SectorComplex& s, const Automorphism& g, int order, int degree,
                                const HomologyBases& bases);

// dim ker(M - I); throws StructuralError unless M^order = I.
int invariant_dimension(const ActionMatrix& m);

}  // namespace nct
