#pragma once

#include "nct/errors.hpp"
#include "nct/koszul.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nct {

// A degree-1 cycle of a sector complex.
struct KernelSolution {
    SectorComplex sector;
    TorusElement phi1;
    TorusElement phi2;

    bool is_zero() const { return phi1.is_zero() && phi2.is_zero(); }
    size_t support_size() const { return phi1.size() + phi2.size(); }
};

struct KernelViolation : InputError {
    LatticePoint point;
    Scalar residual;
    KernelViolation(const LatticePoint& p, const Scalar& r, const std::string& what)
        : InputError(what), point(p), residual(r) {}
};

// Throws KernelViolation at the smallest point where B1 does not vanish.
KernelSolution check_kernel(const SectorComplex& s, const TorusElement& phi1, const TorusElement& phi2);

struct DiagramNode {
    LatticePoint point;
    int comp;  // 1 drawn as a box, 2 as a disc
    Scalar value;
    std::string label;
};

struct DiagramEdge {
    int from;
    int to;
    LatticePoint equation;  // output point of the linking kernel equation
};

struct KernelDiagram {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;

    int find(int comp, const LatticePoint& p) const;
    bool connected() const;
};

KernelDiagram build_diagram(const KernelSolution& sol);
// The unknowns of a single kernel equation, joined within each component.
KernelDiagram equation_diagram(const SectorComplex& s, const LatticePoint& p);

std::string to_dot(const KernelDiagram& d, const std::string& name = "kernel");
std::string to_svg(const KernelDiagram& d);

// B2 of c U^center in the order-2 sector of Z2.
KernelSolution a4_solution(const SectorComplex& s, const Scalar& c, const LatticePoint& center);

struct WedgeIncrement {
    LatticePoint anchor;
    int comp;
    LatticePoint point;  // where the preimage grows
    Scalar coeff;
};

// Component that must carry the anchor in the sector.
int anchor_component(const SectorComplex& s);
// Offset of the anchor of B2(U^w) relative to w.
LatticePoint pattern_offset(const SectorComplex& s);

std::pair<KernelSolution, WedgeIncrement> wedge_step(const KernelSolution& sol);

struct PreimageAccumulator {
    TorusElement total;
    std::vector<WedgeIncrement> steps;
};

long default_budget(const KernelSolution& sol);
// Iterates wedge_step to zero; InconclusiveError when the budget runs out.
PreimageAccumulator reduce_to_zero(const KernelSolution& sol, long budget = -1);

struct SmallSolutionReport {
    bool confirmed = true;
    long patterns = 0;
    long rank_checks = 0;
    std::vector<std::pair<int, LatticePoint>> witness;
};

SmallSolutionReport no_small_solutions(const SectorComplex& s, int max_support, const Box& box);

}  // namespace nct
