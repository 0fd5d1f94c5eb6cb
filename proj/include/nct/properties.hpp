#pragma once

#include "nct/koszul.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nct {

struct PropertyResult {
    std::string name;
    bool passed = true;
    long checked = 0;
    std::string detail;
};

// Each suite is deterministic for a given seed.
PropertyResult check_complex_property(uint64_t seed, int per_sector = 200);
PropertyResult check_group_orders(uint64_t seed, int per_group = 100);
PropertyResult check_kh_identity();
PropertyResult check_chain_maps(uint64_t seed, int per_sector = 50);
PropertyResult check_gdd_identity(uint64_t seed);
PropertyResult check_rank_oracle(uint64_t seed, int count = 50);

// A reference kernel equation in its own indexing, instantiated at (n, m), with
// the output point of the extracted equation it should agree with.
struct ReferenceEquation {
    std::string name;
    GroupName group;
    LinearEquation (*at)(int n, int m);
    LatticePoint (*output)(int n, int m);
};

const std::vector<ReferenceEquation>& reference_kernel_equations();
// Compares the reference equation to coefficient extraction up to an overall
// scalar over the grid [-r, r]^2.
PropertyResult check_reference_equation(const ReferenceEquation& e, int r = 3);

std::vector<PropertyResult> run_property_suites(uint64_t seed);

}  // namespace nct
