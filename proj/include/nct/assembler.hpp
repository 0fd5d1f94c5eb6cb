#pragma once

#include "nct/chainmaps.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

// The vanishing hypotheses behind the cyclic shortcut do not hold.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SectorSummary {
    std::string sector;
    int k = 0;
    std::array<int, 3> dims{};
    std::array<int, 3> invariant_dims{};
    std::array<int, 3> radius{};  // radius at which each dimension settled
};

struct HomologyReport {
    FiniteGroup group;
    std::vector<int> schedule;
    std::vector<SectorSummary> sectors;
    std::array<int, 3> hh{};
    bool has_hc = false;
    int hc_even = 0;
    int hc_odd = 0;
    std::vector<std::string> notes;
};

SectorSummary summarize_sector(const SectorComplex& s, const std::vector<int>& schedule);

HomologyReport hochschild_table(const FiniteGroup& g, const std::vector<int>& schedule);
// Fills the cyclic part; throws HypothesisError when a vanishing hypothesis fails.
void cyclic_table(HomologyReport& r);
HomologyReport full_report(const FiniteGroup& g, const std::vector<int>& schedule);

struct ReferenceTable {
    int hh0, hh1, hh2, hc_even, hc_odd;
};
ReferenceTable reference_table(const FiniteGroup& g);

struct CellResult {
    std::string cell;
    int expected;
    int actual;
    bool pass;
};
std::vector<CellResult> compare_to_reference(const HomologyReport& r);

std::string format_table(const HomologyReport& r);

}  // namespace nct
