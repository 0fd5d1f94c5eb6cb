#pragma once

#include "nct/assembler.hpp"
#include "nct/reduction.hpp"

#include <json.hpp>

namespace nct {

using json = nlohmann::ordered_json;

json to_json(const TorusElement& a);
TorusElement torus_from_json(const json& j);
json to_json(const EnvElement& e);
EnvElement env_from_json(const json& j);
json to_json(const BarChain& c);
BarChain bar_from_json(const json& j);
json to_json(const KoszulChain& z);

json to_json(const KernelSolution& s);
// {"group", "element", "phi1", "phi2"}; throws InputError on malformed data
// and KernelViolation when the pair is not a cycle.
KernelSolution solution_from_json(const json& j);

json to_json(const PreimageAccumulator& acc, const KernelSolution& sol);
json to_json(const KernelDiagram& d);
json to_json(const ActionMatrix& m);
json to_json(const SectorSummary& s);
json to_json(const HomologyReport& r);
json to_json(const std::vector<CellResult>& cells);

// {"group", "sector", "degree", "box", "dimension", "basis"}
json sector_json(const SectorComplex& s, int degree, const Box& box);

}  // namespace nct
