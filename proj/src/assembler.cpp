#include "nct/assembler.hpp"

#include <sstream>

namespace nct {

SectorSummary summarize_sector(const SectorComplex& s, const std::vector<int>& schedule) {
    SectorSummary out;
    out.sector = s.label();
    out.k = s.k;
    const Automorphism gen = generator(s.group);
    for (int d = 0; d < 3; ++d) {
        auto dim = stabilized_dimension([&](int r) { return sector_dimension(s, d, {r}); }, schedule);
        out.dims[d] = dim.value;
        out.radius[d] = dim.radius;
        auto inv = stabilized_dimension(
            [&](int r) {
                Box box{r};
                HomologyBases b;
                if (d == 0) b.h0 = sector_h0(s, box);
                if (d == 1) b.h1 = sector_h1(s, box);
                if (d == 2) b.h2 = sector_h2(s, box);
                return invariant_dimension(action_on_homology(s, gen, s.group.order, d, b));
            },
            schedule);
        out.invariant_dims[d] = inv.value;
    }
    return out;
}

HomologyReport hochschild_table(const FiniteGroup& g, const std::vector<int>& schedule) {
    HomologyReport r{g, schedule, {}, {}, false, 0, 0, {}};
    for (const auto& s : all_sectors(g)) {
        r.sectors.push_back(summarize_sector(s, schedule));
        for (int d = 0; d < 3; ++d) r.hh[d] += r.sectors.back().invariant_dims[d];
    }
    r.notes.push_back("HH_k = 0 for k >= 3 (resolution of length 2)");
    return r;
}

void cyclic_table(HomologyReport& r) {
    int even = 0;
    for (const auto& s : r.sectors) {
        if (s.k == 0) {
            if (s.invariant_dims[1] != 0)
                throw HypothesisError("identity sector has invariant H1 of dimension " +
                                      std::to_string(s.invariant_dims[1]));
            even += s.invariant_dims[0] + s.invariant_dims[2];
        } else {
            if (s.dims[1] != 0 || s.dims[2] != 0)
                throw HypothesisError("sector " + s.sector + " has nonzero H1 or H2");
            even += s.invariant_dims[0];
        }
    }
    r.has_hc = true;
    r.hc_even = even;
    r.hc_odd = 0;
}

HomologyReport full_report(const FiniteGroup& g, const std::vector<int>& schedule) {
    HomologyReport r = hochschild_table(g, schedule);
    cyclic_table(r);
    return r;
}

ReferenceTable reference_table(const FiniteGroup& g) {
    switch (g.name) {
        case GroupName::Z2: return {5, 0, 1, 6, 0};
        case GroupName::Z3: return {7, 0, 1, 8, 0};
        case GroupName::Z4: return {8, 0, 1, 9, 0};
        case GroupName::Z6: return {9, 0, 1, 10, 0};
    }
    throw std::invalid_argument("unknown group");
}

std::vector<CellResult> compare_to_reference(const HomologyReport& r) {
    ReferenceTable t = reference_table(r.group);
    std::vector<CellResult> out{
        {"HH0", t.hh0, r.hh[0], false},
        {"HH1", t.hh1, r.hh[1], false},
        {"HH2", t.hh2, r.hh[2], false},
    };
    if (r.has_hc) {
        out.push_back({"HC_even", t.hc_even, r.hc_even, false});
        out.push_back({"HC_odd", t.hc_odd, r.hc_odd, false});
    }
    for (auto& c : out) c.pass = c.expected == c.actual;
    return out;
}

std::string format_table(const HomologyReport& r) {
    std::ostringstream os;
    os << "group " << r.group.str() << "  boxes";
    for (int b : r.schedule) os << " " << b;
    os << "\n";
    os << "sector   H0 H1 H2   inv0 inv1 inv2\n";
    for (const auto& s : r.sectors) {
        std::string pad(s.sector.size() < 8 ? 8 - s.sector.size() : 1, ' ');
        os << s.sector << pad << " " << s.dims[0] << "  " << s.dims[1] << "  " << s.dims[2] << "    "
           << s.invariant_dims[0] << "    " << s.invariant_dims[1] << "    " << s.invariant_dims[2] << "\n";
    }
    os << "HH " << r.hh[0] << " " << r.hh[1] << " " << r.hh[2] << "\n";
    if (r.has_hc) os << "HC even " << r.hc_even << ", odd " << r.hc_odd << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace nct
