#pragma once

#include "nct/torus.hpp"

#include <random>

namespace testutil {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    nct::LaurentPoly poly(int max_terms = 3) {
        std::vector<nct::LaurentPoly::Term> terms;
        int k = uniform(1, max_terms);
        for (int i = 0; i < k; ++i) terms.emplace_back(uniform(-3, 3), mpq_class(uniform(-5, 5), uniform(1, 3)));
        auto p = nct::LaurentPoly::from_terms(terms);
        return p.is_zero() ? nct::LaurentPoly(mpq_class(1), uniform(-2, 2)) : p;
    }
    nct::Scalar scalar() { return nct::Scalar(poly(), poly(2)); }
    nct::Scalar unit() {
        return nct::Scalar(long(uniform(1, 4) * (uniform(0, 1) ? 1 : -1))) * nct::Scalar::t_power(uniform(-3, 3));
    }
    nct::LatticePoint point(int r) { return {uniform(-r, r), uniform(-r, r)}; }
    nct::TorusElement element(int terms, int r) {
        nct::TorusElement a;
        for (int i = 0; i < terms; ++i) a.add_term(point(r), unit());
        return a;
    }
};

}  // namespace testutil
