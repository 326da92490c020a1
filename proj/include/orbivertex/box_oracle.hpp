#pragma once

#include "orbivertex/partitions.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

// Z_n-colored plane partitions with up to three infinite legs:
//   rho_plus along axis 1, rho_minus along axis 2, lambda_bar along axis 3.
// A box (x1,x2,x3) has color (x1 - x2) mod n. Configurations are downward
// closed sets containing the three leg cylinders with finitely many extra
// boxes.
struct BoxLegs {
    long n = 1;
    Partition rho_plus;   // cross-section in (x2, x3)
    Partition rho_minus;  // cross-section in (x1, x3)
    Partition lambda_bar; // cross-section in (x1, x2); rows along x2
};

// per-color renormalized counts of the minimal (cylinders-only) configuration
std::vector<Int> minimal_renormalized_counts(const BoxLegs& legs, long box_size);

// Unreduced colored generating series: sum over configurations with
// renormalized total count <= degree of prod_c q_c^{count_c}.
PuiseuxSeries box_series(const BoxLegs& legs, long degree, bool parallel = true);

// reduced = box_series(legs) / box_series(no legs), exact through `degree`
PuiseuxSeries reduced_series(const BoxLegs& legs, long degree, bool parallel = true);

// number of enumerated configurations with renormalized count <= degree
long count_configs(const BoxLegs& legs, long degree);

struct OracleReport {
    bool matched = false;
    ExpMonomial offset;
    Cyclo offset_coeff;
    std::string detail;
};

// Compares the reduced box series against a vertex series: finds the single
// monomial offset aligning the lowest terms, then demands equality of every
// coefficient both windows certify (capped at compare_hi).
OracleReport oracle_match_series(const PuiseuxSeries& reduced, const PuiseuxSeries& vertex,
                                 const Rat& compare_hi);

// Full oracle comparison for a vertex leg triple: enumerates boxes to total
// renormalized count D and checks reduced = offset * vertex_P through total
// degree D (the vertex window is widened to absorb the offset shift).
OracleReport oracle_match(const Partition& rho_plus, const Partition& rho_minus,
                          const MultiPartition& lambda, long D, bool parallel = true);

} // namespace orbivertex
