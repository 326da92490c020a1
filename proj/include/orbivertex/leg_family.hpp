#pragma once

#include <map>

#include "orbivertex/partitions.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

// One boundary datum of a vertex: two ordinary legs and one colored leg.
struct LegTriple {
    Partition tau_plus;
    Partition tau_minus;
    MultiPartition mu;

    bool empty() const { return tau_plus.empty() && tau_minus.empty() && mu.size() == 0; }
    long total_parts() const {
        return tau_plus.length() + tau_minus.length() + mu.total_length();
    }
    auto operator<=>(const LegTriple&) const = default;
};

// all componentwise sub-multisets of a triple's parts
std::vector<LegTriple> sub_triples(const LegTriple& t);

using LegSeriesFamily = std::map<LegTriple, PuiseuxSeries>;

// Exponential over the free commutative monoid of leg triples:
//   disconnected(S) = sum over multiset partitions {B_i} of S's parts of
//                     prod connected(B_i) / prod_{distinct B} mult_B!
// with the empty triple mapping to 1. The connected family must provide every
// sub-triple that has a nonzero contribution (missing keys read as zero).
LegSeriesFamily disconnected_from_connected(const LegSeriesFamily& connected,
                                            const std::vector<LegTriple>& wanted);
// Moebius inverse of the above.
LegSeriesFamily connected_from_disconnected(const LegSeriesFamily& disconnected);

} // namespace orbivertex
