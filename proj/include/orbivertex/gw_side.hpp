#pragma once

#include "orbivertex/dt_vertex.hpp"
#include "orbivertex/leg_family.hpp"

namespace orbivertex {

// the 4-tuple (i, m, k, d) attached to each part of a leg triple
struct PartClassifier {
    long i, m, k, d;
};

PartClassifier delta_tau_plus(long part, long n);
PartClassifier delta_tau_minus(long part, long n);
PartClassifier delta_mu(long part, long color, long n);
// the resolved (tilde) classifier: m = 1, k = 0 with the edge weight triple
PartClassifier delta_tilde(long which_leg, long part);

// The disk function D^n(i,m,k,d;w), an exact rational for fixed s.
// r = (1,-1,0) cyclically extended; <x> is the fractional part.
Rat disk(const PartClassifier& c, const EquivWeights& w);
// same evaluation against an explicit weight triple (for the edge weights w^j)
Rat disk_at(const PartClassifier& c, long n, const Rat& w1, const Rat& w2, const Rat& w3);

// Def. 3.1 framing sign of the GW vertex
Cyclo gw_frame_factor(const Partition& tau_plus, const Partition& tau_minus,
                      const MultiPartition& mu);

struct PredictedGWSeries {
    LegTriple legs;
    EquivWeights weights;
    PuiseuxSeries series;  // Laurent in u, polynomial in x_1..x_{n-1}
    bool framed = true;
};

// The character-transform prediction of the framed disconnected GW vertex:
//   sum_{rho+,rho-,lambda} Ptilde^X chi chi chi / zzz, then the identification
//   q -> e^{iu}, q_j -> xi_n^{-1} exp(-sum_k ...x_k), q_0 eliminated.
PredictedGWSeries predicted_framed_gw(const LegTriple& legs, const EquivWeights& w, long u_order,
                                      long x_order);

// unframed disconnected family over all sub-triples, then Moebius-inverted
LegSeriesFamily predicted_connected_family(const LegTriple& legs, const EquivWeights& w,
                                           long u_order, long x_order);

// Predicted localized correlator values: divides the connected series by the
// disk factors and multiplies by the automorphism orders. Keys are (g, gamma)
// encoded as the u- and x-monomial.
struct StrippedValue {
    long genus;
    ExpMonomial gamma;  // x-part
    Cyclo value;
};
std::vector<StrippedValue> strip_disks(const PuiseuxSeries& connected, const LegTriple& legs,
                                       const EquivWeights& w);

} // namespace orbivertex
