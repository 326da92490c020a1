#pragma once

#include "orbivertex/cyclotomic.hpp"
#include "orbivertex/partitions.hpp"

namespace orbivertex {

// Irreducible symmetric-group character chi_lambda(tau), Murnaghan-Nakayama.
Int char_sym(const Partition& lambda, const Partition& tau);

// dimension f^lambda by the hook length formula
Int dim_sym(const Partition& lambda);

// Ordinary character of shape lambda_bar on the rectangular class (n^m),
// |lambda_bar| = n*m; zero exactly when the n-core is nonempty.
Int char_rect(const ColoredDiagram& d);

// Wreath-product dimension: multinomial(|lambda|; |lambda^c|) * prod f^{lambda^c}.
Int dim_wreath(const MultiPartition& lambda);

// Irreducible character of S_m wr Z_n with the xi_n^{-jc} pairing convention:
//   chi_lambda(mu) = z_mu * sum_nu delta_mu(nu) n^{-l(nu)}
//                    prod_c chi_{lambda^c}(nu^c) / z_sym(nu^c)
Cyclo char_wreath(const MultiPartition& lambda, const MultiPartition& mu);

} // namespace orbivertex
