#pragma once

#include <string>

#include "orbivertex/dt_vertex.hpp"
#include "orbivertex/gw_side.hpp"

namespace orbivertex {

// delta_mu(nu) = |Aut(nu)|/|Aut(mu)| [p_nu] prod_{j,i} (sum_k xi_n^{-jk} p^k_{mu^j_i})
Cyclo delta_transform(const MultiPartition& mu, const MultiPartition& nu);

// prod_k (-1)^{(n-k-1)|nu_k|} (xi_{2n}^{-1} xi_n^{-k})^{|nu_k| n w1/w3} / n^{l(nu)}
Cyclo ocrc_prefactor(const MultiPartition& nu, const EquivWeights& w);

// Divisor-equation data: the t_i coefficients
//   beta_i - (i/n)|tau+| - ((n-i)/n)|tau-|
//          - sum_{j<i}(n-i)(w2/w3)|nu^j| - sum_{j>=i} i (w1/w3)|nu^j|
// and the matching v-monomial (beta part omitted).
std::vector<Rat> divisor_coeffs(const Partition& tau_plus, const Partition& tau_minus,
                                const MultiPartition& nu, const std::vector<long>& beta,
                                const EquivWeights& w);
ExpMonomial divisor_monomial(const Partition& tau_plus, const Partition& tau_minus,
                             const MultiPartition& nu, const EquivWeights& w);

// The n-quotient monomial identity: the product below is the unit monomial
// for every multipartition lambda (v_i evaluated at q_i, q at q_0...q_{n-1}).
//   prod_k prod_{(i,j) in lambda^k} [ q^{n(i-j)} prod_{e<=k} v_e^{-e}
//                                     prod_{e>k} v_e^{n-e} ]
//   * prod_{(i,j) in lambda_bar} q_{j-i}^{j-i}
ExpMonomial lemma1_monomial(const MultiPartition& lambda);

// sum_nu delta_mu(nu) n^{-l(nu)} prod_c chi_{lambda^c}(nu^c)/z_sym(nu^c)
//   == char_wreath(lambda, mu) / z_wreath(mu)
bool lemma2_check(const MultiPartition& lambda, const MultiPartition& mu);

struct DtcrcReport {
    bool matched = false;
    std::string detail;
};

// Thm 4.5 as an executable equality: the glued resolved vertex (after
// v_i -> q_i, q -> q_0...q_{n-1}) against the orbifold vertex times the
// explicit correction factor, compared monomial by monomial in the window.
DtcrcReport dtcrc_check(const VertexLegs& legs, const EquivWeights& w, const Rat& window_lo,
                        const Rat& window_hi, long dv);

// the correction factor itself (monomial and scalar)
FramePrefactor dtcrc_correction(const VertexLegs& legs, const EquivWeights& w);

// --- CRC parameter map ---

// Affine-linear forms over the cyclotomic field extended by the symbolic
// unit pi*sqrt(-1); variables are named strings ("tA1", "tB1", "x1,2", ...).
struct AffineForm {
    Rat pi_sqrt_minus_one_coeff;  // coefficient of the symbolic pi*sqrt(-1)
    std::map<std::string, Cyclo> linear;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct CrcLine {
    long n = 1;        // isotropy order n_i
    long m = 0;        // normal bundle datum m_i
    bool compact = true;
};

struct CrcImage {
    std::vector<AffineForm> T_B;                 // per line
    std::vector<AffineForm> T_C;                 // per line
    std::vector<std::vector<AffineForm>> T_D;    // per line, j = 1..n_i-1
};

CrcImage crc_parameter_map(const std::vector<CrcLine>& geometry);

// --- named substitution maps (External Interfaces) ---

enum class SubstKind { VertexGwDt, GlobalGwDt, DtCrc };

// Applies the named identification to a finite (exact) series.
//   VertexGwDt: q -> e^{iu},  q_j -> xi_n^{-1} exp(-sum_k ...)
//   GlobalGwDt: q -> -e^{iu}, same q_j images
//   DtCrc:      v_i -> q_i, q -> q_0...q_{n-1}
PuiseuxSeries apply_named_map(const PuiseuxSeries& f, SubstKind kind, const EquivWeights& w,
                              long u_order, long x_order);

} // namespace orbivertex
