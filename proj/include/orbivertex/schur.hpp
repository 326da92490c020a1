#pragma once

#include "orbivertex/partitions.hpp"
#include "orbivertex/qrat.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

// Variable family for one vertex: the orbifold colors q_0..q_{n-1}, or the
// single smooth variable q when `smooth` is set (then n = 1).
struct QVars {
    long n = 1;
    bool smooth = false;

    VarId q(long c) const {
        if (smooth) return var_sq();
        long cc = c % n;
        if (cc < 0) cc += n;
        return var_q((int32_t)cc);
    }
    // the total variable q = q_0 q_1 ... q_{n-1}
    ExpMonomial q_total(const Rat& e = Rat(1)) const;
};

// qfrak_t: qfrak_0 = 1, qfrak_t = q_t qfrak_{t-1}, indices mod n.
ExpMonomial qfrak(long t, const QVars& vars);

// relabel q_i -> q_{-i} (the bar involution)
ExpMonomial bar_involution(const ExpMonomial& m, long n);
PuiseuxSeries bar_involution(const PuiseuxSeries& s, long n);
QRat bar_involution(const QRat& r, long n);

// The specialization qfrak_{bullet - lambda_bar}: variables x_i = qfrak_{i - row_i}
// for 0 <= i < cutoff.
struct SpecializationSet {
    QVars vars;
    Partition diagram_rows;  // rows of lambda_bar; empty for qfrak_bullet
    long cutoff = 0;

    ExpMonomial variable(long i) const;
    Rat variable_degree(long i) const;
};

// Cutoff sufficient for h_k to be exact through q-degree <= hi: a multiset
// may pair one large variable with k-1 copies of the most negative one, so
// the first omitted degree must exceed hi + (k-1)*maxrow.
long default_cutoff(const Partition& diagram_rows, const Rat& hi, long k);

// Truncated complete homogeneous function h_k of the specialized variables.
// Exact through the window's q-degree bound; throws CutoffTooSmall when the
// first omitted variable could still land inside the window.
PuiseuxSeries h_at_spec(long k, const SpecializationSet& s, const Window& w);

// Skew Schur s_{rho/omega} at the specialization, by Jacobi-Trudi.
PuiseuxSeries skew_schur_at_spec(const Partition& rho, const Partition& omega,
                                 const SpecializationSet& s, const Window& w);

// Loop (colored) Schur function of an empty-core diagram with the pinned
// cell weight: a cell of color c filled with entry t >= 0 contributes
// q_{(loop_color_sign * c) mod n}^t. Direct bounded-entry tableau sum.
PuiseuxSeries loop_schur(const ColoredDiagram& d, const Window& w);

// --- exact (geometric-denominator) route ---

// h_k over the alphabet {qfrak_{i - row_i} : i >= 0}, summed exactly by the
// n-step orbit recursion; denominators are powers of (1 - q^j).
QRat h_tail_exact(long k, const QVars& vars, const Partition& diagram_rows);
QRat skew_schur_exact(const Partition& rho, const Partition& omega, const QVars& vars,
                      const Partition& diagram_rows);
// colored Jacobi-Trudi determinant of the loop Schur function
QRat loop_schur_exact(const ColoredDiagram& d);

// pinned convention constant (see docs in schur.cpp)
extern const int loop_color_sign;

} // namespace orbivertex
