#pragma once

#include "orbivertex/characters.hpp"
#include "orbivertex/schur.hpp"
#include "orbivertex/weights.hpp"

namespace orbivertex {

struct VertexLegs {
    Partition rho_plus;
    Partition rho_minus;
    MultiPartition lambda;  // modulus n; single slot for smooth vertices

    auto operator<=>(const VertexLegs&) const = default;
};

// A vertex series together with its invertible framing prefactor.
struct FramedSeries {
    VertexLegs legs;
    EquivWeights weights;
    Cyclo frame_coeff;
    ExpMonomial frame_mono;
    PuiseuxSeries series;  // framed series = frame * P
    bool framed = true;

    PuiseuxSeries unframed() const {
        return series.times_monomial(frame_mono.inverse(), frame_coeff.inverse());
    }
};

// The unframed orbifold vertex
//   P = s_{lambda_bar}(q) sum_omega q_0^{-|omega|}
//       bar(s_{rho+/omega}(qfrak_{.-lambda_bar})) s_{rho-/omega}(qfrak_{.-lambda_bar'})
// in exact form and expanded to a window.
QRat vertex_P_exact(const VertexLegs& legs, long n);
PuiseuxSeries vertex_P(const VertexLegs& legs, long n, const Window& w);

// framing prefactor of the framed vertex (whole first two lines of its definition)
struct FramePrefactor {
    Cyclo coeff;
    ExpMonomial mono;
};
FramePrefactor frame_prefactor(const VertexLegs& legs, const EquivWeights& w, bool smooth);

FramedSeries frame_dt(const PuiseuxSeries& P, const VertexLegs& legs, const EquivWeights& w);
QRat framed_vertex_exact(const VertexLegs& legs, const EquivWeights& w);

// Smooth framed vertex at the j-th chain site, in the smooth variable q.
// rho_out sits in the plus slot, rho_in in the minus slot.
QRat smooth_framed_vertex_exact(const Partition& rho_out, const Partition& rho_in,
                                const Partition& lambda_leg, long j, const EquivWeights& w);
FramedSeries smooth_framed_vertex(const Partition& rho_out, const Partition& rho_in,
                                  const Partition& lambda_leg, long j, const EquivWeights& w,
                                  const Window& win);

// Chain gluing: sum over intermediate partition tuples rho^1..rho^{n-1} with
// total size <= Dv of prod_j v_j^{|rho^j|} prod_j Ptilde^{C3}(rho^{j+1}, rho^j,
// lambda^j; w^j). Returned per v-monomial in exact form.
std::map<ExpMonomial, QRat, MonoLess> glue_PY_exact(const Partition& rho_plus,
                                                    const Partition& rho_minus,
                                                    const std::vector<Partition>& lambda_legs,
                                                    const EquivWeights& w, long dv);
PuiseuxSeries glue_PY(const Partition& rho_plus, const Partition& rho_minus,
                      const std::vector<Partition>& lambda_legs, const EquivWeights& w,
                      const Window& win, long dv);

} // namespace orbivertex
