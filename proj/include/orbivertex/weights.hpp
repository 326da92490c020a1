#pragma once

#include "orbivertex/errors.hpp"
#include "orbivertex/rational.hpp"

namespace orbivertex {

// Torus weights (w_1, w_2, w_3) with w_1 + w_2 + w_3 = 0, normalized to
// w_3 = 1 and stored through the single rational s = w_1/w_3.
struct EquivWeights {
    long n = 1;
    Rat s = Rat(1);

    Rat w1() const { return s; }
    Rat w2() const { return -Rat(1) - s; }
    Rat w3() const { return Rat(1); }

    void require_generic() const {
        if (s == 0 || s == -1) fail(errc::zero_weight, "weights need w_1, w_2 nonzero (s not in {0,-1})");
    }

    Rat w1_over_w3() const { return s; }
    Rat w2_over_w3() const { return -Rat(1) - s; }
    Rat n_w1_over_w3() const { return Rat(n) * s; }
    Rat w3_over_n_w1() const {
        require_generic();
        return Rat(1) / (Rat(n) * s);
    }
    Rat w3_over_n_w2() const {
        require_generic();
        return Rat(1) / (Rat(n) * w2());
    }
};

// Edge weight triple w^j = (-n w_2 - (j+1) w_3, n w_2 + j w_3, w_3), the
// weights at the j-th vertex of the resolved chain; w^+ = w^{n-1}, w^- = w^0.
struct EdgeWeights {
    Rat w1, w2, w3;

    Rat w1_over_w3() const { return w1 / w3; }
    Rat w3_over_w1() const {
        if (w1 == 0) fail(errc::zero_weight, "edge weight w_1 vanished");
        return w3 / w1;
    }
    Rat w3_over_w2() const {
        if (w2 == 0) fail(errc::zero_weight, "edge weight w_2 vanished");
        return w3 / w2;
    }
};

inline EdgeWeights edge_weights(const EquivWeights& w, long j) {
    if (j < 0 || j >= w.n) fail(errc::invalid_input, "edge index out of range");
    Rat nw2 = Rat(w.n) * w.w2();
    EdgeWeights e{-nw2 - Rat(j + 1), nw2 + Rat(j), Rat(1)};
    return e;
}

} // namespace orbivertex
