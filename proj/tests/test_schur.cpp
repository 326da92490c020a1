#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbivertex/schur.hpp"

using namespace orbivertex;

namespace {

Partition P(std::vector<long> v) { return Partition(std::move(v)); }

// direct skew SSYT enumeration over the first `cutoff` specialized variables
PuiseuxSeries skew_tableau_oracle(const Partition& rho, const Partition& omega,
                                  const SpecializationSet& s, const Window& w) {
    PuiseuxSeries out(w);
    long l = rho.length();
    if (l == 0) return omega.empty() ? PuiseuxSeries::one(w) : PuiseuxSeries::zero(w);
    if (!rho.contains(omega)) return out;
    // entries per cell (i,j) with omega_i <= j < rho_i
    struct Cell {
        long i, j;
    };
    std::vector<Cell> cells;
    for (long i = 0; i < l; ++i)
        for (long j = omega.part(i); j < rho.parts[i]; ++j) cells.push_back({i, j});
    if (cells.empty()) return PuiseuxSeries::one(w);
    std::vector<std::vector<long>> entry(l, std::vector<long>(rho.parts[0], -1));
    ExpMonomial mono;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            out.add_term(mono, Cyclo(Rat(1)));
            return;
        }
        auto [i, j] = cells[idx];
        long lo = 0;
        if (j > omega.part(i) && entry[i][j - 1] >= 0) lo = std::max(lo, entry[i][j - 1]);
        if (i > 0 && j >= omega.part(i - 1) && j < rho.parts[i - 1] && entry[i - 1][j] >= 0)
            lo = std::max(lo, entry[i - 1][j] + 1);
        for (long t = lo; t < s.cutoff; ++t) {
            entry[i][j] = t;
            ExpMonomial save = mono;
            mono = mono.times(s.variable(t));
            self(self, idx + 1);
            mono = save;
        }
        entry[i][j] = -1;
    };
    rec(rec, 0);
    out.truncate(w);
    return out;
}

} // namespace

TEST_CASE("qfrak values") {
    QVars v1{1, false};
    CHECK(qfrak(0, v1).is_one());
    QVars v2{2, false};
    CHECK(qfrak(-1, v2) == ExpMonomial::var(var_q(0), Rat(-1)));
    CHECK(qfrak(-2, v2) ==
          ExpMonomial::var(var_q(0), Rat(-1)).times(ExpMonomial::var(var_q(1), Rat(-1))));
    CHECK(qfrak(2, v2) == ExpMonomial::var(var_q(0)).times(ExpMonomial::var(var_q(1))));
    // total q-degree of qfrak_t equals t
    for (long t = -5; t <= 5; ++t) CHECK(qfrak(t, v2).degree(GRADE_Q) == Rat(t));
}

TEST_CASE("h_at_spec basics") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(3));
    QVars v1{1, false};
    SpecializationSet s{v1, P({}), default_cutoff(P({}), Rat(3), 1)};
    CHECK(PuiseuxSeries::equal_within(h_at_spec(0, s, w), PuiseuxSeries::one(w), w));
    PuiseuxSeries h1 = h_at_spec(1, s, w);
    PuiseuxSeries geo(w);
    for (long k = 0; k <= 3; ++k) geo.add_term(ExpMonomial::var(var_q(0), Rat(k)), Cyclo(Rat(1)));
    CHECK(PuiseuxSeries::equal_within(h1, geo, w));
    // h_1 = sum of variable monomials for any specialization
    QVars v2{2, false};
    SpecializationSet s2{v2, P({2, 1}), default_cutoff(P({2, 1}), Rat(3), 1)};
    PuiseuxSeries h1b = h_at_spec(1, s2, w);
    PuiseuxSeries expect(w);
    for (long i = 0; i < s2.cutoff; ++i) expect.add_term(s2.variable(i), Cyclo(Rat(1)));
    expect.truncate(w);
    CHECK(PuiseuxSeries::equal_within(h1b, expect, w));
    // cutoff too small is refused
    SpecializationSet bad{v1, P({}), 2};
    CHECK_THROWS_AS(h_at_spec(1, bad, w), error);
}

TEST_CASE("cutoff stabilization") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(4));
    QVars v2{2, false};
    for (long extra = 0; extra <= 3; ++extra) {
        SpecializationSet s{v2, P({2, 1}), default_cutoff(P({2, 1}), Rat(4), 4) + extra};
        SpecializationSet s0{v2, P({2, 1}), default_cutoff(P({2, 1}), Rat(4), 4)};
        for (long k = 0; k <= 3; ++k)
            CHECK(PuiseuxSeries::equal_within(h_at_spec(k, s, w), h_at_spec(k, s0, w), w));
    }
}

TEST_CASE("skew Schur basics and vanishing") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(2));
    QVars v1{1, false};
    SpecializationSet s{v1, P({}), default_cutoff(P({}), Rat(8), 4)};
    // s_{rho/rho} = 1
    CHECK(PuiseuxSeries::equal_within(skew_schur_at_spec(P({2, 1}), P({2, 1}), s, w),
                                      PuiseuxSeries::one(w), w));
    // s_{(1)/0} = h_1
    CHECK(PuiseuxSeries::equal_within(skew_schur_at_spec(P({1}), P({}), s, w),
                                      h_at_spec(1, s, w), w));
    // s_{(1,1)/0} = e_2 = sum_{i<j} x_i x_j
    PuiseuxSeries e2(w);
    for (long i = 0; i < s.cutoff; ++i)
        for (long j = i + 1; j < s.cutoff; ++j)
            e2.add_term(s.variable(i).times(s.variable(j)), Cyclo(Rat(1)));
    e2.truncate(w);
    CHECK(PuiseuxSeries::equal_within(skew_schur_at_spec(P({1, 1}), P({}), s, w), e2, w));
    // omega not inside rho vanishes
    CHECK(skew_schur_at_spec(P({2}), P({1, 1}), s, w).is_zero());
    CHECK(skew_schur_at_spec(P({1}), P({2}), s, w).is_zero());
}

TEST_CASE("Jacobi-Trudi matches tableau enumeration") {
    // shapes up to size 4, two specializations, exact within the window
    Window w = Window::exact().with_hi(GRADE_Q, Rat(4));
    std::vector<SpecializationSet> specs;
    specs.push_back({QVars{1, false}, P({}), default_cutoff(P({}), Rat(4), 4)});
    specs.push_back({QVars{2, false}, P({1, 1}), default_cutoff(P({1, 1}), Rat(8), 6)});
    specs.push_back({QVars{3, false}, P({2, 1}), default_cutoff(P({2, 1}), Rat(8), 6)});
    for (const auto& s : specs) {
        for (const auto& rho : partitions_up_to(4)) {
            for (const auto& omega : subpartitions(rho)) {
                PuiseuxSeries jt = skew_schur_at_spec(rho, omega, s, w);
                PuiseuxSeries tab = skew_tableau_oracle(rho, omega, s, w);
                CHECK(PuiseuxSeries::equal_within(jt, tab, w));
            }
        }
    }
}

TEST_CASE("loop Schur basics") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(5));
    CHECK(PuiseuxSeries::equal_within(loop_schur(ColoredDiagram(2, P({})), w),
                                      PuiseuxSeries::one(w), w));
    // n = 1, single cell: geometric series
    PuiseuxSeries g = loop_schur(ColoredDiagram(1, P({1})), w);
    PuiseuxSeries geo(w);
    for (long k = 0; k <= 5; ++k) geo.add_term(ExpMonomial::var(var_q(0), Rat(k)), Cyclo(Rat(1)));
    CHECK(PuiseuxSeries::equal_within(g, geo, w));
    // nonempty core rejected
    CHECK_THROWS_AS(loop_schur(ColoredDiagram(2, P({1})), w), error);
}

TEST_CASE("loop Schur at n=1 is the principal specialization") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(6));
    QVars v1{1, false};
    SpecializationSet s{v1, P({}), default_cutoff(P({}), Rat(6), 4)};
    for (const auto& lam : partitions_up_to(3)) {
        PuiseuxSeries ls = loop_schur(ColoredDiagram(1, lam), w);
        PuiseuxSeries ps = skew_schur_at_spec(lam, P({}), s, w);
        CHECK(PuiseuxSeries::equal_within(ls, ps, w));
    }
}

TEST_CASE("exact h tails agree with the windowed route") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(5));
    for (long n = 1; n <= 3; ++n) {
        QVars vars{n, false};
        for (const auto& rows : {P({}), P({1}), P({2, 1}), P({3, 1, 1})}) {
            SpecializationSet s{vars, rows, default_cutoff(rows, Rat(12), 4)};
            for (long k = 0; k <= 4; ++k) {
                PuiseuxSeries exact = h_tail_exact(k, vars, rows).expand(w);
                PuiseuxSeries windowed = h_at_spec(k, s, w);
                CHECK(PuiseuxSeries::equal_within(exact, windowed, w));
            }
        }
    }
}

TEST_CASE("exact skew agrees with the windowed route") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(4));
    for (long n = 1; n <= 2; ++n) {
        QVars vars{n, false};
        for (const auto& rows : {P({}), P({2, 1})}) {
            SpecializationSet s{vars, rows, default_cutoff(rows, Rat(20), 6)};
            for (const auto& rho : partitions_up_to(3)) {
                for (const auto& omega : subpartitions(rho)) {
                    PuiseuxSeries exact = skew_schur_exact(rho, omega, vars, rows).expand(w);
                    PuiseuxSeries windowed = skew_schur_at_spec(rho, omega, s, w);
                    CHECK(PuiseuxSeries::equal_within(exact, windowed, w));
                }
            }
        }
    }
}

TEST_CASE("colored Jacobi-Trudi agrees with the tableau sum") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(6));
    for (long n = 2; n <= 3; ++n) {
        for (long m = 1; m * n <= 6; ++m) {
            for (const auto& shape : partitions_of(n * m)) {
                ColoredDiagram d(n, shape);
                if (!has_empty_core(d)) continue;
                PuiseuxSeries exact = loop_schur_exact(d).expand(w);
                PuiseuxSeries windowed = loop_schur(d, w);
                CHECK(PuiseuxSeries::equal_within(exact, windowed, w));
            }
        }
    }
}

TEST_CASE("bar involution is a ring relabeling") {
    QVars v3{3, false};
    ExpMonomial m = qfrak(4, v3);
    CHECK(bar_involution(bar_involution(m, 3), 3) == m);
    Window w = Window::exact().with_hi(GRADE_Q, Rat(4));
    PuiseuxSeries h = h_at_spec(2, {v3, P({}), default_cutoff(P({}), Rat(4), 4)}, w);
    PuiseuxSeries b = bar_involution(h, 3);
    CHECK(PuiseuxSeries::equal_within(bar_involution(b, 3), h, w));
}
