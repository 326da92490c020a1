#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbivertex/leg_family.hpp"
#include "orbivertex/series.hpp"

using namespace orbivertex;

namespace {

ExpMonomial q0(Rat e = Rat(1)) { return ExpMonomial::var(var_q(0), e); }

PuiseuxSeries random_series(std::mt19937& rng, const Window& w, long maxdeg) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<long> pick(0, 1);
    PuiseuxSeries s(w);
    for (long d0 = 0; d0 <= maxdeg; ++d0)
        for (long d1 = 0; d0 + d1 <= maxdeg; ++d1) {
            if (pick(rng)) continue;
            ExpMonomial m = ExpMonomial::var(var_q(0), Rat(d0)).times(
                ExpMonomial::var(var_q(1), Rat(d1)));
            s.add_term(m, Cyclo(Rat(coeff(rng))));
        }
    return s;
}

} // namespace

TEST_CASE("basic ring identities") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(2));
    PuiseuxSeries one = PuiseuxSeries::one(w);
    PuiseuxSeries q = PuiseuxSeries::term(Cyclo(Rat(1)), q0(), w);
    // (1+q)(1-q) = 1-q^2 at window deg <= 2
    PuiseuxSeries lhs = (one + q) * (one - q);
    PuiseuxSeries expect = one - PuiseuxSeries::term(Cyclo(Rat(1)), q0(Rat(2)), w);
    CHECK(PuiseuxSeries::equal_within(lhs, expect, w));
    // q^{1/2} q^{1/2} = q
    PuiseuxSeries h = PuiseuxSeries::term(Cyclo(Rat(1)), q0(rat(1, 2)), w);
    CHECK(PuiseuxSeries::equal_within(h * h, q, w));
}

TEST_CASE("geometric series inverse") {
    long D = 7;
    Window w = Window::exact().with_hi(GRADE_Q, Rat(D));
    PuiseuxSeries geo(w);
    for (long k = 0; k <= D; ++k) geo.add_term(q0(Rat(k)), Cyclo(Rat(1)));
    PuiseuxSeries one_minus_q =
        PuiseuxSeries::one(w) - PuiseuxSeries::term(Cyclo(Rat(1)), q0(), w);
    PuiseuxSeries prod = geo * one_minus_q;
    CHECK(PuiseuxSeries::equal_within(prod, PuiseuxSeries::one(w), w));
    // and series_inverse recovers the geometric series
    CHECK(PuiseuxSeries::equal_within(series_inverse(one_minus_q, {GRADE_Q}), geo, w));
}

TEST_CASE("window underflow is detected") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(3));
    PuiseuxSeries trunc(w);
    for (long k = 0; k <= 3; ++k) trunc.add_term(q0(Rat(k)), Cyclo(Rat(1)));
    // multiplying by q^{-2} shifts unknown terms toward low degrees: the
    // resulting window must confess it is only exact through 1
    PuiseuxSeries shifted = trunc.times_monomial(q0(Rat(-2)));
    CHECK(*shifted.window().hi[GRADE_Q] == Rat(1));
    CHECK_THROWS_AS(shifted.require_exact_through(GRADE_Q, Rat(2)), error);
}

TEST_CASE("exp and log round trip") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(6));
    CHECK(PuiseuxSeries::equal_within(series_exp(PuiseuxSeries::zero(w), {GRADE_Q}),
                                      PuiseuxSeries::one(w), w));
    // log(1+q) = q - q^2/2 + q^3/3 - ... against the formal oracle
    PuiseuxSeries f = PuiseuxSeries::one(w) + PuiseuxSeries::term(Cyclo(Rat(1)), q0(), w);
    PuiseuxSeries lg = series_log(f, {GRADE_Q});
    PuiseuxSeries oracle(w);
    for (long k = 1; k <= 6; ++k) oracle.add_term(q0(Rat(k)), Cyclo(rat(k % 2 ? 1 : -1, k)));
    CHECK(PuiseuxSeries::equal_within(lg, oracle, w));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        PuiseuxSeries g = random_series(rng, w, 3);
        // strip any constant term, keep positive degree
        g = g - PuiseuxSeries::term(g.coeff(ExpMonomial::one()), ExpMonomial::one(), w);
        PuiseuxSeries e = series_exp(g, {GRADE_Q});
        CHECK(PuiseuxSeries::equal_within(series_log(e, {GRADE_Q}), g, w));
    }
}

TEST_CASE("exp coefficient of x*u") {
    Window w = Window::exact().with_hi(GRADE_U, Rat(2)).with_hi(GRADE_X, Rat(2));
    PuiseuxSeries xu(w);
    ExpMonomial m = ExpMonomial::var(var_x(1)).times(ExpMonomial::var(var_u()));
    xu.add_term(m, Cyclo(Rat(1)));
    PuiseuxSeries e = series_exp(xu, {GRADE_U, GRADE_X});
    CHECK(e.coeff(m) == Cyclo(Rat(1)));
}

TEST_CASE("substitution: paper map example and homomorphism") {
    // f = q, q -> -e^{iu}: -1 - iu + u^2/2 + ...
    Window w = Window::exact().with_hi(GRADE_U, Rat(3));
    PuiseuxSeries f = PuiseuxSeries::term(Cyclo(Rat(1)), ExpMonomial::var(var_sq()));
    SubstMap map;
    SubstImage img;
    img.root = RootUnity::minus_one();
    PuiseuxSeries iu(w);
    iu.add_term(ExpMonomial::var(var_u()), Cyclo::sqrt_minus_one());
    img.tail = series_exp(iu, {GRADE_U}) - PuiseuxSeries::one(w);
    map[var_sq()] = img;
    PuiseuxSeries out = substitute(f, map);
    Cyclo I = Cyclo::sqrt_minus_one();
    CHECK(out.coeff(ExpMonomial::one()) == Cyclo(Rat(-1)));
    CHECK(out.coeff(ExpMonomial::var(var_u())) == -I);
    CHECK(out.coeff(ExpMonomial::var(var_u(), Rat(2))) == Cyclo(rat(1, 2)));
    CHECK(out.coeff(ExpMonomial::var(var_u(), Rat(3))) == I * Cyclo(rat(1, 6)));

    // identity map leaves a series alone
    PuiseuxSeries g = PuiseuxSeries::term(Cyclo(Rat(2)), q0(rat(3, 2)));
    CHECK(PuiseuxSeries::equal_within(substitute(g, {}), g, Window::exact()));

    // homomorphism on random exact series under a monomial map
    std::mt19937 rng(5);
    SubstMap mono_map;
    SubstImage mi;
    mi.mono = ExpMonomial::var(var_q(1), Rat(2));
    mono_map[var_q(0)] = mi;
    for (int trial = 0; trial < 5; ++trial) {
        PuiseuxSeries a = random_series(rng, Window::exact(), 3);
        PuiseuxSeries b = random_series(rng, Window::exact(), 3);
        PuiseuxSeries lhs = substitute(a * b, mono_map);
        PuiseuxSeries rhs = substitute(a, mono_map) * substitute(b, mono_map);
        CHECK(PuiseuxSeries::equal_within(lhs, rhs, Window::exact()));
    }
}

TEST_CASE("substitution divergence guard") {
    Window w = Window::exact().with_hi(GRADE_Q, Rat(4));
    PuiseuxSeries f(w);
    for (long k = 0; k <= 4; ++k) f.add_term(q0(Rat(k)), Cyclo(Rat(1)));
    // image with q-degree 0 on a truncated series must be refused
    SubstMap map;
    SubstImage img;
    img.root = RootUnity::minus_one();
    map[var_q(0)] = img;
    CHECK_THROWS_AS(substitute(f, map), error);
}

TEST_CASE("window monotonicity: recompute larger, restrict, compare") {
    std::mt19937 rng(23);
    Window small = Window::exact().with_hi(GRADE_Q, Rat(4));
    Window large = Window::exact().with_hi(GRADE_Q, Rat(7));
    for (int trial = 0; trial < 5; ++trial) {
        // build the same exact data, truncate to two windows, compare products
        PuiseuxSeries a = random_series(rng, Window::exact(), 5);
        PuiseuxSeries b = random_series(rng, Window::exact(), 5);
        PuiseuxSeries a_s = a, b_s = b, a_l = a, b_l = b;
        a_s.truncate(small);
        b_s.truncate(small);
        a_l.truncate(large);
        b_l.truncate(large);
        PuiseuxSeries prod_small = a_s * b_s;
        PuiseuxSeries prod_large = a_l * b_l;
        CHECK(PuiseuxSeries::equal_within(prod_small, prod_large, small));
    }
}

TEST_CASE("connected/disconnected transform") {
    // single triple T: disconnected(T) = connected(T),
    // disconnected(T+T) = connected(T+T) + connected(T)^2/2!
    Window w = Window::exact().with_hi(GRADE_Q, Rat(6));
    LegTriple T{Partition({1}), Partition{}, MultiPartition::empty(1)};
    LegTriple TT{Partition({1, 1}), Partition{}, MultiPartition::empty(1)};
    PuiseuxSeries cT = PuiseuxSeries::term(Cyclo(Rat(1)), q0(), w);
    PuiseuxSeries cTT = PuiseuxSeries::term(Cyclo(Rat(5)), q0(Rat(2)), w);
    LegSeriesFamily conn{{T, cT}, {TT, cTT}};
    auto disc = disconnected_from_connected(conn, {T, TT});
    CHECK(PuiseuxSeries::equal_within(disc[T], cT, w));
    PuiseuxSeries expect = cTT + (cT * cT).scaled(Cyclo(rat(1, 2)));
    CHECK(PuiseuxSeries::equal_within(disc[TT], expect, w));

    // round trip on a mixed random family
    std::mt19937 rng(9);
    LegTriple A{Partition({2}), Partition({1}), MultiPartition::empty(1)};
    LegTriple B{Partition({2, 2}), Partition({1}), MultiPartition::empty(1)};
    LegTriple C{Partition({2}), Partition({1, 1}), MultiPartition::empty(1)};
    LegSeriesFamily family;
    for (const auto& t : {T, A, B, C}) family[t] = random_series(rng, w, 3);
    // close under sub-triples so the transform has everything it needs
    LegSeriesFamily full;
    std::vector<LegTriple> wanted;
    for (const auto& [t, s] : family) {
        for (const auto& sub : sub_triples(t)) {
            if (sub.empty()) continue;
            if (!full.count(sub)) {
                auto it = family.find(sub);
                full[sub] = (it != family.end()) ? it->second : random_series(rng, w, 3);
            }
        }
        wanted.push_back(t);
    }
    auto disc2 = disconnected_from_connected(full, wanted);
    // extend disc2 to all sub-triples for the inverse
    LegSeriesFamily disc_full;
    for (const auto& [t, s] : full) {
        auto d = disconnected_from_connected(full, {t});
        disc_full[t] = d[t];
    }
    auto back = connected_from_disconnected(disc_full);
    for (const auto& [t, s] : full) CHECK(PuiseuxSeries::equal_within(back[t], s, w));

    // all-empty family maps to all-empty
    LegSeriesFamily empty_family;
    CHECK(connected_from_disconnected(empty_family).empty());
}
