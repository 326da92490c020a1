#include "orbivertex/box_oracle.hpp"

#include "orbivertex/dt_vertex.hpp"

#include <algorithm>
#include <array>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbivertex {

namespace {

struct Point {
    long x1, x2, x3;
    auto operator<=>(const Point&) const = default;
};

// Leg membership. The embeddings (which partition index runs along which
// axis) are pinned together with the vertex formula by the oracle-match
// acceptance tests.
struct Cylinders {
    const BoxLegs& legs;

    bool in_lambda(long x1, long x2) const { return x1 < legs.lambda_bar.part(x2); }
    bool in_rho_plus(long x2, long x3) const { return x3 < legs.rho_plus.part(x2); }
    bool in_rho_minus(long x1, long x3) const { return x3 < legs.rho_minus.part(x1); }

    bool contains(const Point& p) const {
        if (p.x1 < 0 || p.x2 < 0 || p.x3 < 0) return false;
        return in_lambda(p.x1, p.x2) || in_rho_plus(p.x2, p.x3) || in_rho_minus(p.x1, p.x3);
    }
};

long color_of(const Point& p, long n) {
    long c = (p.x1 - p.x2) % n;
    return c < 0 ? c + n : c;
}

struct Enumerator {
    const BoxLegs& legs;
    Cylinders cyl;
    long max_extent;

    explicit Enumerator(const BoxLegs& l) : legs(l), cyl{l}, max_extent(0) {}

    bool in_config(const Point& p, const std::vector<Point>& s) const {
        return cyl.contains(p) || std::binary_search(s.begin(), s.end(), p);
    }

    bool addable(const Point& p, const std::vector<Point>& s) const {
        if (p.x1 < 0 || p.x2 < 0 || p.x3 < 0) return false;
        if (in_config(p, s)) return false;
        if (p.x1 > 0 && !in_config({p.x1 - 1, p.x2, p.x3}, s)) return false;
        if (p.x2 > 0 && !in_config({p.x1, p.x2 - 1, p.x3}, s)) return false;
        if (p.x3 > 0 && !in_config({p.x1, p.x2, p.x3 - 1}, s)) return false;
        return true;
    }

    bool removable(const Point& p, const std::vector<Point>& s) const {
        Point a{p.x1 + 1, p.x2, p.x3}, b{p.x1, p.x2 + 1, p.x3}, c{p.x1, p.x2, p.x3 + 1};
        return !std::binary_search(s.begin(), s.end(), a) &&
               !std::binary_search(s.begin(), s.end(), b) &&
               !std::binary_search(s.begin(), s.end(), c);
    }

    // canonical generation: accept s' = s + p only when p is the largest
    // removable box of s'
    bool canonical(const Point& p, const std::vector<Point>& s_new) const {
        for (auto it = s_new.rbegin(); it != s_new.rend(); ++it) {
            if (*it == p) return true;
            if (removable(*it, s_new)) return false;
        }
        return true;
    }

    std::vector<Point> initial_addables(long bound) const {
        std::vector<Point> out;
        std::vector<Point> empty;
        for (long x1 = 0; x1 <= bound; ++x1)
            for (long x2 = 0; x2 <= bound; ++x2)
                for (long x3 = 0; x3 <= bound; ++x3)
                    if (addable({x1, x2, x3}, empty)) out.push_back({x1, x2, x3});
        return out;
    }

    // depth-first expansion; fn receives the per-color added counts
    template <typename Fn>
    void expand(std::vector<Point>& s, std::vector<Point>& addables, std::vector<long>& colors,
                long remaining, const Fn& fn) const {
        fn(colors);
        if (remaining == 0) return;
        std::vector<Point> snapshot = addables;
        for (const Point& p : snapshot) {
            std::vector<Point> s_new = s;
            s_new.insert(std::upper_bound(s_new.begin(), s_new.end(), p), p);
            if (!canonical(p, s_new)) continue;
            std::vector<Point> add_new;
            add_new.reserve(snapshot.size() + 3);
            for (const Point& q : snapshot)
                if (!(q == p)) add_new.push_back(q);
            for (Point q : {Point{p.x1 + 1, p.x2, p.x3}, Point{p.x1, p.x2 + 1, p.x3},
                            Point{p.x1, p.x2, p.x3 + 1}})
                if (addable(q, s_new))
                    add_new.insert(std::upper_bound(add_new.begin(), add_new.end(), q), q);
            colors[color_of(p, legs.n)]++;
            expand(s_new, add_new, colors, remaining - 1, fn);
            colors[color_of(p, legs.n)]--;
        }
    }
};

long suggested_box_size(const BoxLegs& legs, long degree) {
    long m = degree + 2;
    auto bump = [&](const Partition& p) {
        if (!p.empty()) m = std::max(m, p.parts[0] + degree + 2);
        m = std::max(m, p.length() + degree + 2);
    };
    bump(legs.rho_plus);
    bump(legs.rho_minus);
    bump(legs.lambda_bar);
    while (m % legs.n != 0) ++m;
    return m;
}

Int minimal_total(const std::vector<Int>& counts) {
    Int t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

} // namespace

std::vector<Int> minimal_renormalized_counts(const BoxLegs& legs, long box_size) {
    long n = legs.n;
    long N = box_size;
    if (N % n != 0) fail(errc::invalid_input, "box size must be a multiple of n");
    Cylinders cyl{legs};
    std::vector<Int> counts(n, 0);
    for (long x1 = 0; x1 < N; ++x1)
        for (long x2 = 0; x2 < N; ++x2)
            for (long x3 = 0; x3 < N; ++x3)
                if (cyl.contains({x1, x2, x3})) counts[color_of({x1, x2, x3}, n)]++;
    // subtract the per-color leg corrections
    for (long i = 0; i < legs.lambda_bar.length(); ++i)
        for (long j = 0; j < legs.lambda_bar.parts[i]; ++j) {
            // cell at (x1, x2) = (j, i)
            long c = (j - i) % n;
            if (c < 0) c += n;
            counts[c] -= N;
        }
    Int ray_corr = Int(N / n) * Int(legs.rho_plus.size() + legs.rho_minus.size());
    for (long c = 0; c < n; ++c) counts[c] -= ray_corr;
    return counts;
}

PuiseuxSeries box_series(const BoxLegs& legs, long degree, bool parallel) {
    long n = legs.n;
    long N = suggested_box_size(legs, degree);
    std::vector<Int> base = minimal_renormalized_counts(legs, N);
    long base_total = to_long(minimal_total(base));
    long budget = degree - base_total;

    Window w = Window::exact().with_hi(GRADE_Q, Rat(degree));
    PuiseuxSeries out(w);
    if (budget < 0) return out;

    Enumerator en(legs);
    std::vector<Point> addables = en.initial_addables(N);

    auto monomial_for = [&](const std::vector<long>& colors) {
        ExpMonomial m;
        for (long c = 0; c < n; ++c) {
            Rat e = Rat(base[c]) + Rat(colors[c]);
            if (e != 0) m = m.times(ExpMonomial::var(var_q((int32_t)c), e));
        }
        return m;
    };

    // split the enumeration at depth 1 for the parallel path
    std::vector<Point> s0;
    std::vector<long> colors0(n, 0);
    out.add_term(monomial_for(colors0), Cyclo(Rat(1)));
    if (budget == 0) return out;

    struct Branch {
        std::vector<Point> s;
        std::vector<Point> addables;
        long color;
    };
    std::vector<Branch> branches;
    for (const Point& p : addables) {
        std::vector<Point> s_new{p};
        if (!en.canonical(p, s_new)) continue;
        std::vector<Point> add_new;
        for (const Point& q : addables)
            if (!(q == p)) add_new.push_back(q);
        for (Point q : {Point{p.x1 + 1, p.x2, p.x3}, Point{p.x1, p.x2 + 1, p.x3},
                        Point{p.x1, p.x2, p.x3 + 1}})
            if (en.addable(q, s_new))
                add_new.insert(std::upper_bound(add_new.begin(), add_new.end(), q), q);
        branches.push_back({std::move(s_new), std::move(add_new), color_of(p, n)});
    }

    std::vector<PuiseuxSeries> partial(branches.size(), PuiseuxSeries(w));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (size_t b = 0; b < branches.size(); ++b) {
        std::vector<long> colors(n, 0);
        colors[branches[b].color]++;
        PuiseuxSeries local(w);
        auto sink = [&](const std::vector<long>& cols) {
            local.add_term(monomial_for(cols), Cyclo(Rat(1)));
        };
        std::vector<Point> s = branches[b].s;
        std::vector<Point> adds = branches[b].addables;
        en.expand(s, adds, colors, budget - 1, sink);
        partial[b] = std::move(local);
    }
    for (auto& p : partial) out += p;
    return out;
}

PuiseuxSeries reduced_series(const BoxLegs& legs, long degree, bool parallel) {
    PuiseuxSeries full = box_series(legs, degree, parallel);
    // the division pulls denominator terms from above `degree` when the
    // numerator reaches below zero
    long ext = 0;
    Rat lo = full.window().lo[GRADE_Q];
    if (lo < 0) ext = to_long(floor_int(-lo));
    BoxLegs empty{legs.n, {}, {}, {}};
    PuiseuxSeries denom = box_series(empty, degree + ext, parallel);
    PuiseuxSeries red = series_div(full, denom, {GRADE_Q});
    red.require_exact_through(GRADE_Q, Rat(degree));
    return red;
}

long count_configs(const BoxLegs& legs, long degree) {
    PuiseuxSeries s = box_series(legs, degree, false);
    long count = 0;
    for (const auto& [m, c] : s.terms()) {
        if (!c.is_rational()) fail(errc::invalid_input, "box series coefficient not rational");
        count += to_long(c.rational_value().get_num());
    }
    return count;
}

OracleReport oracle_match_series(const PuiseuxSeries& reduced, const PuiseuxSeries& vertex,
                                 const Rat& compare_hi) {
    OracleReport rep;
    if (reduced.is_zero() || vertex.is_zero()) {
        rep.detail = "empty series";
        return rep;
    }
    auto [rm, rc] = reduced.lowest_term();
    auto [vm, vc] = vertex.lowest_term();
    rep.offset = rm.times(vm.inverse());
    rep.offset_coeff = rc / vc;
    PuiseuxSeries shifted = vertex.times_monomial(rep.offset, rep.offset_coeff);
    Window cmp;
    cmp.hi[GRADE_Q] = compare_hi;
    if (reduced.window().hi[GRADE_Q])
        cmp.hi[GRADE_Q] = std::min(*cmp.hi[GRADE_Q], *reduced.window().hi[GRADE_Q]);
    if (shifted.window().hi[GRADE_Q])
        cmp.hi[GRADE_Q] = std::min(*cmp.hi[GRADE_Q], *shifted.window().hi[GRADE_Q]);
    for (int g = 0; g < kNumGradings; ++g)
        cmp.lo[g] = std::min(reduced.window().lo[g], shifted.window().lo[g]);
    auto diff = PuiseuxSeries::first_difference(reduced, shifted, cmp);
    rep.detail = "compared through degree " + rat_to_string(*cmp.hi[GRADE_Q]);
    if (diff) {
        rep.matched = false;
        rep.detail = "first mismatch at " + diff->str();
    } else {
        rep.matched = true;
    }
    return rep;
}

OracleReport oracle_match(const Partition& rho_plus, const Partition& rho_minus,
                          const MultiPartition& lambda, long D, bool parallel) {
    long n = lambda.modulus;
    ColoredDiagram lbar = quotient_to_diagram(lambda);
    BoxLegs bl{n, rho_plus, rho_minus, lbar.shape};
    PuiseuxSeries red = reduced_series(bl, D, parallel);
    VertexLegs legs{rho_plus, rho_minus, lambda};
    Window w = Window::exact().with_hi(GRADE_Q, Rat(D));
    PuiseuxSeries vert = vertex_P(legs, n, w);
    OracleReport first = oracle_match_series(red, vert, Rat(D));
    if (red.is_zero() || vert.is_zero()) return first;
    // widen the vertex window so the comparison genuinely reaches degree D
    Rat shift = first.offset.degree(GRADE_Q);
    if (shift < 0) {
        Window wide = Window::exact().with_hi(GRADE_Q, Rat(D) - shift);
        vert = vertex_P(legs, n, wide);
    }
    OracleReport rep = oracle_match_series(red, vert, Rat(D));
    if (rep.matched && !(rep.offset == first.offset))
        rep.detail += "; offset changed between passes";
    return rep;
}

} // namespace orbivertex
