#include "orbivertex/schur.hpp"

#include <algorithm>
#include <map>

namespace orbivertex {

// Loop-weight convention, fixed operationally: candidates were the shifted
// products prod_r q_{c+-r} and the colored powers q_{+-c}^t; only
// w(t, c) = q_c^t reproduces the colored box counts (the n=2 and n=3
// box-oracle acceptance runs certify it together with the abacus convention).
const int loop_color_sign = 1;

ExpMonomial QVars::q_total(const Rat& e) const {
    if (smooth) return ExpMonomial::var(var_sq(), e);
    ExpMonomial m;
    for (long c = 0; c < n; ++c) m = m.times(ExpMonomial::var(var_q((int32_t)c), e));
    return m;
}

ExpMonomial qfrak(long t, const QVars& vars) {
    ExpMonomial m;
    if (t > 0) {
        for (long r = 1; r <= t; ++r) m = m.times(ExpMonomial::var(vars.q(r)));
    } else if (t < 0) {
        for (long r = 0; r > t; --r) m = m.times(ExpMonomial::var(vars.q(r), Rat(-1)));
    }
    return m;
}

namespace {

long norm_color(long c, long n) {
    long cc = c % n;
    return cc < 0 ? cc + n : cc;
}

ExpMonomial relabel_bar(const ExpMonomial& m, long n) {
    ExpMonomial out;
    for (const auto& [v, e] : m.exps()) {
        if (v.kind == VarKind::Q)
            out = out.times(ExpMonomial::var(var_q((int32_t)norm_color(-v.index, n)), e));
        else
            out = out.times(ExpMonomial::var(v, e));
    }
    return out;
}

} // namespace

ExpMonomial bar_involution(const ExpMonomial& m, long n) { return relabel_bar(m, n); }

PuiseuxSeries bar_involution(const PuiseuxSeries& s, long n) {
    PuiseuxSeries out(s.window());
    for (const auto& [m, c] : s.terms()) out.add_term(relabel_bar(m, n), c);
    return out;
}

QRat bar_involution(const QRat& r, long n) {
    QRat build = QRat::zero();
    for (const auto& [m, c] : r.num().terms()) build = build + QRat::monomial(c, relabel_bar(m, n));
    if (build.is_zero()) return build;
    for (const auto& [m, k] : r.den()) build = build.over_one_minus(relabel_bar(m, n), k);
    return build;
}

ExpMonomial SpecializationSet::variable(long i) const {
    return qfrak(i - diagram_rows.part(i), vars);
}

Rat SpecializationSet::variable_degree(long i) const { return Rat(i - diagram_rows.part(i)); }

long default_cutoff(const Partition& diagram_rows, const Rat& hi, long k) {
    long maxrow = diagram_rows.empty() ? 0 : diagram_rows.parts[0];
    long h = to_long(floor_int(hi)) + 1;
    long reach = h + std::max(0L, k - 1) * maxrow + 1;
    return std::max<long>(reach, diagram_rows.length() + 1);
}

PuiseuxSeries h_at_spec(long k, const SpecializationSet& s, const Window& w) {
    if (k < 0) return PuiseuxSeries::zero(w);
    if (!w.hi[GRADE_Q]) fail(errc::window_underflow, "h_at_spec needs a finite q window");
    Rat hi = *w.hi[GRADE_Q];

    // variables sorted by ascending degree so that truncation is sound
    std::vector<ExpMonomial> vars;
    for (long i = 0; i < s.cutoff; ++i) vars.push_back(s.variable(i));
    std::sort(vars.begin(), vars.end(), [](const ExpMonomial& a, const ExpMonomial& b) {
        return a.degree(GRADE_Q) < b.degree(GRADE_Q);
    });
    Rat dmin = vars.empty() ? Rat(0) : vars.front().degree(GRADE_Q);
    Rat neg = std::min(Rat(0), dmin);

    // a multiset can pair one omitted variable with k-1 most-negative ones
    if (s.cutoff < s.diagram_rows.length() ||
        s.variable_degree(s.cutoff) <= hi - Rat(k - 1) * neg)
        fail(errc::cutoff_too_small, "specialization cutoff too small for the window");

    // per-level thresholds: a partial term at level k' can still drop by
    // (k - k') * neg before completion
    std::vector<PuiseuxSeries> h(k + 1);
    std::vector<Window> levelw(k + 1);
    for (long kk = 0; kk <= k; ++kk) {
        levelw[kk] = w.with_hi(GRADE_Q, hi - Rat(k - kk) * neg);
        h[kk] = PuiseuxSeries::zero(levelw[kk]);
    }
    h[0] = PuiseuxSeries::one(levelw[0]);
    for (const auto& v : vars) {
        for (long kk = 1; kk <= k; ++kk) {
            // h_kk(new alphabet) = h_kk(old) + v * h_{kk-1}(new alphabet)
            PuiseuxSeries add = h[kk - 1].times_monomial(v);
            add.truncate(levelw[kk]);
            h[kk] += add;
        }
    }
    PuiseuxSeries out = h[k];
    out.truncate(w);
    Window fin = out.window();
    fin.hi[GRADE_Q] = hi;
    fin.lo[GRADE_Q] = Rat(k) * dmin;
    out.set_window(fin);
    return out;
}


namespace {

// determinant by first-row minor expansion, memoized on the column subset;
// handles the sparse upper-triangular-ish Jacobi-Trudi matrices well
template <typename R>
R det_minors(const std::vector<std::vector<R>>& m, long row, uint32_t mask,
             std::map<uint32_t, R>& memo, const R& zero) {
    long l = (long)m.size();
    if (row == l) {
        R one_val = zero;
        return one_val;  // unused sentinel; row == l handled by caller
    }
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    R acc = zero;
    long sign_idx = 0;
    for (long c = 0; c < l; ++c) {
        if (!(mask & (1u << c))) continue;
        const R& entry = m[row][c];
        if (!entry.is_zero()) {
            uint32_t next = mask & ~(1u << c);
            R sub;
            if (row + 1 == l) {
                sub = entry;
            } else {
                sub = entry * det_minors(m, row + 1, next, memo, zero);
            }
            if (sign_idx % 2 == 0)
                acc = acc + sub;
            else
                acc = acc - sub;
        }
        ++sign_idx;
    }
    memo.emplace(mask, acc);
    return acc;
}

template <typename R>
R det_of(const std::vector<std::vector<R>>& m, const R& zero) {
    long l = (long)m.size();
    if (l == 0) return zero;
    if (l > 30) fail(errc::invalid_input, "determinant too large");
    std::map<uint32_t, R> memo;
    return det_minors(m, 0, (uint32_t)((1u << l) - 1), memo, zero);
}

} // namespace

PuiseuxSeries skew_schur_at_spec(const Partition& rho, const Partition& omega,
                                 const SpecializationSet& s, const Window& w) {
    long l = std::max(rho.length(), omega.length());
    if (l == 0) return PuiseuxSeries::one(w);
    if (!w.hi[GRADE_Q]) fail(errc::window_underflow, "skew_schur_at_spec needs a finite q window");

    // Entries can reach below degree zero, so factors in the determinant's
    // products must be computed past the requested top.
    Rat dmin(0);
    for (long i = 0; i < s.cutoff; ++i) dmin = std::min(dmin, s.variable_degree(i));
    long max_idx = rho.part(0) + l;
    Rat entry_lo = Rat(max_idx) * dmin;  // <= 0
    Window wext = w.with_hi(GRADE_Q, *w.hi[GRADE_Q] - Rat(l - 1) * entry_lo);
    SpecializationSet sext = s;
    sext.cutoff = std::max(s.cutoff, default_cutoff(s.diagram_rows, *wext.hi[GRADE_Q], max_idx));

    // Jacobi-Trudi: det(h_{rho_i - omega_j - i + j})
    std::vector<std::vector<PuiseuxSeries>> e(l, std::vector<PuiseuxSeries>(l));
    std::map<long, PuiseuxSeries> hcache;
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            long idx = rho.part(i) - omega.part(j) - i + j;
            auto it = hcache.find(idx);
            if (it == hcache.end()) it = hcache.emplace(idx, h_at_spec(idx, sext, wext)).first;
            e[i][j] = it->second;
        }
    PuiseuxSeries det = det_of(e, PuiseuxSeries::zero(wext));
    if (det.is_zero()) return PuiseuxSeries::zero(w);
    det.require_exact_through(GRADE_Q, *w.hi[GRADE_Q]);
    det.truncate(w);
    return det;
}

PuiseuxSeries loop_schur(const ColoredDiagram& d, const Window& w) {
    if (!has_empty_core(d)) fail(errc::non_empty_core, "loop_schur needs an empty n-core");
    if (!w.hi[GRADE_Q]) fail(errc::window_underflow, "loop_schur needs a finite q window");
    long hi = to_long(floor_int(*w.hi[GRADE_Q]));
    long n = d.modulus;
    long l = d.shape.length();

    PuiseuxSeries out(w);
    if (d.size() == 0) return PuiseuxSeries::one(w);

    // cells in row-major order with their colors
    struct Cell {
        long i, j, color;
    };
    std::vector<Cell> cells;
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < d.shape.parts[i]; ++j)
            cells.push_back({i, j, norm_color(loop_color_sign * (j - i), n)});

    // column-strict fillings, entries >= 0, total entry sum <= hi
    std::vector<std::vector<long>> entry(l);
    for (long i = 0; i < l; ++i) entry[i].assign(d.shape.parts[i], 0);
    ExpMonomial mono;
    auto rec = [&](auto&& self, size_t idx, long budget) -> void {
        if (idx == cells.size()) {
            out.add_term(mono, Cyclo(Rat(1)));
            return;
        }
        const Cell& c = cells[idx];
        long lo = 0;
        if (c.j > 0) lo = std::max(lo, entry[c.i][c.j - 1]);
        if (c.i > 0) lo = std::max(lo, entry[c.i - 1][c.j] + 1);
        for (long t = lo; t <= budget; ++t) {
            entry[c.i][c.j] = t;
            ExpMonomial save = mono;
            mono = mono.times(ExpMonomial::var(var_q((int32_t)c.color), Rat(t)));
            self(self, idx + 1, budget - t);
            mono = save;
        }
    };
    rec(rec, 0, hi);

    // minimal filling (entry = row index) gives the true lower bound
    Rat lo(0);
    for (long i = 0; i < l; ++i) lo += Rat(i) * Rat(d.shape.parts[i]);
    Window fin = w;
    fin.lo[GRADE_Q] = lo;
    out.set_window(fin);
    return out;
}

QRat h_tail_exact(long k, const QVars& vars, const Partition& diagram_rows) {
    if (k < 0) return QRat::zero();
    long n = vars.n;
    long head_len = diagram_rows.length();

    // exceptional head variables qfrak_{i - row_i}, i < head_len
    std::vector<ExpMonomial> head;
    for (long i = 0; i < head_len; ++i) head.push_back(qfrak(i - diagram_rows.parts[i], vars));

    // tail values H_k(I0 + r), r = 0..n-1, I0 = head_len
    // H_k(I) = qfrak_I H_{k-1}(I) + H_k(I+1), H_k(I0+n) = q^k H_k(I0)
    std::vector<std::vector<QRat>> H(k + 1, std::vector<QRat>(n));
    for (long r = 0; r < n; ++r) H[0][r] = QRat::one();
    for (long kk = 1; kk <= k; ++kk) {
        QRat wrap = QRat::zero();
        for (long r = 0; r < n; ++r)
            wrap = wrap + QRat::monomial(Cyclo(Rat(1)), qfrak(head_len + r, vars)) * H[kk - 1][r];
        H[kk][0] = wrap.over_one_minus(vars.q_total(Rat(kk)));
        for (long r = 1; r < n; ++r) {
            // H_k(I+1) = H_k(I) - qfrak_I H_{k-1}(I)
            H[kk][r] = H[kk][r - 1] -
                       QRat::monomial(Cyclo(Rat(1)), qfrak(head_len + r - 1, vars)) * H[kk - 1][r - 1];
        }
    }

    // head h-values: h_k(x + A) = h_k(A) + x h_{k-1}(x + A), ascending so the
    // already-updated level k-1 includes the new variable (repetition allowed)
    std::vector<QRat> hh(k + 1, QRat::zero());
    hh[0] = QRat::one();
    for (const auto& v : head)
        for (long kk = 1; kk <= k; ++kk)
            hh[kk] = hh[kk] + QRat::monomial(Cyclo(Rat(1)), v) * hh[kk - 1];

    QRat out = QRat::zero();
    for (long j = 0; j <= k; ++j) out = out + hh[j] * H[k - j][0];
    return out;
}

QRat skew_schur_exact(const Partition& rho, const Partition& omega, const QVars& vars,
                      const Partition& diagram_rows) {
    long l = std::max(rho.length(), omega.length());
    if (l == 0) return QRat::one();
    std::map<long, QRat> hcache;
    auto h = [&](long k) -> const QRat& {
        auto it = hcache.find(k);
        if (it == hcache.end()) it = hcache.emplace(k, h_tail_exact(k, vars, diagram_rows)).first;
        return it->second;
    };
    std::vector<std::vector<QRat>> e(l, std::vector<QRat>(l));
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            long idx = rho.part(i) - omega.part(j) - i + j;
            e[i][j] = idx < 0 ? QRat::zero() : h(idx);
        }
    return det_of(e, QRat::zero());
}

namespace {

// colored h: entries t_1 <= ... <= t_k >= 0 over colors c, c+1, ..., c+k-1,
// weight prod q_{sign(c+j)}^{t_j}; h^{(c)}_k = h^{(c+1)}_{k-1} / (1 - M_{c,k})
// with M_{c,k} = prod_{j=0}^{k-1} q_{sign(c+j)}.
QRat colored_h(long c, long k, long n, std::map<std::pair<long, long>, QRat>& memo) {
    if (k < 0) return QRat::zero();
    if (k == 0) return QRat::one();
    long cc = norm_color(c, n);
    auto key = std::make_pair(cc, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ExpMonomial M;
    for (long j = 0; j < k; ++j)
        M = M.times(ExpMonomial::var(var_q((int32_t)norm_color(loop_color_sign * (cc + j), n))));
    QRat val = colored_h(cc + 1, k - 1, n, memo).over_one_minus(M);
    memo.emplace(key, val);
    return val;
}

} // namespace

QRat loop_schur_exact(const ColoredDiagram& d) {
    if (!has_empty_core(d)) fail(errc::non_empty_core, "loop_schur needs an empty n-core");
    long n = d.modulus;
    long l = d.shape.length();
    if (l == 0) return QRat::one();
    std::map<std::pair<long, long>, QRat> memo;
    std::vector<std::vector<QRat>> e(l, std::vector<QRat>(l));
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            long idx = d.shape.part(i) - i + j;
            e[i][j] = idx < 0 ? QRat::zero() : colored_h(-j, idx, n, memo);
        }
    return det_of(e, QRat::zero());
}

} // namespace orbivertex
