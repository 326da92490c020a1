#include "orbivertex/dt_vertex.hpp"

#include <algorithm>
#include <mutex>

namespace orbivertex {

namespace {

std::mutex g_vertex_cache_mutex;
std::map<std::pair<VertexLegs, long>, QRat> g_vertex_cache;

Partition meet(const Partition& a, const Partition& b) {
    std::vector<long> parts;
    long l = std::min(a.length(), b.length());
    for (long i = 0; i < l; ++i) parts.push_back(std::min(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

} // namespace

QRat vertex_P_exact(const VertexLegs& legs, long n) {
    {
        std::lock_guard<std::mutex> lock(g_vertex_cache_mutex);
        auto it = g_vertex_cache.find({legs, n});
        if (it != g_vertex_cache.end()) return it->second;
    }
    QVars vars{n, false};
    ColoredDiagram lbar = quotient_to_diagram(legs.lambda);
    Partition rows = lbar.shape;
    Partition rows_conj = rows.conjugate();

    QRat loop = loop_schur_exact(lbar);

    QRat omega_sum = QRat::zero();
    for (const auto& omega : subpartitions(meet(legs.rho_plus, legs.rho_minus))) {
        QRat left = bar_involution(skew_schur_exact(legs.rho_plus, omega, vars, rows), n);
        if (left.is_zero()) continue;
        QRat right = skew_schur_exact(legs.rho_minus, omega, vars, rows_conj);
        if (right.is_zero()) continue;
        ExpMonomial q0inv = ExpMonomial::var(vars.q(0), Rat(-omega.size()));
        omega_sum = omega_sum + (left * right).times_monomial(q0inv);
    }
    QRat out = loop * omega_sum;
    std::lock_guard<std::mutex> lock(g_vertex_cache_mutex);
    g_vertex_cache.emplace(std::make_pair(legs, n), out);
    return out;
}

PuiseuxSeries vertex_P(const VertexLegs& legs, long n, const Window& w) {
    if (!w.hi[GRADE_Q]) fail(errc::window_underflow, "vertex_P needs a finite q window");
    Rat hi = *w.hi[GRADE_Q];
    QVars vars{n, false};
    ColoredDiagram lbar = quotient_to_diagram(legs.lambda);
    Partition rows = lbar.shape;
    Partition rows_conj = rows.conjugate();

    // extension so the triple product stays exact through hi
    long maxrow = rows.empty() ? 0 : rows.parts[0];
    long l = std::max(legs.rho_plus.length(), legs.rho_minus.length());
    long max_idx = std::max(legs.rho_plus.part(0), legs.rho_minus.part(0)) + l;
    Rat skew_lo = Rat(max_idx) * Rat(-std::max(maxrow, rows.length()));
    Rat omega_lo = Rat(-std::min(legs.rho_plus.size(), legs.rho_minus.size()));
    Rat ext = -(skew_lo + skew_lo + omega_lo);
    Window wext = w.with_hi(GRADE_Q, hi + ext);

    SpecializationSet spec{vars, rows, default_cutoff(rows, *wext.hi[GRADE_Q], max_idx)};
    SpecializationSet spec_conj{vars, rows_conj,
                                default_cutoff(rows_conj, *wext.hi[GRADE_Q], max_idx)};

    PuiseuxSeries omega_sum = PuiseuxSeries::zero(wext);
    for (const auto& omega : subpartitions(meet(legs.rho_plus, legs.rho_minus))) {
        PuiseuxSeries left =
            bar_involution(skew_schur_at_spec(legs.rho_plus, omega, spec, wext), n);
        if (left.is_zero()) continue;
        PuiseuxSeries right = skew_schur_at_spec(legs.rho_minus, omega, spec_conj, wext);
        if (right.is_zero()) continue;
        ExpMonomial q0inv = ExpMonomial::var(vars.q(0), Rat(-omega.size()));
        omega_sum += (left * right).times_monomial(q0inv);
    }
    PuiseuxSeries loop = loop_schur(lbar, wext);
    PuiseuxSeries out = loop * omega_sum;
    out.require_exact_through(GRADE_Q, hi);
    out.truncate(w);
    return out;
}

FramePrefactor frame_prefactor(const VertexLegs& legs, const EquivWeights& w, bool smooth) {
    w.require_generic();
    long n = w.n;
    if (legs.lambda.modulus != n) fail(errc::modulus_mismatch, "legs and weights moduli differ");
    QVars vars{n, smooth};
    const MultiPartition& lambda = legs.lambda;
    long lam_size = lambda.size();
    ColoredDiagram lbar = quotient_to_diagram(lambda);

    Cyclo coeff(Rat(1));
    ExpMonomial mono;

    // (-1)^{|lambda|} q^{|lambda|/2} chi_{lambda_bar}(n^{|lambda|}) / dim(lambda)
    if (lam_size % 2 == 1) coeff = -coeff;
    mono = mono.times(vars.q_total(rat(lam_size, 2)));
#ifdef OV_DIM_BIG
    coeff *= Cyclo(rat(char_rect(lbar), dim_sym(lbar.shape)));
#else
    coeff *= Cyclo(rat(char_rect(lbar), dim_wreath(lambda)));
#endif

    // ((-xi_{2n})^{-|lambda|} prod_k xi_n^{-k |lambda^k|})^{n w_1/w_3}
    RootUnity base = RootUnity::xi(2 * n, (n + 1)).pow(-lam_size);
    for (long k = 0; k < n; ++k)
        base = base.times(RootUnity::xi(n, -k * lambda.comp(k).size()));
    coeff *= root_power(base, w.n_w1_over_w3());

    // (-q^{1/2} q_1^{-1/n} ... q_{n-1}^{-(n-1)/n})^{|rho+|}
    // (-q^{1/2} q_1^{-(n-1)/n} ... q_{n-1}^{-1/n})^{|rho-|}
    long rp = legs.rho_plus.size(), rm = legs.rho_minus.size();
    if ((rp + rm) % 2 == 1) coeff = -coeff;
    mono = mono.times(vars.q_total(rat(rp + rm, 2)));
    for (long c = 1; c < n; ++c) {
        mono = mono.times(ExpMonomial::var(vars.q(c), rat(-c * rp, n)));
        mono = mono.times(ExpMonomial::var(vars.q(c), rat(-(n - c) * rm, n)));
    }

    // content blocks (prod_{(i,j) in rho} q^{i-j})^{w_3/(n w_1,2)}
    mono = mono.times(vars.q_total(Rat(-legs.rho_plus.content_sum()) * w.w3_over_n_w1()));
    mono = mono.times(vars.q_total(Rat(-legs.rho_minus.content_sum()) * w.w3_over_n_w2()));

    // (prod_{(i,j) in lambda_bar} q_{j-i}^{i-j})^{w_1/w_3}
    for (long i = 0; i < lbar.shape.length(); ++i)
        for (long j = 0; j < lbar.shape.parts[i]; ++j)
            mono = mono.times(
                ExpMonomial::var(vars.q(j - i), Rat(i - j) * w.w1_over_w3()));

    return FramePrefactor{coeff, mono};
}

FramedSeries frame_dt(const PuiseuxSeries& P, const VertexLegs& legs, const EquivWeights& w) {
    FramePrefactor f = frame_prefactor(legs, w, false);
    FramedSeries out;
    out.legs = legs;
    out.weights = w;
    out.frame_coeff = f.coeff;
    out.frame_mono = f.mono;
    out.series = P.times_monomial(f.mono, f.coeff);
    out.framed = true;
    return out;
}

QRat framed_vertex_exact(const VertexLegs& legs, const EquivWeights& w) {
    FramePrefactor f = frame_prefactor(legs, w, false);
    return vertex_P_exact(legs, w.n).times_monomial(f.mono, f.coeff);
}

namespace {

std::mutex g_smooth_cache_mutex;
// key: (rho_out, rho_in, lambda_leg, j, n, s)
using SmoothKey = std::tuple<Partition, Partition, Partition, long, long, Rat>;
std::map<SmoothKey, QRat> g_smooth_cache;

} // namespace

QRat smooth_framed_vertex_exact(const Partition& rho_out, const Partition& rho_in,
                                const Partition& lambda_leg, long j, const EquivWeights& w) {
    SmoothKey key{rho_out, rho_in, lambda_leg, j, w.n, w.s};
    {
        std::lock_guard<std::mutex> lock(g_smooth_cache_mutex);
        auto it = g_smooth_cache.find(key);
        if (it != g_smooth_cache.end()) return it->second;
    }
    EdgeWeights ew = edge_weights(w, j);

    // the n = 1 specialization of the framed vertex, in the smooth variable q
    QVars vars{1, true};
    VertexLegs legs{rho_out, rho_in, MultiPartition(1, {lambda_leg})};

    // unframed P; at n = 1 the loop Schur is the principal specialization
    // s_lambda(1, q, q^2, ...) = s_{lambda/empty} over qfrak_bullet
    Partition rows = lambda_leg;
    Partition rows_conj = lambda_leg.conjugate();
    QRat loop = skew_schur_exact(lambda_leg, Partition{}, vars, Partition{});
    QRat omega_sum = QRat::zero();
    for (const auto& omega : subpartitions(meet(rho_out, rho_in))) {
        QRat left = skew_schur_exact(rho_out, omega, vars, rows);
        if (left.is_zero()) continue;
        QRat right = skew_schur_exact(rho_in, omega, vars, rows_conj);
        if (right.is_zero()) continue;
        ExpMonomial q0inv = ExpMonomial::var(vars.q(0), Rat(-omega.size()));
        omega_sum = omega_sum + (left * right).times_monomial(q0inv);
    }
    QRat P = loop * omega_sum;

    // framing with the edge weight ratios (n = 1 in all exponents)
    Cyclo coeff(Rat(1));
    ExpMonomial mono;
    long lam_size = lambda_leg.size();
    if (lam_size % 2 == 1) coeff = -coeff;
    mono = mono.times(vars.q_total(rat(lam_size, 2)));
    // chi/dim = 1 at n = 1; root block base is (-xi_2)^{-|lambda|} = 1
    long rp = rho_out.size(), rm = rho_in.size();
    if ((rp + rm) % 2 == 1) coeff = -coeff;
    mono = mono.times(vars.q_total(rat(rp + rm, 2)));
    mono = mono.times(vars.q_total(Rat(-rho_out.content_sum()) * ew.w3_over_w1()));
    mono = mono.times(vars.q_total(Rat(-rho_in.content_sum()) * ew.w3_over_w2()));
    mono = mono.times(vars.q_total(Rat(-lambda_leg.content_sum()) * ew.w1_over_w3()));

    QRat out = P.times_monomial(mono, coeff);
    std::lock_guard<std::mutex> lock(g_smooth_cache_mutex);
    g_smooth_cache.emplace(std::move(key), out);
    return out;
}

FramedSeries smooth_framed_vertex(const Partition& rho_out, const Partition& rho_in,
                                  const Partition& lambda_leg, long j, const EquivWeights& w,
                                  const Window& win) {
    QRat exact = smooth_framed_vertex_exact(rho_out, rho_in, lambda_leg, j, w);
    FramedSeries out;
    out.legs = VertexLegs{rho_out, rho_in, MultiPartition(1, {lambda_leg})};
    out.weights = w;
    out.series = exact.expand(win);
    out.framed = true;
    // report the frame factor of the smooth framing
    EdgeWeights ew = edge_weights(w, j);
    QVars vars{1, true};
    Cyclo coeff(Rat(1));
    long lam_size = lambda_leg.size();
    long rp = rho_out.size(), rm = rho_in.size();
    if ((lam_size + rp + rm) % 2 == 1) coeff = -coeff;
    ExpMonomial mono = vars.q_total(rat(lam_size + rp + rm, 2));
    mono = mono.times(vars.q_total(Rat(-rho_out.content_sum()) * ew.w3_over_w1()));
    mono = mono.times(vars.q_total(Rat(-rho_in.content_sum()) * ew.w3_over_w2()));
    mono = mono.times(vars.q_total(Rat(-lambda_leg.content_sum()) * ew.w1_over_w3()));
    out.frame_coeff = coeff;
    out.frame_mono = mono;
    return out;
}

std::map<ExpMonomial, QRat, MonoLess> glue_PY_exact(const Partition& rho_plus,
                                                    const Partition& rho_minus,
                                                    const std::vector<Partition>& lambda_legs,
                                                    const EquivWeights& w, long dv) {
    long n = w.n;
    if ((long)lambda_legs.size() != n) fail(errc::invalid_input, "glue_PY needs n lambda legs");
    std::map<ExpMonomial, QRat, MonoLess> out;

    // intermediate tuples rho^1..rho^{n-1}, total size <= dv
    std::vector<Partition> rho(n + 1);
    rho[0] = rho_minus;
    rho[n] = rho_plus;
    auto rec = [&](auto&& self, long slot, long budget) -> void {
        if (slot == n) {
            ExpMonomial vmono;
            for (long i = 1; i < n; ++i)
                vmono = vmono.times(ExpMonomial::var(var_v((int32_t)i), Rat(rho[i].size())));
            QRat prod = QRat::one();
            for (long j = 0; j < n && !prod.is_zero(); ++j)
                prod = prod * smooth_framed_vertex_exact(rho[j + 1], rho[j], lambda_legs[j], j, w);
            auto [it, inserted] = out.emplace(vmono, prod);
            if (!inserted) it->second = it->second + prod;
            return;
        }
        for (long s = 0; s <= budget; ++s) {
            for (auto& p : partitions_of(s)) {
                rho[slot] = p;
                self(self, slot + 1, budget - s);
            }
        }
        rho[slot] = Partition{};
    };
    if (n == 1) {
        QRat prod = smooth_framed_vertex_exact(rho_plus, rho_minus, lambda_legs[0], 0, w);
        out.emplace(ExpMonomial::one(), prod);
    } else {
        rec(rec, 1, dv);
    }
    return out;
}

PuiseuxSeries glue_PY(const Partition& rho_plus, const Partition& rho_minus,
                      const std::vector<Partition>& lambda_legs, const EquivWeights& w,
                      const Window& win, long dv) {
    auto exact = glue_PY_exact(rho_plus, rho_minus, lambda_legs, w, dv);
    PuiseuxSeries out(win);
    for (const auto& [vmono, qr] : exact) {
        if (!win.inside_hi(vmono)) continue;
        out += qr.expand(win).times_monomial(vmono);
    }
    Window fin = out.window();
    fin.hi[GRADE_V] = Rat(dv);
    if (win.hi[GRADE_Q]) fin.hi[GRADE_Q] = win.hi[GRADE_Q];
    out.truncate(fin);
    out.set_window(fin);
    return out;
}

} // namespace orbivertex
