#include "orbivertex/gw_side.hpp"

#include <algorithm>
#include <mutex>

namespace orbivertex {

namespace {

long norm_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

PartClassifier delta_tau_plus(long part, long n) { return {1, n, norm_mod(part, n), part}; }
PartClassifier delta_tau_minus(long part, long n) { return {2, n, norm_mod(-part, n), part}; }
PartClassifier delta_mu(long part, long color, long n) { return {3, 1, color, part}; }

PartClassifier delta_tilde(long which_leg, long part) { return {which_leg, 1, 0, part}; }

Rat disk_at(const PartClassifier& c, long n, const Rat& w1, const Rat& w2, const Rat& w3) {
    if (c.d < 1) fail(errc::invalid_input, "disk needs d >= 1");
    if (c.m != 1 && c.m != n) fail(errc::invalid_input, "disk needs m in {1, n}");
    const Rat w[6] = {Rat(0), w1, w2, w3, w1, w2};
    const long r[6] = {0, 1, -1, 0, 1, -1};
    if (w[c.i] == 0) fail(errc::zero_weight, "disk weight w_i vanished");

    Rat value(1);
    if (c.k == 0) value *= Rat(c.d) * w1 * w2 / (Rat(c.m) * w[c.i]);

    Int ffac;
    mpz_fac_ui(ffac.get_mpz_t(), c.d / c.m);
    value *= Rat(c.m) * w3 / (Rat(c.d) * Rat(ffac));

    Rat lead = Rat(c.d) * w[c.i + 1] / (Rat(c.m) * w[c.i]);
    Rat A = lead + frac_part(rat(-c.k * r[c.i + 2], n)) + rat(c.d, c.m);
    Rat B = lead - frac_part(rat(-c.k * r[c.i + 1], n)) + Rat(1);
    Rat gap = A - B;
    if (!is_integer(gap)) fail(errc::non_integer_gamma_gap, "Gamma arguments differ by a non-integer");
    long g = to_long(gap.get_num());
    if (g >= 0) {
        for (long t = 0; t < g; ++t) value *= B + Rat(t);
    } else {
        for (long t = 0; t < -g; ++t) {
            Rat f = A + Rat(t);
            if (f == 0) fail(errc::zero_disk_factor, "Gamma ratio has a pole");
            value /= f;
        }
    }
    return value;
}

Rat disk(const PartClassifier& c, const EquivWeights& w) {
    return disk_at(c, w.n, w.w1(), w.w2(), w.w3());
}

Cyclo gw_frame_factor(const Partition& tau_plus, const Partition& tau_minus,
                      const MultiPartition& mu) {
    long n = mu.modulus;
    long sign_exp = mu.size();
    for (long p : tau_minus.parts) sign_exp += to_long(floor_int(rat(-p, n)));
    Cyclo out(Rat(1));
    if (((sign_exp % 2) + 2) % 2 == 1) out = -out;
    Cyclo I = Cyclo::sqrt_minus_one();
    out *= I.pow(-(tau_plus.length() + tau_minus.length()));
    for (long k = 0; k < n; ++k) {
        long lk = mu.comp(k).length();
        if (lk == 0) continue;
        Cyclo block = I * Cyclo::root_of_unity(2 * n, k);
        out *= block.pow(lk);
    }
    return out;
}

namespace {

// images of the q variables under the vertex identification
std::map<VarId, ExpVarImage> gw_images(const EquivWeights& w) {
    long n = w.n;
    std::map<VarId, ExpVarImage> images;
    const Cyclo inv_n(rat(1, n));

    // sigma_{j,k} = (xi_n^{-jk}/n)(xi_{2n}^k - xi_{2n}^{-k}); q_j -> xi_n^{-1} e^{-sum sigma x_k}
    auto sigma = [&](long j, long k) {
        Cyclo c = Cyclo::root_of_unity(n, -j * k) * inv_n;
        return c * (Cyclo::root_of_unity(2 * n, k) - Cyclo::root_of_unity(2 * n, -k));
    };

    std::map<int32_t, Cyclo> x0;  // accumulates +sum_j sigma_{j,k} for the q_0 image
    for (long j = 1; j < n; ++j) {
        ExpVarImage img;
        img.root = RootUnity::xi(n, -1);
        for (long k = 1; k < n; ++k) {
            Cyclo c = -sigma(j, k);
            if (!c.is_zero()) img.x_coeff[(int32_t)k] = c;
            auto [it, inserted] = x0.emplace((int32_t)k, sigma(j, k));
            if (!inserted) it->second += sigma(j, k);
        }
        images[var_q((int32_t)j)] = img;
    }
    // q_0 = q prod_{j>0} q_j^{-1}, q -> e^{iu}
    ExpVarImage img0;
    img0.root = RootUnity::xi(n, n - 1);
    img0.u_coeff = Rat(1);
    for (auto& [k, c] : x0)
        if (!c.is_zero()) img0.x_coeff[k] = c;
    images[var_q(0)] = img0;
    return images;
}

std::mutex g_pred_cache_mutex;
using PredKey = std::tuple<VertexLegs, long, Rat, long, long>;
std::map<PredKey, PuiseuxSeries> g_pred_cache;

PuiseuxSeries framed_vertex_substituted(const VertexLegs& legs, const EquivWeights& w,
                                        long u_order, long x_order) {
    PredKey key{legs, w.n, w.s, u_order, x_order};
    {
        std::lock_guard<std::mutex> lock(g_pred_cache_mutex);
        auto it = g_pred_cache.find(key);
        if (it != g_pred_cache.end()) return it->second;
    }
    QRat exact = framed_vertex_exact(legs, w);
    PuiseuxSeries out = qrat_substitute_exponential(exact, gw_images(w), u_order, x_order);
    std::lock_guard<std::mutex> lock(g_pred_cache_mutex);
    g_pred_cache.emplace(std::move(key), out);
    return out;
}

} // namespace

PredictedGWSeries predicted_framed_gw(const LegTriple& legs, const EquivWeights& w, long u_order,
                                      long x_order) {
    long n = w.n;
    if (legs.mu.modulus != n) fail(errc::modulus_mismatch, "legs and weights moduli differ");
    PredictedGWSeries out;
    out.legs = legs;
    out.weights = w;
    out.framed = true;

    Rat z_tau_plus = Rat(z_sym(legs.tau_plus));
    Rat z_tau_minus = Rat(z_sym(legs.tau_minus));
    Rat z_mu = Rat(z_wreath(legs.mu));

    PuiseuxSeries sum;
    bool first = true;
    for (const auto& rp : partitions_of(legs.tau_plus.size())) {
        Int chi_p = char_sym(rp, legs.tau_plus);
        if (chi_p == 0) continue;
        for (const auto& rm : partitions_of(legs.tau_minus.size())) {
            Int chi_m = char_sym(rm, legs.tau_minus);
            if (chi_m == 0) continue;
            for (const auto& lam : multipartitions_of(n, legs.mu.size())) {
                Cyclo chi_l = char_wreath(lam, legs.mu);
                if (chi_l.is_zero()) continue;
                Cyclo coef = Cyclo(rat(chi_p, 1) / z_tau_plus) * Cyclo(rat(chi_m, 1) / z_tau_minus) *
                             (chi_l * Cyclo(Rat(1) / z_mu));
                VertexLegs vl{rp, rm, lam};
                PuiseuxSeries piece = framed_vertex_substituted(vl, w, u_order, x_order);
                if (first) {
                    sum = piece.scaled(coef);
                    first = false;
                } else {
                    sum += piece.scaled(coef);
                }
            }
        }
    }
    if (first) sum = PuiseuxSeries::one();
    out.series = sum;
    return out;
}

LegSeriesFamily predicted_connected_family(const LegTriple& legs, const EquivWeights& w,
                                           long u_order, long x_order) {
    LegSeriesFamily disconnected;
    for (const auto& t : sub_triples(legs)) {
        if (t.empty()) continue;
        PredictedGWSeries pred = predicted_framed_gw(t, w, u_order, x_order);
        Cyclo frame = gw_frame_factor(t.tau_plus, t.tau_minus, t.mu);
        disconnected[t] = pred.series.scaled(frame.inverse());
    }
    return connected_from_disconnected(disconnected);
}

std::vector<StrippedValue> strip_disks(const PuiseuxSeries& connected, const LegTriple& legs,
                                       const EquivWeights& w) {
    long n = w.n;
    Rat disk_product(1);
    for (long p : legs.tau_plus.parts) disk_product *= disk(delta_tau_plus(p, n), w);
    for (long p : legs.tau_minus.parts) disk_product *= disk(delta_tau_minus(p, n), w);
    for (long k = 0; k < n; ++k)
        for (long p : legs.mu.comp(k).parts) disk_product *= disk(delta_mu(p, k, n), w);
    if (disk_product == 0) fail(errc::zero_disk_factor, "a disk factor vanished");

    Rat auts = Rat(aut_order(legs.tau_plus)) * Rat(aut_order(legs.tau_minus)) *
               Rat(aut_order(legs.mu));
    long l = legs.total_parts();

    std::vector<StrippedValue> out;
    for (const auto& [m, c] : connected.terms()) {
        Rat ue = m.exponent(var_u());
        if (!is_integer(ue)) fail(errc::invalid_input, "non-integer u exponent");
        long e = to_long(ue.get_num());
        // e = 2g - 2 + l
        long twice_g = e + 2 - l;
        if (twice_g % 2 != 0 || twice_g < 0) continue;
        // gamma! = prod m_k!, and the x-part of the monomial is gamma
        ExpMonomial gamma;
        Rat gamma_fact(1);
        for (const auto& [v, ex] : m.exps()) {
            if (v.kind != VarKind::X) continue;
            gamma = gamma.times(ExpMonomial::var(v, ex));
            if (!is_integer(ex) || ex < 0) fail(errc::invalid_input, "bad x exponent");
            Int f;
            mpz_fac_ui(f.get_mpz_t(), (unsigned long)to_long(ex.get_num()));
            gamma_fact *= Rat(f);
        }
        StrippedValue v;
        v.genus = twice_g / 2;
        v.gamma = gamma;
        v.value = c * Cyclo(gamma_fact * auts / disk_product);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace orbivertex
