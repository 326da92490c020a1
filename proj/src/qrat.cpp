#include "orbivertex/qrat.hpp"

#include <algorithm>

namespace orbivertex {

namespace {

Rat total_degree(const ExpMonomial& m) {
    Rat d(0);
    for (int g = 0; g < kNumGradings; ++g) d += m.degree(g);
    return d;
}

PuiseuxSeries one_minus(const ExpMonomial& m) {
    PuiseuxSeries s = PuiseuxSeries::one();
    s.add_term(m, Cyclo(Rat(-1)));
    return s;
}

} // namespace

QRat QRat::one() { return monomial(Cyclo(Rat(1)), ExpMonomial::one()); }

QRat QRat::monomial(Cyclo c, ExpMonomial m) {
    QRat r;
    r.num_ = PuiseuxSeries::term(std::move(c), std::move(m));
    return r;
}

long QRat::den_factor_count() const {
    long n = 0;
    for (const auto& [m, k] : den_) n += k;
    return n;
}

QRat QRat::over_one_minus(const ExpMonomial& m, long count) const {
    if (total_degree(m) <= 0)
        fail(errc::invalid_input, "geometric denominator needs positive degree");
    QRat out = *this;
    if (!out.is_zero()) out.den_[m] += count;
    return out;
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QRat out;
    // common denominator: multiset max
    out.den_ = a.den_;
    for (const auto& [m, k] : b.den_) {
        auto it = out.den_.find(m);
        if (it == out.den_.end())
            out.den_[m] = k;
        else
            it->second = std::max(it->second, k);
    }
    PuiseuxSeries na = a.num_, nb = b.num_;
    for (const auto& [m, k] : out.den_) {
        long ka = k, kb = k;
        if (auto it = a.den_.find(m); it != a.den_.end()) ka -= it->second;
        if (auto it = b.den_.find(m); it != b.den_.end()) kb -= it->second;
        for (long i = 0; i < ka; ++i) na = na * one_minus(m);
        for (long i = 0; i < kb; ++i) nb = nb * one_minus(m);
    }
    out.num_ = na + nb;
    if (out.num_.is_zero()) out.den_.clear();
    return out;
}

QRat QRat::operator-() const {
    QRat out = *this;
    out.num_ = -out.num_;
    return out;
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
    QRat out;
    out.num_ = a.num_ * b.num_;
    if (out.num_.is_zero()) return out;
    out.den_ = a.den_;
    for (const auto& [m, k] : b.den_) out.den_[m] += k;
    return out;
}

QRat QRat::scaled(const Cyclo& c) const {
    QRat out = *this;
    out.num_ = out.num_.scaled(c);
    if (out.num_.is_zero()) out.den_.clear();
    return out;
}

QRat QRat::times_monomial(const ExpMonomial& m, const Cyclo& c) const {
    QRat out = *this;
    out.num_ = out.num_.times_monomial(m, c);
    if (out.num_.is_zero()) out.den_.clear();
    return out;
}

PuiseuxSeries QRat::expand(const Window& w) const {
    // geometric factors must reach far enough to cover the numerator's lows
    Window wext = w;
    for (int g = 0; g < kNumGradings; ++g)
        if (wext.hi[g]) wext.hi[g] = *wext.hi[g] + std::max(Rat(0), Rat(-num_.window().lo[g]));
    PuiseuxSeries out = num_;
    for (const auto& [m, count] : den_) {
        for (long rep = 0; rep < count; ++rep) {
            // geometric expansion of (1 - m)^{-1}
            PuiseuxSeries geo = PuiseuxSeries::one(wext);
            PuiseuxSeries pw = PuiseuxSeries::one(wext);
            constexpr long kSafetyCap = 20000;
            long k = 0;
            while (true) {
                pw = pw.times_monomial(m);
                pw.truncate(wext);
                if (pw.is_zero()) break;
                geo += pw;
                if (++k > kSafetyCap)
                    fail(errc::window_underflow, "geometric expansion did not terminate");
            }
            out = out * geo;
            out.truncate(w);
        }
    }
    out.truncate(w);
    for (int g = 0; g < kNumGradings; ++g)
        if (w.hi[g]) out.require_exact_through(g, *w.hi[g]);
    return out;
}

QRat QRat::substituted(const std::map<VarId, ExpMonomial>& images) const {
    auto map_mono = [&](const ExpMonomial& m) {
        ExpMonomial out;
        for (const auto& [v, e] : m.exps()) {
            auto it = images.find(v);
            if (it == images.end())
                out = out.times(ExpMonomial::var(v, e));
            else
                out = out.times(it->second.pow(e));
        }
        return out;
    };
    QRat out;
    PuiseuxSeries num;
    for (const auto& [m, c] : num_.terms()) num.add_term(map_mono(m), c);
    out.num_ = num;
    for (const auto& [m, k] : den_) {
        ExpMonomial im = map_mono(m);
        if (total_degree(im) <= 0)
            fail(errc::invalid_input, "substitution sends a denominator to non-positive degree");
        out.den_[im] += k;
    }
    if (out.num_.is_zero()) out.den_.clear();
    return out;
}

namespace {

// expansion of exp(S) where S has no constant term, within window w
PuiseuxSeries exp_series(const PuiseuxSeries& s, const Window& w) {
    PuiseuxSeries out = PuiseuxSeries::one(w);
    PuiseuxSeries acc = PuiseuxSeries::one(w);
    Rat fact(1);
    constexpr long kSafetyCap = 5000;
    for (long k = 1; k <= kSafetyCap; ++k) {
        acc = acc * s;
        acc.truncate(w);
        if (acc.is_zero()) return out;
        fact *= k;
        out += acc.scaled(Cyclo(Rat(1) / fact));
    }
    fail(errc::window_underflow, "exp expansion did not terminate");
}

} // namespace

PuiseuxSeries qrat_substitute_exponential(const QRat& value,
                                          const std::map<VarId, ExpVarImage>& images,
                                          long u_order, long x_order) {
    // count pole factors to widen the working u-window
    long poles = 0;
    auto image_of_mono = [&](const ExpMonomial& m, RootUnity& root_out, Rat& ucoef_out,
                             std::map<int32_t, Cyclo>& xcoef_out) {
        root_out = RootUnity::one();
        ucoef_out = Rat(0);
        xcoef_out.clear();
        for (const auto& [v, e] : m.exps()) {
            auto it = images.find(v);
            if (it == images.end())
                fail(errc::divergent_substitution, "no exponential image for " + var_name(v));
            const ExpVarImage& img = it->second;
            root_out = root_out.times(root_power_exact(img.root, e));
            ucoef_out += img.u_coeff * e;
            for (const auto& [k, c] : img.x_coeff) {
                auto [jt, inserted] = xcoef_out.emplace(k, c * Cyclo(e));
                if (!inserted) jt->second += c * Cyclo(e);
            }
        }
    };

    for (const auto& [m, count] : value.den()) {
        RootUnity root;
        Rat uc;
        std::map<int32_t, Cyclo> xc;
        image_of_mono(m, root, uc, xc);
        if (root.is_one()) poles += count;
    }

    // every pole factor reaches down to u^{-(1+x_order)}
    const long pole_depth = 1 + x_order;
    Window work;
    work.hi[GRADE_U] = Rat(u_order + poles * pole_depth);
    work.hi[GRADE_X] = Rat(x_order);

    const Cyclo I = Cyclo::sqrt_minus_one();

    // S as a series in u, x (no constant term)
    auto exponent_series = [&](const Rat& uc, const std::map<int32_t, Cyclo>& xc) {
        PuiseuxSeries s(work);
        if (uc != 0) s.add_term(ExpMonomial::var(var_u()), I * Cyclo(uc));
        for (const auto& [k, c] : xc) s.add_term(ExpMonomial::var(var_x(k)), c);
        return s;
    };

    // numerator
    PuiseuxSeries out(work);
    for (const auto& [m, coef] : value.num().terms()) {
        RootUnity root;
        Rat uc;
        std::map<int32_t, Cyclo> xc;
        image_of_mono(m, root, uc, xc);
        PuiseuxSeries term = exp_series(exponent_series(uc, xc), work);
        out += term.scaled(coef * root.to_cyclo());
    }

    // denominator factors
    for (const auto& [m, count] : value.den()) {
        RootUnity root;
        Rat uc;
        std::map<int32_t, Cyclo> xc;
        image_of_mono(m, root, uc, xc);
        PuiseuxSeries inv;
        if (!root.is_one()) {
            // 1 - rho exp(S): invertible at the origin
            PuiseuxSeries f = PuiseuxSeries::one(work) -
                              exp_series(exponent_series(uc, xc), work).scaled(root.to_cyclo());
            inv = series_inverse(f, {GRADE_U, GRADE_X});
        } else {
            // pole: 1 - exp(S) = -S * G with G = sum_m S^m/(m+1)! invertible
            if (uc == 0)
                fail(errc::zero_weight, "denominator exponent has no u part at a pole");
            PuiseuxSeries S = exponent_series(uc, xc);
            PuiseuxSeries G = PuiseuxSeries::one(work);
            {
                PuiseuxSeries acc = PuiseuxSeries::one(work);
                Rat fact(1);
                constexpr long kSafetyCap = 5000;
                for (long k = 1; k <= kSafetyCap; ++k) {
                    acc = acc * S;
                    acc.truncate(work);
                    if (acc.is_zero()) break;
                    fact *= (k + 1);
                    G += acc.scaled(Cyclo(Rat(1) / fact));
                }
            }
            PuiseuxSeries Ginv = series_inverse(G, {GRADE_U, GRADE_X});
            // S^{-1} = sum_{k>=0} (-1)^k L^k (i uc)^{-k-1} u^{-k-1},  L = x-part of S
            PuiseuxSeries L(work);
            for (const auto& [k, c] : xc) L.add_term(ExpMonomial::var(var_x(k)), c);
            Cyclo iuc_inv = (I * Cyclo(uc)).inverse();
            ExpMonomial uinv = ExpMonomial::var(var_u(), Rat(-1));
            PuiseuxSeries Sinv(work);
            PuiseuxSeries Lpow = PuiseuxSeries::one(work);
            Cyclo scale = iuc_inv;
            ExpMonomial umono = uinv;
            while (true) {
                PuiseuxSeries piece = Lpow.times_monomial(umono, scale);
                piece.truncate(work);
                if (piece.is_zero()) break;
                Sinv += piece;
                Lpow = Lpow * (-L);
                Lpow.truncate(work);
                if (Lpow.is_zero()) break;
                scale = scale * iuc_inv;
                umono = umono.times(uinv);
            }
            inv = (-Sinv) * Ginv;
        }
        for (long rep = 0; rep < count; ++rep) out = out * inv;
    }

    // the window arithmetic must certify the requested orders
    out.require_exact_through(GRADE_U, Rat(u_order));
    out.require_exact_through(GRADE_X, Rat(x_order));
    Window final_w = out.window();
    final_w.hi[GRADE_U] = Rat(u_order);
    final_w.hi[GRADE_X] = Rat(x_order);
    out.truncate(final_w);
    return out;
}

} // namespace orbivertex
