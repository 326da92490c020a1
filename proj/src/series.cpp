#include "orbivertex/series.hpp"

#include <algorithm>

namespace orbivertex {

namespace {

std::optional<Rat> opt_min(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

// hi + lo with hi possibly infinite
std::optional<Rat> opt_shift(const std::optional<Rat>& hi, const Rat& lo) {
    if (!hi) return std::nullopt;
    return *hi + lo;
}

Rat combined_degree(const ExpMonomial& m, const std::vector<int>& gradings) {
    Rat d(0);
    for (int g : gradings) d += m.degree(g);
    return d;
}

} // namespace

Window Window::with_hi(int grading, Rat value) const {
    Window w = *this;
    w.hi[grading] = std::move(value);
    return w;
}

Window Window::with_lo(int grading, Rat value) const {
    Window w = *this;
    w.lo[grading] = std::move(value);
    return w;
}

bool Window::inside_hi(const ExpMonomial& m) const {
    for (int g = 0; g < kNumGradings; ++g)
        if (hi[g] && m.degree(g) > *hi[g]) return false;
    return true;
}

PuiseuxSeries PuiseuxSeries::zero(Window w) { return PuiseuxSeries(w); }

PuiseuxSeries PuiseuxSeries::one(Window w) {
    PuiseuxSeries s(w);
    s.add_term(ExpMonomial::one(), Cyclo(Rat(1)));
    return s;
}

PuiseuxSeries PuiseuxSeries::term(Cyclo c, ExpMonomial m, Window w) {
    for (int g = 0; g < kNumGradings; ++g) w.lo[g] = std::min(w.lo[g], m.degree(g));
    PuiseuxSeries s(w);
    s.add_term(m, c);
    return s;
}

Cyclo PuiseuxSeries::coeff(const ExpMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclo() : it->second;
}

void PuiseuxSeries::add_term(const ExpMonomial& m, const Cyclo& c) {
    if (c.is_zero()) return;
    if (!window_.inside_hi(m)) return;
    for (int g = 0; g < kNumGradings; ++g)
        window_.lo[g] = std::min(window_.lo[g], m.degree(g));
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PuiseuxSeries::truncate(const Window& w) {
    for (int g = 0; g < kNumGradings; ++g)
        window_.hi[g] = opt_min(window_.hi[g], w.hi[g]);
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!window_.inside_hi(it->first))
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::pair<ExpMonomial, Cyclo> PuiseuxSeries::lowest_term() const {
    if (terms_.empty()) fail(errc::invalid_input, "lowest_term of zero series");
    return *terms_.begin();
}

Rat PuiseuxSeries::min_degree(int grading) const {
    bool first = true;
    Rat best(0);
    for (const auto& [m, c] : terms_) {
        Rat d = m.degree(grading);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries out(window_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    Window w;
    for (int g = 0; g < kNumGradings; ++g) {
        w.hi[g] = opt_min(a.window_.hi[g], b.window_.hi[g]);
        w.lo[g] = std::min(a.window_.lo[g], b.window_.lo[g]);
    }
    PuiseuxSeries out(w);
    for (const auto& [m, c] : a.terms_) out.add_term(m, c);
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    Window w;
    for (int g = 0; g < kNumGradings; ++g) {
        w.lo[g] = a.window_.lo[g] + b.window_.lo[g];
        // a term at degree d pairs with partners down to the other factor's lo
        w.hi[g] = opt_min(opt_shift(a.window_.hi[g], b.window_.lo[g]),
                          opt_shift(b.window_.hi[g], a.window_.lo[g]));
    }
    PuiseuxSeries out(w);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            ExpMonomial m = ma.times(mb);
            if (!w.inside_hi(m)) continue;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::scaled(const Cyclo& c) const {
    PuiseuxSeries out(window_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) {
        Cyclo v = x * c;
        if (!v.is_zero()) out.terms_.emplace(m, std::move(v));
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::times_monomial(const ExpMonomial& m, const Cyclo& c) const {
    Window w = window_;
    for (int g = 0; g < kNumGradings; ++g) {
        Rat shift = m.degree(g);
        if (w.hi[g]) w.hi[g] = *w.hi[g] + shift;
        w.lo[g] = w.lo[g] + shift;
    }
    PuiseuxSeries out(w);
    if (c.is_zero()) return out;
    for (const auto& [mm, x] : terms_) {
        Cyclo v = x * c;
        if (!v.is_zero()) out.terms_.emplace(mm.times(m), std::move(v));
    }
    return out;
}

void PuiseuxSeries::require_exact_through(int grading, const Rat& hi) const {
    if (window_.hi[grading] && *window_.hi[grading] < hi)
        fail(errc::window_underflow, "series window cannot certify the requested degree");
}

bool PuiseuxSeries::equal_within(const PuiseuxSeries& a, const PuiseuxSeries& b, const Window& w) {
    return !first_difference(a, b, w).has_value();
}

std::optional<ExpMonomial> PuiseuxSeries::first_difference(const PuiseuxSeries& a,
                                                           const PuiseuxSeries& b,
                                                           const Window& w) {
    auto in_bounds = [&](const ExpMonomial& m) {
        for (int g = 0; g < kNumGradings; ++g) {
            Rat d = m.degree(g);
            if (w.hi[g] && d > *w.hi[g]) return false;
            if (d < w.lo[g]) return false;
        }
        return true;
    };
    for (const auto& [m, c] : a.terms_)
        if (in_bounds(m) && !(c == b.coeff(m))) return m;
    for (const auto& [m, c] : b.terms_)
        if (in_bounds(m) && !(c == a.coeff(m))) return m;
    return std::nullopt;
}

PuiseuxSeries series_inverse(const PuiseuxSeries& f, const std::vector<int>& gradings) {
    if (f.is_zero()) fail(errc::invalid_input, "inverse of zero series");
    const auto& terms = f.terms();
    auto best = terms.begin();
    Rat bestd = combined_degree(best->first, gradings);
    int ties = 1;
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
        Rat d = combined_degree(it->first, gradings);
        if (d < bestd) {
            best = it;
            bestd = d;
            ties = 1;
        } else if (d == bestd) {
            ++ties;
        }
    }
    if (ties != 1)
        fail(errc::non_unit_constant_term, "series has no single invertible lowest term");

    ExpMonomial m0 = best->first;
    Cyclo c0 = best->second;
    // f = c0 m0 (1 + g); 1/f = (1/c0) m0^{-1} sum (-g)^k
    PuiseuxSeries g = f.times_monomial(m0.inverse(), c0.inverse());
    g = g - PuiseuxSeries::one(g.window());
    if (!g.is_zero()) {
        Rat gmin = combined_degree(g.terms().begin()->first, gradings);
        for (const auto& [m, c] : g.terms())
            gmin = std::min(gmin, combined_degree(m, gradings));
        if (gmin <= 0) fail(errc::non_unit_constant_term, "series tail not positive-degree");
    }

    PuiseuxSeries acc = PuiseuxSeries::one(g.window());
    PuiseuxSeries out = PuiseuxSeries::one(g.window());
    constexpr long kSafetyCap = 20000;
    long k = 0;
    while (!g.is_zero()) {
        acc = acc * (-g);
        if (acc.is_zero()) break;
        out += acc;
        if (++k > kSafetyCap)
            fail(errc::window_underflow, "series_inverse did not terminate in window");
    }
    return out.times_monomial(m0.inverse(), c0.inverse());
}

PuiseuxSeries series_div(const PuiseuxSeries& a, const PuiseuxSeries& b,
                         const std::vector<int>& gradings) {
    return a * series_inverse(b, gradings);
}

PuiseuxSeries series_exp(const PuiseuxSeries& f, const std::vector<int>& gradings) {
    Window w = f.window();
    PuiseuxSeries out = PuiseuxSeries::one(w);
    if (f.is_zero()) return out;
    Rat fmin = combined_degree(f.terms().begin()->first, gradings);
    for (const auto& [m, c] : f.terms()) fmin = std::min(fmin, combined_degree(m, gradings));
    if (fmin <= 0) fail(errc::non_unit_constant_term, "series_exp needs positive-degree input");
    PuiseuxSeries acc = PuiseuxSeries::one(w);
    Rat fact(1);
    constexpr long kSafetyCap = 20000;
    for (long k = 1; k <= kSafetyCap; ++k) {
        acc = acc * f;
        if (acc.is_zero()) return out;
        fact *= k;
        out += acc.scaled(Cyclo(Rat(1) / fact));
    }
    fail(errc::window_underflow, "series_exp did not terminate in window");
}

PuiseuxSeries series_log(const PuiseuxSeries& f, const std::vector<int>& gradings) {
    Window w = f.window();
    if (!(f.coeff(ExpMonomial::one()) == Cyclo(Rat(1))))
        fail(errc::non_unit_constant_term, "series_log needs constant term 1");
    PuiseuxSeries g = f - PuiseuxSeries::one(w);
    PuiseuxSeries out = PuiseuxSeries::zero(w);
    if (g.is_zero()) return out;
    Rat gmin = combined_degree(g.terms().begin()->first, gradings);
    for (const auto& [m, c] : g.terms()) gmin = std::min(gmin, combined_degree(m, gradings));
    if (gmin <= 0) fail(errc::non_unit_constant_term, "series_log tail not positive-degree");
    PuiseuxSeries acc = PuiseuxSeries::one(w);
    constexpr long kSafetyCap = 20000;
    for (long k = 1; k <= kSafetyCap; ++k) {
        acc = acc * g;
        if (acc.is_zero()) return out;
        out += acc.scaled(Cyclo(rat((k % 2 == 1) ? 1 : -1, k)));
    }
    fail(errc::window_underflow, "series_log did not terminate in window");
}

namespace {

// (1 + tail)^e by the binomial series; tail must have positive total degree
PuiseuxSeries one_plus_tail_pow(const PuiseuxSeries& tail, const Rat& e, const Window& w) {
    PuiseuxSeries out = PuiseuxSeries::one(w);
    if (tail.is_zero() || e == 0) return out;
    Rat tmin(0);
    bool first = true;
    for (const auto& [m, c] : tail.terms()) {
        Rat d(0);
        for (int g = 0; g < kNumGradings; ++g) d += m.degree(g);
        if (first || d < tmin) tmin = d;
        first = false;
    }
    if (tmin <= 0) fail(errc::divergent_substitution, "substitution tail not positive-degree");
    PuiseuxSeries acc = PuiseuxSeries::one(w);
    Rat binom(1);
    constexpr long kSafetyCap = 20000;
    for (long k = 1; k <= kSafetyCap; ++k) {
        binom *= (e - Rat(k - 1)) / Rat(k);
        if (binom == 0) return out;
        acc = acc * tail;
        acc.truncate(w);
        if (acc.is_zero()) return out;
        out += acc.scaled(Cyclo(binom));
    }
    fail(errc::divergent_substitution, "fractional power did not terminate in window");
}

} // namespace

PuiseuxSeries substitute(const PuiseuxSeries& f, const SubstMap& map,
                         const std::optional<Window>& asserted) {
    Window result_w;
    if (asserted) {
        result_w = *asserted;
    } else {
        result_w = Window::exact();
        for (int g = 0; g < kNumGradings; ++g) result_w.hi[g] = f.window().hi[g];
        for (const auto& [v, img] : map) {
            int vg = grading_of(v.kind);
            if (!f.window().hi[vg]) continue;  // source exact in this grading
            Rat img_min = img.mono.degree(vg);
            if (img.tail)
                for (const auto& [tm, tc] : img.tail->terms())
                    img_min = std::min(img_min, Rat(img.mono.degree(vg) + tm.degree(vg)));
            if (img_min < 1)
                fail(errc::divergent_substitution, "substitution image for " + var_name(v) +
                                                       " lowers the grading of a truncated series");
            if (img_min > 1) {
                for (const auto& [m, c] : f.terms())
                    if (m.exponent(v) < 0)
                        fail(errc::divergent_substitution,
                             "substitution image for " + var_name(v) +
                                 " is degree-raising but the variable occurs inverted");
            }
        }
    }

    PuiseuxSeries out(result_w);
    for (const auto& [m, c] : f.terms()) {
        PuiseuxSeries term_val = PuiseuxSeries::one(result_w);
        Cyclo coef = c;
        ExpMonomial untouched;
        for (const auto& [v, e] : m.exps()) {
            auto it = map.find(v);
            if (it == map.end()) {
                untouched = untouched.times(ExpMonomial::var(v, e));
                continue;
            }
            const SubstImage& img = it->second;
            if (!img.root.is_one()) {
                if (is_integer(e))
                    coef *= img.root.pow(to_long(e.get_num())).to_cyclo();
                else
                    coef *= root_power(img.root, e);
            }
            untouched = untouched.times(img.mono.pow(e));
            if (img.tail && !img.tail->is_zero()) {
                if (is_integer(e)) {
                    long ei = to_long(e.get_num());
                    PuiseuxSeries base = PuiseuxSeries::one(result_w) + *img.tail;
                    base.truncate(result_w);
                    PuiseuxSeries p = PuiseuxSeries::one(result_w);
                    long k = ei < 0 ? -ei : ei;
                    for (long i = 0; i < k; ++i) {
                        p = p * base;
                        p.truncate(result_w);
                    }
                    if (ei < 0) p = series_inverse(p, {GRADE_Q, GRADE_U, GRADE_X, GRADE_V});
                    term_val = term_val * p;
                } else {
                    term_val = term_val * one_plus_tail_pow(*img.tail, e, result_w);
                }
            }
        }
        out += term_val.times_monomial(untouched, coef);
    }
    out.truncate(result_w);
    Window fw = result_w;
    for (int g = 0; g < kNumGradings; ++g) fw.lo[g] = out.window().lo[g];
    out.set_window(fw);
    return out;
}

} // namespace orbivertex
