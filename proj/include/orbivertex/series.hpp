#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orbivertex/cyclotomic.hpp"
#include "orbivertex/monomial.hpp"

namespace orbivertex {

// Per-grading exactness bookkeeping for a truncated series.
//   hi[g]: degrees <= hi[g] are complete (nullopt: exact, all terms stored)
//   lo[g]: true lower bound of the underlying object's support. Series are
//          only ever truncated from above, so stored terms always include the
//          full low end and lo stays valid under +,*.
struct Window {
    Rat lo[kNumGradings] = {Rat(0), Rat(0), Rat(0), Rat(0)};
    std::optional<Rat> hi[kNumGradings];

    static Window exact() { return Window{}; }
    Window with_hi(int grading, Rat value) const;
    Window with_lo(int grading, Rat value) const;
    bool inside_hi(const ExpMonomial& m) const;
    friend bool operator==(const Window&, const Window&) = default;
};

// Truncated multivariate Laurent-Puiseux series with CycloNumber coefficients.
class PuiseuxSeries {
public:
    using TermMap = std::map<ExpMonomial, Cyclo, MonoLess>;

    PuiseuxSeries() : window_(Window::exact()) {}
    explicit PuiseuxSeries(Window w) : window_(w) {}

    static PuiseuxSeries zero(Window w = Window::exact());
    static PuiseuxSeries one(Window w = Window::exact());
    static PuiseuxSeries term(Cyclo c, ExpMonomial m, Window w = Window::exact());

    const TermMap& terms() const { return terms_; }
    const Window& window() const { return window_; }
    void set_window(const Window& w) { window_ = w; }
    bool is_zero() const { return terms_.empty(); }

    Cyclo coeff(const ExpMonomial& m) const;
    // adds a term, dropping it if outside the hi bounds; lowers lo as needed
    void add_term(const ExpMonomial& m, const Cyclo& c);
    // shrink-only: drops terms above the requested hi bounds and tightens hi
    void truncate(const Window& w);

    // lowest term in the canonical monomial order; series must be nonzero
    std::pair<ExpMonomial, Cyclo> lowest_term() const;
    Rat min_degree(int grading) const;

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = *this + o; }
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    PuiseuxSeries scaled(const Cyclo& c) const;
    PuiseuxSeries times_monomial(const ExpMonomial& m, const Cyclo& c = Cyclo(Rat(1))) const;

    // require the window to certify exactness at least through the given hi
    void require_exact_through(int grading, const Rat& hi) const;

    // agreement on every monomial with degrees within [w.lo, w.hi] per grading
    static bool equal_within(const PuiseuxSeries& a, const PuiseuxSeries& b, const Window& w);
    static std::optional<ExpMonomial> first_difference(const PuiseuxSeries& a,
                                                       const PuiseuxSeries& b, const Window& w);

private:
    TermMap terms_;
    Window window_;
};

// Inverse of a series whose lowest term (in the combined degree over
// `gradings`) is a single invertible monomial. Exact within the window.
PuiseuxSeries series_inverse(const PuiseuxSeries& f, const std::vector<int>& gradings);
PuiseuxSeries series_div(const PuiseuxSeries& a, const PuiseuxSeries& b,
                         const std::vector<int>& gradings);

// exp of a series with strictly positive degree in the summed gradings
PuiseuxSeries series_exp(const PuiseuxSeries& f, const std::vector<int>& gradings);
// log of a series with constant term exactly 1
PuiseuxSeries series_log(const PuiseuxSeries& f, const std::vector<int>& gradings);

// Substitution image: root * monomial * (1 + tail). Fractional powers of the
// image raise the root part through root_power and scale monomial exponents.
struct SubstImage {
    RootUnity root = RootUnity::one();
    ExpMonomial mono;
    std::optional<PuiseuxSeries> tail;  // positive-degree terms
};

using SubstMap = std::map<VarId, SubstImage>;

// Ring-homomorphic substitution. A variable not in the map is left alone.
// If the source is inexact in some grading, every image must not lower that
// grading, unless the caller asserts a result window via `asserted`.
PuiseuxSeries substitute(const PuiseuxSeries& f, const SubstMap& map,
                         const std::optional<Window>& asserted = std::nullopt);

} // namespace orbivertex
