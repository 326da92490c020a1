#pragma once

#include <functional>
#include <map>

#include "orbivertex/series.hpp"

namespace orbivertex {

// Exact rational form: a Laurent numerator over a product of factors
// (1 - m) for monomials m of positive total degree. Sums of complete
// homogeneous functions over the geometric alphabets 𝔮_{•-λ̄} close under
// +,-,* in this ring, which is what lets the vertex series be stored exactly
// and expanded or substituted later without truncation error.
class QRat {
public:
    QRat() : num_(PuiseuxSeries::zero()) {}

    static QRat zero() { return QRat(); }
    static QRat one();
    static QRat monomial(Cyclo c, ExpMonomial m);
    static QRat scalar(Cyclo c) { return monomial(std::move(c), ExpMonomial::one()); }

    const PuiseuxSeries& num() const { return num_; }
    const std::map<ExpMonomial, long, MonoLess>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    long den_factor_count() const;

    // divide by (1 - m)^count; m must have positive total degree
    QRat over_one_minus(const ExpMonomial& m, long count = 1) const;

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    QRat operator-() const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }

    QRat scaled(const Cyclo& c) const;
    QRat times_monomial(const ExpMonomial& m, const Cyclo& c = Cyclo(Rat(1))) const;

    // exact expansion of the geometric factors within the window's hi bounds
    PuiseuxSeries expand(const Window& w) const;

    // exact variable relabeling v -> monomial (e.g. v_i -> q_i, q -> q_0...q_{n-1})
    QRat substituted(const std::map<VarId, ExpMonomial>& images) const;

private:
    PuiseuxSeries num_;                           // exact Laurent polynomial
    std::map<ExpMonomial, long, MonoLess> den_;   // (1 - m)^count factors
};

// Exponential substitution q_c -> root_c * exp(i * u_coeff_c * u + sum_k x_coeff_c[k] * x_k).
// Images must be supplied for every variable occurring in the value. The
// result is an exact Laurent series in u (integer exponents, bounded below by
// minus the number of pole factors) with coefficients polynomial in the x's.
struct ExpVarImage {
    RootUnity root = RootUnity::one();
    Rat u_coeff = Rat(0);                 // coefficient of sqrt(-1)*u in the exponent
    std::map<int32_t, Cyclo> x_coeff;     // coefficient of x_k in the exponent
};

PuiseuxSeries qrat_substitute_exponential(const QRat& value,
                                          const std::map<VarId, ExpVarImage>& images,
                                          long u_order, long x_order);

} // namespace orbivertex
