#pragma once

#include <vector>

#include "orbivertex/rational.hpp"

namespace orbivertex {

// Exact element of the N-th cyclotomic field Q(xi_N), stored in the power
// basis 1, xi, ..., xi^{phi(N)-1} reduced modulo the N-th cyclotomic
// polynomial. The representation in that basis is unique, so equality and
// is_rational are exact coordinate checks. Values of different orders
// promote automatically to the lcm order.
class Cyclo {
public:
    Cyclo() : order_(1), coords_(1, Rat(0)) {}
    Cyclo(const Rat& r) : order_(1), coords_(1, r) {}
    Cyclo(long n) : order_(1), coords_(1, Rat(n)) {}

    static Cyclo root_of_unity(long order, long exponent);
    static Cyclo sqrt_minus_one() { return root_of_unity(4, 1); }

    long order() const { return order_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    // requires is_rational()
    Rat rational_value() const;

    Cyclo promoted(long new_order) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo inverse() const;
    // complex conjugation, the Galois map xi_N -> xi_N^{N-1}
    Cyclo conj() const;
    Cyclo pow(long e) const;

    // Total order usable as a map key (order, then coords lexicographically).
    static int cmp(const Cyclo& a, const Cyclo& b);

private:
    Cyclo(long order, std::vector<Rat> coords) : order_(order), coords_(std::move(coords)) {}
    static Cyclo from_poly(long order, std::vector<Rat> poly);

    long order_;
    std::vector<Rat> coords_;
};

// Coefficients (ascending, monic) of the N-th cyclotomic polynomial.
const std::vector<Int>& cyclotomic_poly(long n);

long euler_phi(long n);

// Exact root of unity with sign folded in: value xi_{order}^{exp}.
struct RootUnity {
    long order = 1;
    long exp = 0;

    static RootUnity one() { return {1, 0}; }
    static RootUnity minus_one() { return {2, 1}; }
    static RootUnity xi(long order, long exp);

    RootUnity times(const RootUnity& o) const;
    RootUnity pow(long e) const;
    Cyclo to_cyclo() const { return Cyclo::root_of_unity(order, exp); }
    bool is_one() const { return exp == 0; }
};

// Principal-branch fractional power of a root of unity: with the exponent of
// `base` taken as its principal representative a in [0, order), returns
// xi_{order*den(r)}^{a*num(r)}. This is the single branch convention used by
// every fractional root power in the library.
RootUnity root_power_exact(const RootUnity& base, const Rat& r);
Cyclo root_power(const RootUnity& base, const Rat& r);

} // namespace orbivertex
