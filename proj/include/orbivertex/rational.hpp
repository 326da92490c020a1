#pragma once

#include <gmpxx.h>

#include <string>

#include "orbivertex/errors.hpp"

namespace orbivertex {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) fail(errc::invalid_input, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::invalid_input, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// fractional part <r> = r - floor(r), in [0,1)
inline Rat frac_part(const Rat& r) { return r - Rat(floor_int(r)); }

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool neg = e < 0;
    unsigned long k = neg ? -(unsigned long)e : (unsigned long)e;
    Rat num, den;
    mpz_pow_ui(num.get_num().get_mpz_t(), b.get_num().get_mpz_t(), k);
    num.get_den() = 1;
    mpz_pow_ui(den.get_num().get_mpz_t(), b.get_den().get_mpz_t(), k);
    den.get_den() = 1;
    if (neg) {
        if (b == 0) fail(errc::invalid_input, "0^negative");
        Rat r = den / num;
        return r;
    }
    return num / den;
}

// Parses "a", "-a", or "a/b".
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) fail(errc::invalid_input, "bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) fail(errc::invalid_input, "integer too large");
    return v.get_si();
}

} // namespace orbivertex
