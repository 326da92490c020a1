#include "orbivertex/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace orbivertex {

namespace {

// polynomial helpers, coefficients ascending

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void poly_trim(std::vector<Rat>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic m
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& m) {
    poly_trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rat c = a.back();
        size_t shift = a.size() - 1 - dm;
        if (c != 0)
            for (size_t i = 0; i < dm; ++i) a[shift + i] -= c * m[i];
        a.pop_back();
        poly_trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

std::vector<Rat> poly_scale(std::vector<Rat> a, const Rat& c) {
    for (auto& x : a) x *= c;
    return a;
}

std::vector<Rat> poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// quotient of a by b (exact or truncated euclidean step), b nonzero
std::vector<Rat> poly_divmod(std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> q;
    poly_trim(a);
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, Rat(0));
    Rat lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    return q;
}

std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}

std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Int> compute_cyclotomic(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division.
    std::vector<Rat> p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phid = cyclotomic_poly(d);
        std::vector<Rat> divisor(phid.size());
        for (size_t i = 0; i < phid.size(); ++i) divisor[i] = Rat(phid[i]);
        std::vector<Rat> rem = p;
        std::vector<Rat> q = poly_divmod(rem, divisor);
        p = q;
    }
    std::vector<Int> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (!is_integer(p[i])) fail(errc::invalid_input, "cyclotomic polynomial not integral");
        out[i] = p[i].get_num();
    }
    return out;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

} // namespace

const std::vector<Int>& cyclotomic_poly(long n) {
    {
        std::lock_guard<std::mutex> lock(phi_mutex());
        auto it = phi_cache().find(n);
        if (it != phi_cache().end()) return it->second;
    }
    // Compute outside the lock to allow the recursion; recompute race is harmless.
    if (n < 1) fail(errc::invalid_input, "cyclotomic order must be >= 1");
    std::vector<Int> value;
    if (n == 1) {
        value = {Int(-1), Int(1)};
    } else {
        value = compute_cyclotomic(n);
    }
    std::lock_guard<std::mutex> lock(phi_mutex());
    return phi_cache().emplace(n, std::move(value)).first->second;
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Cyclo Cyclo::from_poly(long order, std::vector<Rat> poly) {
    const auto& phi = cyclotomic_poly(order);
    std::vector<Rat> m(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) m[i] = Rat(phi[i]);
    auto r = poly_mod(std::move(poly), m);
    r.resize(phi.size() - 1, Rat(0));
    return Cyclo(order, std::move(r));
}

Cyclo Cyclo::root_of_unity(long order, long exponent) {
    if (order < 1) fail(errc::invalid_input, "root order must be >= 1");
    long e = exponent % order;
    if (e < 0) e += order;
    std::vector<Rat> poly(e + 1, Rat(0));
    poly[e] = 1;
    return from_poly(order, std::move(poly));
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) fail(errc::invalid_input, "cyclotomic value is not rational");
    return coords_[0];
}

Cyclo Cyclo::promoted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) fail(errc::incompatible_order, "order does not divide target");
    long step = new_order / order_;
    std::vector<Rat> poly;
    poly.resize((coords_.size() - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < coords_.size(); ++i) poly[i * step] = coords_[i];
    return from_poly(new_order, std::move(poly));
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    long n = lcm_long(a.order_, b.order_);
    Cyclo x = a.promoted(n), y = b.promoted(n);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long n = lcm_long(a.order_, b.order_);
    Cyclo x = a.promoted(n), y = b.promoted(n);
    std::vector<Rat> poly = poly_mul(x.coords_, y.coords_);
    return Cyclo::from_poly(n, std::move(poly));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
    long n = lcm_long(a.order_, b.order_);
    Cyclo x = a.promoted(n), y = b.promoted(n);
    return x.coords_ == y.coords_;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) fail(errc::invalid_input, "division by zero");
    // extended euclid for gcd(f, Phi_N) = 1 in Q[x]
    const auto& phi = cyclotomic_poly(order_);
    std::vector<Rat> r0(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rat(phi[i]);
    std::vector<Rat> r1 = coords_;
    poly_trim(r1);
    std::vector<Rat> s0, s1{Rat(1)};
    // invariants: r0 = s0*f mod Phi, r1 = s1*f mod Phi
    while (true) {
        poly_trim(r1);
        if (r1.empty()) fail(errc::invalid_input, "non-invertible cyclotomic element");
        if (r1.size() == 1) {
            return from_poly(order_, poly_scale(std::move(s1), Rat(1) / r1[0]));
        }
        std::vector<Rat> rem = r0;
        std::vector<Rat> q = poly_divmod(rem, r1);
        std::vector<Rat> s2 = poly_sub(std::move(s0), poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

Cyclo Cyclo::conj() const {
    // substitute xi -> xi^{N-1}
    std::vector<Rat> poly;
    if (order_ == 1) return *this;
    poly.assign((coords_.size() - 1) * (order_ - 1) + 1, Rat(0));
    for (size_t i = 0; i < coords_.size(); ++i) poly[i * (order_ - 1)] += coords_[i];
    return from_poly(order_, std::move(poly));
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc(Rat(1));
    Cyclo base = *this;
    unsigned long k = (unsigned long)e;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

int Cyclo::cmp(const Cyclo& a, const Cyclo& b) {
    long n = lcm_long(a.order_, b.order_);
    Cyclo x = a.promoted(n), y = b.promoted(n);
    for (size_t i = 0; i < x.coords_.size(); ++i) {
        int c = ::cmp(x.coords_[i], y.coords_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

RootUnity RootUnity::xi(long order, long exp) {
    if (order < 1) fail(errc::invalid_input, "root order must be >= 1");
    long e = exp % order;
    if (e < 0) e += order;
    long g = std::gcd(order, e == 0 ? order : e);
    return {order / g, e / g};
}

RootUnity RootUnity::times(const RootUnity& o) const {
    long n = lcm_long(order, o.order);
    long e = exp * (n / order) + o.exp * (n / o.order);
    return xi(n, e);
}

RootUnity RootUnity::pow(long e) const {
    // exponent reduced mod order; principal representative irrelevant for integer powers
    long r = (exp % order) * (e % order) % order;
    return xi(order, r);
}

RootUnity root_power_exact(const RootUnity& base, const Rat& r) {
    long a = base.exp % base.order;
    if (a < 0) a += base.order;
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        fail(errc::invalid_input, "root_power exponent too large");
    long num = r.get_num().get_si();
    long den = r.get_den().get_si();
    long new_order = base.order * den;
    long e = ((a % new_order) * (num % new_order)) % new_order;
    if (e < 0) e += new_order;
    return RootUnity::xi(new_order, e);
}

Cyclo root_power(const RootUnity& base, const Rat& r) {
    return root_power_exact(base, r).to_cyclo();
}

} // namespace orbivertex
