#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbivertex/rational.hpp"

namespace orbivertex {

// Variable universe: orbifold colors q_0..q_{n-1}, the smooth/glue variable q,
// edge variables v_1..v_{n-1}, the genus variable u, insertion variables
// x_1..x_{n-1}, divisor variables t_1..t_{n-1}.
enum class VarKind : uint8_t { Q = 0, SQ = 1, V = 2, U = 3, X = 4, T = 5 };

struct VarId {
    VarKind kind;
    int32_t index;

    friend bool operator==(const VarId&, const VarId&) = default;
    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId var_q(int32_t c) { return {VarKind::Q, c}; }
inline VarId var_sq() { return {VarKind::SQ, 0}; }
inline VarId var_v(int32_t i) { return {VarKind::V, i}; }
inline VarId var_u() { return {VarKind::U, 0}; }
inline VarId var_x(int32_t k) { return {VarKind::X, k}; }
inline VarId var_t(int32_t i) { return {VarKind::T, i}; }

std::string var_name(VarId v);
VarId var_from_name(const std::string& name);

// Gradings used for truncation windows: total q-degree (Q and SQ variables),
// u-degree, total x-degree, total v-degree.
enum Grading : int { GRADE_Q = 0, GRADE_U = 1, GRADE_X = 2, GRADE_V = 3 };
constexpr int kNumGradings = 4;

inline int grading_of(VarKind k) {
    switch (k) {
        case VarKind::Q:
        case VarKind::SQ: return GRADE_Q;
        case VarKind::U: return GRADE_U;
        case VarKind::X: return GRADE_X;
        case VarKind::V: return GRADE_V;
        case VarKind::T: return GRADE_X;  // t-forms are never windowed; harmless
    }
    return GRADE_Q;
}

// Monomial with exact rational exponents; exponent map kept sorted, no zeros.
class ExpMonomial {
public:
    ExpMonomial() = default;
    static ExpMonomial one() { return {}; }
    static ExpMonomial var(VarId v, Rat e = Rat(1));

    const std::vector<std::pair<VarId, Rat>>& exps() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    Rat exponent(VarId v) const;
    Rat degree(int grading) const;

    ExpMonomial times(const ExpMonomial& o) const;
    ExpMonomial pow(const Rat& e) const;
    ExpMonomial inverse() const { return pow(Rat(-1)); }

    // canonical total order: gradings (q, u, x, v) then lexicographic on exponents
    static int cmp(const ExpMonomial& a, const ExpMonomial& b);
    friend bool operator==(const ExpMonomial&, const ExpMonomial&) = default;

    std::string str() const;

private:
    std::vector<std::pair<VarId, Rat>> exps_;
};

struct MonoLess {
    bool operator()(const ExpMonomial& a, const ExpMonomial& b) const {
        return ExpMonomial::cmp(a, b) < 0;
    }
};

} // namespace orbivertex
