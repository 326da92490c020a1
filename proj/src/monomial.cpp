#include "orbivertex/monomial.hpp"

#include <algorithm>

namespace orbivertex {

std::string var_name(VarId v) {
    switch (v.kind) {
        case VarKind::Q: return "q" + std::to_string(v.index);
        case VarKind::SQ: return "q";
        case VarKind::V: return "v" + std::to_string(v.index);
        case VarKind::U: return "u";
        case VarKind::X: return "x" + std::to_string(v.index);
        case VarKind::T: return "t" + std::to_string(v.index);
    }
    return "?";
}

VarId var_from_name(const std::string& name) {
    if (name.empty()) fail(errc::invalid_input, "empty variable name");
    if (name == "q") return var_sq();
    if (name == "u") return var_u();
    char head = name[0];
    long idx = 0;
    try {
        idx = std::stol(name.substr(1));
    } catch (...) {
        fail(errc::invalid_input, "bad variable name: " + name);
    }
    switch (head) {
        case 'q': return var_q((int32_t)idx);
        case 'v': return var_v((int32_t)idx);
        case 'x': return var_x((int32_t)idx);
        case 't': return var_t((int32_t)idx);
        default: fail(errc::invalid_input, "bad variable name: " + name);
    }
}

ExpMonomial ExpMonomial::var(VarId v, Rat e) {
    ExpMonomial m;
    if (e != 0) m.exps_.push_back({v, std::move(e)});
    return m;
}

Rat ExpMonomial::exponent(VarId v) const {
    for (const auto& [id, e] : exps_)
        if (id == v) return e;
    return Rat(0);
}

Rat ExpMonomial::degree(int grading) const {
    Rat d(0);
    for (const auto& [id, e] : exps_)
        if (grading_of(id.kind) == grading) d += e;
    return d;
}

ExpMonomial ExpMonomial::times(const ExpMonomial& o) const {
    ExpMonomial out;
    out.exps_.reserve(exps_.size() + o.exps_.size());
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
            out.exps_.push_back(exps_[i++]);
        } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
            out.exps_.push_back(o.exps_[j++]);
        } else {
            Rat e = exps_[i].second + o.exps_[j].second;
            if (e != 0) out.exps_.push_back({exps_[i].first, std::move(e)});
            ++i;
            ++j;
        }
    }
    return out;
}

ExpMonomial ExpMonomial::pow(const Rat& e) const {
    ExpMonomial out;
    if (e == 0) return out;
    out.exps_ = exps_;
    for (auto& [id, ex] : out.exps_) ex *= e;
    return out;
}

int ExpMonomial::cmp(const ExpMonomial& a, const ExpMonomial& b) {
    for (int g = 0; g < kNumGradings; ++g) {
        Rat da = a.degree(g), db = b.degree(g);
        int c = ::cmp(da, db);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    size_t n = std::min(a.exps_.size(), b.exps_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.exps_[i].first != b.exps_[i].first)
            return a.exps_[i].first < b.exps_[i].first ? -1 : 1;
        int c = ::cmp(a.exps_[i].second, b.exps_[i].second);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.exps_.size() != b.exps_.size()) return a.exps_.size() < b.exps_.size() ? -1 : 1;
    return 0;
}

std::string ExpMonomial::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [id, e] : exps_) {
        if (!s.empty()) s += "*";
        s += var_name(id);
        if (e != 1) s += "^(" + rat_to_string(e) + ")";
    }
    return s;
}

} // namespace orbivertex
