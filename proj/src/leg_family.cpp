#include "orbivertex/leg_family.hpp"

#include <algorithm>

namespace orbivertex {

namespace {

// A triple's parts as a flat multiset of (axis, value). Axis 0/1 are the
// ordinary legs, axis 2+k is color k of mu.
struct Item {
    long axis;
    long value;
    auto operator<=>(const Item&) const = default;
};

std::vector<Item> items_of(const LegTriple& t) {
    std::vector<Item> out;
    for (long p : t.tau_plus.parts) out.push_back({0, p});
    for (long p : t.tau_minus.parts) out.push_back({1, p});
    for (long k = 0; k < t.mu.modulus; ++k)
        for (long p : t.mu.comp(k).parts) out.push_back({2 + k, p});
    std::sort(out.begin(), out.end());
    return out;
}

LegTriple triple_of(const std::vector<Item>& items, long modulus) {
    std::vector<long> plus, minus;
    std::vector<std::vector<long>> mu(modulus);
    for (const auto& it : items) {
        if (it.axis == 0)
            plus.push_back(it.value);
        else if (it.axis == 1)
            minus.push_back(it.value);
        else
            mu[it.axis - 2].push_back(it.value);
    }
    auto desc = [](std::vector<long>& v) { std::sort(v.rbegin(), v.rend()); };
    desc(plus);
    desc(minus);
    std::vector<Partition> comps;
    for (auto& m : mu) {
        desc(m);
        comps.emplace_back(Partition(m));
    }
    return LegTriple{Partition(plus), Partition(minus), MultiPartition(modulus, comps)};
}

// distinct items with multiplicities
std::vector<std::pair<Item, long>> grouped(const std::vector<Item>& items) {
    std::vector<std::pair<Item, long>> out;
    for (const auto& it : items) {
        if (!out.empty() && out.back().first == it)
            out.back().second++;
        else
            out.push_back({it, 1});
    }
    return out;
}

// all sub-multisets given as multiplicity vectors; filter(first_mult) demands
// the first distinct item appear with multiplicity >= 1
void for_each_submultiset(const std::vector<std::pair<Item, long>>& g, bool require_first,
                          const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> mult(g.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == g.size()) {
            fn(mult);
            return;
        }
        long lo = (i == 0 && require_first) ? 1 : 0;
        for (long m = lo; m <= g[i].second; ++m) {
            mult[i] = m;
            self(self, i + 1);
        }
        mult[i] = 0;
    };
    rec(rec, 0);
}

std::vector<Item> expand(const std::vector<std::pair<Item, long>>& g,
                         const std::vector<long>& mult) {
    std::vector<Item> out;
    for (size_t i = 0; i < g.size(); ++i)
        for (long k = 0; k < mult[i]; ++k) out.push_back(g[i].first);
    return out;
}

std::vector<Item> complement(const std::vector<std::pair<Item, long>>& g,
                             const std::vector<long>& mult) {
    std::vector<Item> out;
    for (size_t i = 0; i < g.size(); ++i)
        for (long k = 0; k < g[i].second - mult[i]; ++k) out.push_back(g[i].first);
    return out;
}

} // namespace

std::vector<LegTriple> sub_triples(const LegTriple& t) {
    auto items = items_of(t);
    auto g = grouped(items);
    std::vector<LegTriple> out;
    for_each_submultiset(g, false, [&](const std::vector<long>& mult) {
        out.push_back(triple_of(expand(g, mult), t.mu.modulus));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// D(S) = (1/m_S(x0)) sum_{B contains x0} m_B(x0) C(B) D(S \ B)
// where x0 is the first distinct item of S. Recursion shared by both
// directions; `solve_connected` flips which side is unknown.
struct Transformer {
    long modulus;
    const LegSeriesFamily* given;
    LegSeriesFamily known_conn;
    LegSeriesFamily known_disc;
    bool solving_connected;

    PuiseuxSeries conn(const LegTriple& t) {
        if (auto it = known_conn.find(t); it != known_conn.end()) return it->second;
        PuiseuxSeries val;
        if (solving_connected) {
            // C(S) = D(S) - (1/m) sum_{B strictly inside, B ni x0} m_B(x0) C(B) D(S\B)
            val = disc_given(t);
            auto items = items_of(t);
            auto g = grouped(items);
            long msx0 = g.empty() ? 0 : g[0].second;
            if (!g.empty()) {
                PuiseuxSeries acc;
                for_each_submultiset(g, true, [&](const std::vector<long>& mult) {
                    auto bitems = expand(g, mult);
                    if ((long)bitems.size() == (long)items.size()) return;  // B == S
                    LegTriple b = triple_of(bitems, modulus);
                    LegTriple rest = triple_of(complement(g, mult), modulus);
                    PuiseuxSeries cb = conn(b);
                    if (cb.is_zero()) return;
                    PuiseuxSeries dr = disc(rest);
                    if (dr.is_zero()) return;
                    acc += cb.scaled(Cyclo(Rat(mult[0]))) * dr;
                });
                if (!acc.is_zero()) val = val - acc.scaled(Cyclo(rat(1, msx0)));
            }
        } else {
            val = given_value(*given, t);
        }
        known_conn.emplace(t, val);
        return val;
    }

    PuiseuxSeries disc(const LegTriple& t) {
        if (t.empty()) return PuiseuxSeries::one();
        if (auto it = known_disc.find(t); it != known_disc.end()) return it->second;
        PuiseuxSeries val;
        if (solving_connected) {
            val = disc_given(t);
        } else {
            auto items = items_of(t);
            auto g = grouped(items);
            long msx0 = g[0].second;
            PuiseuxSeries acc;
            for_each_submultiset(g, true, [&](const std::vector<long>& mult) {
                LegTriple b = triple_of(expand(g, mult), modulus);
                LegTriple rest = triple_of(complement(g, mult), modulus);
                PuiseuxSeries cb = conn(b);
                if (cb.is_zero()) return;
                PuiseuxSeries dr = disc(rest);
                if (dr.is_zero()) return;
                acc += cb.scaled(Cyclo(Rat(mult[0]))) * dr;
            });
            val = acc.scaled(Cyclo(rat(1, msx0)));
        }
        known_disc.emplace(t, val);
        return val;
    }

    PuiseuxSeries disc_given(const LegTriple& t) {
        if (t.empty()) return PuiseuxSeries::one();
        return given_value(*given, t);
    }

    static PuiseuxSeries given_value(const LegSeriesFamily& f, const LegTriple& t) {
        auto it = f.find(t);
        return it == f.end() ? PuiseuxSeries() : it->second;
    }
};

} // namespace

LegSeriesFamily disconnected_from_connected(const LegSeriesFamily& connected,
                                            const std::vector<LegTriple>& wanted) {
    long modulus = 1;
    if (!connected.empty()) modulus = connected.begin()->first.mu.modulus;
    if (!wanted.empty()) modulus = wanted.front().mu.modulus;
    Transformer tr{modulus, &connected, {}, {}, false};
    LegSeriesFamily out;
    for (const auto& t : wanted) out[t] = tr.disc(t);
    return out;
}

LegSeriesFamily connected_from_disconnected(const LegSeriesFamily& disconnected) {
    long modulus = 1;
    if (!disconnected.empty()) modulus = disconnected.begin()->first.mu.modulus;
    Transformer tr{modulus, &disconnected, {}, {}, true};
    LegSeriesFamily out;
    for (const auto& [t, s] : disconnected)
        if (!t.empty()) out[t] = tr.conn(t);
    return out;
}

} // namespace orbivertex
