#include "orbivertex/characters.hpp"

#include <algorithm>
#include <map>

namespace orbivertex {

namespace {

// beta-set of a partition (strictly decreasing), with exactly l(lambda) beads
// plus optional padding
std::vector<long> beta_set(const Partition& p, long beads) {
    std::vector<long> b(beads);
    for (long i = 0; i < beads; ++i) b[i] = p.part(i) + (beads - 1 - i);
    std::sort(b.begin(), b.end());
    return b;
}

Partition partition_from_beta(std::vector<long> b) {
    std::sort(b.rbegin(), b.rend());
    long m = (long)b.size();
    std::vector<long> parts;
    for (long i = 0; i < m; ++i) parts.push_back(b[i] - (m - 1 - i));
    return Partition(std::move(parts));
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r means
// replacing some b with b - r (when b - r is free); the sign counts the beads
// strictly between b - r and b.
Int mn_recurse(std::vector<long> beta, const std::vector<long>& parts, size_t idx,
               std::map<std::pair<std::vector<long>, size_t>, Int>& memo) {
    if (idx == parts.size()) return 1;
    auto key = std::make_pair(beta, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long r = parts[idx];
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        long b = beta[i];
        if (b < r) continue;
        long target = b - r;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        long crossed = 0;
        for (long x : beta)
            if (x > target && x < b) ++crossed;
        std::vector<long> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end());
        Int sub = mn_recurse(std::move(next), parts, idx + 1, memo);
        if (crossed % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo.emplace(std::make_pair(std::move(beta), idx), total);
    return total;
}

} // namespace

Int char_sym(const Partition& lambda, const Partition& tau) {
    if (lambda.size() != tau.size()) fail(errc::size_mismatch, "char_sym needs |lambda| = |tau|");
    if (lambda.size() == 0) return 1;
    std::vector<long> beta = beta_set(lambda, lambda.length());
    std::map<std::pair<std::vector<long>, size_t>, Int> memo;
    return mn_recurse(std::move(beta), tau.parts, 0, memo);
}

Int dim_sym(const Partition& lambda) {
    if (lambda.size() == 0) return 1;
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), lambda.size());
    Int hooks = 1;
    Partition conj = lambda.conjugate();
    for (long i = 0; i < lambda.length(); ++i)
        for (long j = 0; j < lambda.parts[i]; ++j)
            hooks *= (lambda.parts[i] - j) + (conj.parts[j] - i) - 1;
    return fact / hooks;
}

Int char_rect(const ColoredDiagram& d) {
    long n = d.modulus;
    if (d.size() % n != 0) fail(errc::size_mismatch, "char_rect needs |diagram| divisible by n");
    long m = d.size() / n;
    std::vector<long> cls(m, n);
    return char_sym(d.shape, Partition(std::move(cls)));
}

Int dim_wreath(const MultiPartition& lambda) {
    Int multinomial;
    mpz_fac_ui(multinomial.get_mpz_t(), lambda.size());
    for (const auto& c : lambda.components) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), c.size());
        multinomial /= f;
    }
    Int out = multinomial;
    for (const auto& c : lambda.components) out *= dim_sym(c);
    return out;
}

Cyclo char_wreath(const MultiPartition& lambda, const MultiPartition& mu) {
    if (lambda.modulus != mu.modulus) fail(errc::modulus_mismatch, "char_wreath moduli differ");
    if (lambda.size() != mu.size()) fail(errc::size_mismatch, "char_wreath needs |lambda| = |mu|");
    long n = lambda.modulus;
    long total_parts = mu.total_length();

    // flat list of (slot j, part size)
    std::vector<std::pair<long, long>> parts;
    for (long j = 0; j < n; ++j)
        for (long p : mu.comp(j).parts) parts.push_back({j, p});

    std::vector<long> want(n);
    for (long c = 0; c < n; ++c) want[c] = lambda.comp(c).size();

    Int aut_mu = aut_order(mu);
    Rat zmu = Rat(z_wreath(mu));
    Rat npow = pow_rat(Rat(n), total_parts);

    Cyclo total;
    std::vector<long> coloring(parts.size(), 0);
    std::vector<std::vector<long>> nu_parts(n);
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == parts.size()) {
            // nu determined; sizes must match lambda componentwise
            std::vector<Partition> nu(n);
            for (long c = 0; c < n; ++c) {
                std::vector<long> v = nu_parts[c];
                std::sort(v.rbegin(), v.rend());
                nu[c] = Partition(v);
                if (nu[c].size() != want[c]) return;
            }
            long xi_exp = 0;
            for (size_t i = 0; i < parts.size(); ++i) xi_exp += parts[i].first * coloring[i];
            Cyclo term = Cyclo::root_of_unity(n, -xi_exp);
            Rat scale(1);
            Int aut_nu = 1;
            for (long c = 0; c < n; ++c) aut_nu *= aut_order(nu[c]);
            scale *= rat(aut_nu, aut_mu);
            for (long c = 0; c < n; ++c) {
                Int chi = char_sym(lambda.comp(c), nu[c]);
                if (chi == 0) return;
                scale *= rat(chi, z_sym(nu[c]));
            }
            total += term * Cyclo(scale);
            return;
        }
        for (long c = 0; c < n; ++c) {
            coloring[idx] = c;
            nu_parts[c].push_back(parts[idx].second);
            self(self, idx + 1);
            nu_parts[c].pop_back();
        }
    };
    rec(rec, 0);
    return total * Cyclo(zmu / npow);
}

} // namespace orbivertex
