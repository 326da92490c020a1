#include "orbivertex/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace orbivertex {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) fail(errc::invalid_input, "partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            fail(errc::invalid_input, "partition parts must be weakly decreasing");
    }
}

long Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

Partition Partition::conjugate() const {
    std::vector<long> out;
    if (parts.empty()) return Partition{};
    out.resize(parts[0], 0);
    for (long p : parts)
        for (long j = 0; j < p; ++j) out[j]++;
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (long i = 0; i < inner.length(); ++i)
        if (inner.parts[i] > parts[i]) return false;
    return true;
}

long Partition::content_sum() const {
    long s = 0;
    for (long i = 0; i < length(); ++i)
        for (long j = 0; j < parts[i]; ++j) s += j - i;
    return s;
}

long Partition::count_eq(long k) const {
    return std::count(parts.begin(), parts.end(), k);
}

Int aut_order(const Partition& p) {
    Int out = 1;
    long run = 1;
    for (size_t i = 1; i <= p.parts.size(); ++i) {
        if (i < p.parts.size() && p.parts[i] == p.parts[i - 1]) {
            ++run;
        } else {
            Int f;
            mpz_fac_ui(f.get_mpz_t(), run);
            out *= f;
            run = 1;
        }
    }
    return out;
}

Int z_sym(const Partition& p) {
    Int out = aut_order(p);
    for (long part : p.parts) out *= part;
    return out;
}

MultiPartition::MultiPartition(long n, std::vector<Partition> comps)
    : modulus(n), components(std::move(comps)) {
    if (n < 1) fail(errc::invalid_input, "modulus must be >= 1");
    if ((long)components.size() != n)
        fail(errc::invalid_input, "multipartition needs exactly n components");
}

MultiPartition MultiPartition::empty(long n) {
    return MultiPartition(n, std::vector<Partition>(n));
}

long MultiPartition::size() const {
    long s = 0;
    for (const auto& c : components) s += c.size();
    return s;
}

long MultiPartition::total_length() const {
    long s = 0;
    for (const auto& c : components) s += c.length();
    return s;
}

Int aut_order(const MultiPartition& m) {
    Int out = 1;
    for (const auto& c : m.components) out *= aut_order(c);
    return out;
}

Int z_wreath(const MultiPartition& m) {
    Int out = 1;
    for (const auto& c : m.components) {
        out *= z_sym(c);
        Int n_pow;
        mpz_ui_pow_ui(n_pow.get_mpz_t(), m.modulus, c.length());
        out *= n_pow;
    }
    return out;
}

std::vector<long> ColoredDiagram::color_counts() const {
    std::vector<long> counts(modulus, 0);
    for (long i = 0; i < shape.length(); ++i)
        for (long j = 0; j < shape.parts[i]; ++j) counts[color(i, j)]++;
    return counts;
}

namespace {

// beta-numbers with L beads, L multiple of n and L >= l(lambda)
std::vector<long> beta_numbers(const Partition& lambda, long beads) {
    std::vector<long> beta(beads);
    for (long i = 0; i < beads; ++i) beta[i] = lambda.part(i) + (beads - 1 - i);
    return beta;
}

Partition partition_from_beads(std::vector<long> positions) {
    // positions of beads on one runner; sorted descending, subtract staircase
    std::sort(positions.begin(), positions.end(), std::greater<long>());
    long m = (long)positions.size();
    std::vector<long> parts;
    for (long k = 0; k < m; ++k) parts.push_back(positions[k] - (m - 1 - k));
    return Partition(std::move(parts));
}

} // namespace

CoreQuotient diagram_to_quotient(const ColoredDiagram& d) {
    long n = d.modulus;
    long l = d.shape.length();
    long beads = ((l + n - 1) / n + 1) * n;  // multiple of n, > l
    auto beta = beta_numbers(d.shape, beads);

    std::vector<std::vector<long>> runner_positions(n);
    for (long b : beta) runner_positions[b % n].push_back(b / n);

    std::vector<Partition> quotient(n);
    for (long r = 0; r < n; ++r) quotient[r] = partition_from_beads(runner_positions[r]);

    // core: push beads down on each runner, then read the partition back
    std::vector<long> core_beta;
    for (long r = 0; r < n; ++r)
        for (long pos = 0; pos < (long)runner_positions[r].size(); ++pos)
            core_beta.push_back(pos * n + r);
    std::sort(core_beta.begin(), core_beta.end(), std::greater<long>());
    std::vector<long> core_parts;
    long m = (long)core_beta.size();
    for (long k = 0; k < m; ++k) core_parts.push_back(core_beta[k] - (m - 1 - k));
    Partition core(std::move(core_parts));

    return CoreQuotient{std::move(core), MultiPartition(n, std::move(quotient))};
}

ColoredDiagram quotient_to_diagram(const MultiPartition& q) {
    long n = q.modulus;
    long per_runner = 1;
    for (const auto& c : q.components) per_runner = std::max(per_runner, c.length() + 1);

    std::vector<long> beta;
    for (long r = 0; r < n; ++r) {
        // beads of runner r at positions part_k + (per_runner - 1 - k)
        for (long k = 0; k < per_runner; ++k) {
            long pos = q.comp(r).part(k) + (per_runner - 1 - k);
            beta.push_back(pos * n + r);
        }
    }
    std::sort(beta.begin(), beta.end(), std::greater<long>());
    long m = (long)beta.size();
    std::vector<long> parts;
    for (long k = 0; k < m; ++k) parts.push_back(beta[k] - (m - 1 - k));
    return ColoredDiagram(n, Partition(std::move(parts)));
}

bool has_empty_core(const ColoredDiagram& d) {
    return diagram_to_quotient(d).core.empty();
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    // descending recursive enumeration
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> partitions_up_to(long n) {
    std::vector<Partition> out;
    for (long k = 0; k <= n; ++k) {
        auto pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

std::vector<MultiPartition> multipartitions_of(long modulus, long total) {
    std::vector<MultiPartition> out;
    std::vector<Partition> comps(modulus);
    auto rec = [&](auto&& self, long slot, long remaining) -> void {
        if (slot == modulus - 1) {
            for (auto& p : partitions_of(remaining)) {
                comps[slot] = p;
                out.emplace_back(MultiPartition(modulus, comps));
            }
            return;
        }
        for (long s = 0; s <= remaining; ++s) {
            for (auto& p : partitions_of(s)) {
                comps[slot] = p;
                self(self, slot + 1, remaining - s);
            }
        }
    };
    rec(rec, 0, total);
    return out;
}

std::vector<MultiPartition> multipartitions_up_to(long modulus, long total) {
    std::vector<MultiPartition> out;
    for (long k = 0; k <= total; ++k) {
        auto mk = multipartitions_of(modulus, k);
        out.insert(out.end(), mk.begin(), mk.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& rho) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long row, long maxpart) -> void {
        if (row < rho.length()) {
            long hi = std::min(rho.parts[row], maxpart);
            for (long v = hi; v >= 1; --v) {
                cur.push_back(v);
                self(self, row + 1, v);
                cur.pop_back();
            }
        }
        out.emplace_back(Partition(cur));  // this row and everything below zero
    };
    rec(rec, 0, rho.empty() ? 0 : rho.parts[0]);
    return out;
}

} // namespace orbivertex
