#pragma once

#include <compare>
#include <vector>

#include "orbivertex/errors.hpp"
#include "orbivertex/rational.hpp"

namespace orbivertex {

// Weakly decreasing sequence of positive integers; the empty partition is {}.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p);

    long size() const;                  // |tau|
    long length() const { return (long)parts.size(); }
    long part(long i) const { return i < length() ? parts[i] : 0; }
    bool empty() const { return parts.empty(); }
    Partition conjugate() const;
    bool contains(const Partition& inner) const;  // inner_i <= this_i for all i
    // sum of j - i over cells (i,j), 0-indexed
    long content_sum() const;
    // multiplicity vector bookkeeping
    long count_eq(long k) const;

    auto operator<=>(const Partition&) const = default;
};

// product over k of m_k! (permutations of equal parts)
Int aut_order(const Partition& p);
// symmetric-group centralizer order prod_k k^{m_k} m_k!
Int z_sym(const Partition& p);

struct MultiPartition {
    long modulus = 1;
    std::vector<Partition> components;

    MultiPartition() = default;
    MultiPartition(long n, std::vector<Partition> comps);
    static MultiPartition empty(long n);

    long size() const;
    long total_length() const;
    const Partition& comp(long k) const { return components[k]; }

    auto operator<=>(const MultiPartition&) const = default;
};

Int aut_order(const MultiPartition& m);
// wreath-product centralizer order: prod_j z_sym(mu^j) * n^{l(mu^j)}
Int z_wreath(const MultiPartition& m);

// Young diagram with modulus-n cell colors (j - i) mod n, 0-indexed rows/cols.
struct ColoredDiagram {
    long modulus = 1;
    Partition shape;

    ColoredDiagram() = default;
    ColoredDiagram(long n, Partition s) : modulus(n), shape(std::move(s)) {
        if (n < 1) fail(errc::invalid_input, "modulus must be >= 1");
    }

    long color(long i, long j) const {
        long c = (j - i) % modulus;
        return c < 0 ? c + modulus : c;
    }
    long size() const { return shape.size(); }
    std::vector<long> color_counts() const;
};

// Abacus decomposition. Convention (pinned by the Lemma-1 and box-oracle
// acceptance tests): beta-numbers beta_i = lambda_i + (L-1-i) with the bead
// count L a multiple of n; bead with value beta sits on runner (beta mod n)
// at position floor(beta/n); quotient slot k reads runner k; the core is
// obtained by pushing all beads down.
struct CoreQuotient {
    Partition core;
    MultiPartition quotient;
};

CoreQuotient diagram_to_quotient(const ColoredDiagram& d);
// Inverse on empty-core diagrams: unique diagram with n-core empty and the
// given n-quotient.
ColoredDiagram quotient_to_diagram(const MultiPartition& q);

bool has_empty_core(const ColoredDiagram& d);

// enumeration helpers
std::vector<Partition> partitions_of(long n);
std::vector<Partition> partitions_up_to(long n);
std::vector<MultiPartition> multipartitions_of(long modulus, long total);
std::vector<MultiPartition> multipartitions_up_to(long modulus, long total);

// all sub-partitions omega <= rho (cellwise containment)
std::vector<Partition> subpartitions(const Partition& rho);

} // namespace orbivertex
