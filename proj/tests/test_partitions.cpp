#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "orbivertex/partitions.hpp"

using namespace orbivertex;

namespace {

Partition P(std::vector<long> v) { return Partition(std::move(v)); }

// --- brute-force wreath group oracle ---
// elements of Z_n wr S_m: a permutation plus a color per letter
struct WreathElement {
    std::vector<long> perm;
    std::vector<long> colors;
    bool operator==(const WreathElement&) const = default;
};

WreathElement compose(const WreathElement& a, const WreathElement& b, long n) {
    // (a*b)(x) = a(b(x)); colors multiply along the action
    long m = (long)a.perm.size();
    WreathElement out;
    out.perm.resize(m);
    out.colors.resize(m);
    for (long x = 0; x < m; ++x) {
        out.perm[x] = a.perm[b.perm[x]];
        out.colors[x] = (a.colors[b.perm[x]] + b.colors[x]) % n;
    }
    return out;
}

std::vector<WreathElement> all_elements(long n, long m) {
    std::vector<std::vector<long>> perms;
    std::vector<long> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<WreathElement> out;
    std::vector<long> colors(m, 0);
    auto rec = [&](auto&& self, long idx) -> void {
        if (idx == m) {
            for (const auto& q : perms) out.push_back({q, colors});
            return;
        }
        for (long c = 0; c < n; ++c) {
            colors[idx] = c;
            self(self, idx + 1);
        }
        colors[idx] = 0;
    };
    rec(rec, 0);
    return out;
}

// conjugacy class datum: multiset of (cycle length, color sum) pairs
MultiPartition class_of(const WreathElement& e, long n) {
    long m = (long)e.perm.size();
    std::vector<bool> seen(m, false);
    std::vector<std::vector<long>> comps(n);
    for (long x = 0; x < m; ++x) {
        if (seen[x]) continue;
        long len = 0, csum = 0, y = x;
        do {
            seen[y] = true;
            csum = (csum + e.colors[y]) % n;
            y = e.perm[y];
            ++len;
        } while (y != x);
        comps[csum].push_back(len);
    }
    std::vector<Partition> parts;
    for (auto& v : comps) {
        std::sort(v.rbegin(), v.rend());
        parts.emplace_back(Partition(v));
    }
    return MultiPartition(n, std::move(parts));
}

} // namespace

TEST_CASE("conjugate") {
    CHECK(P({}).conjugate() == P({}));
    CHECK(P({1, 1, 1}).conjugate() == P({3}));
    // cell-by-cell transpose oracle for (3,1)
    Partition a = P({3, 1});
    std::map<std::pair<long, long>, bool> cells;
    for (long i = 0; i < a.length(); ++i)
        for (long j = 0; j < a.parts[i]; ++j) cells[{j, i}] = true;
    std::vector<long> rows;
    for (long i = 0;; ++i) {
        long cnt = 0;
        while (cells.count({i, cnt})) ++cnt;
        if (cnt == 0) break;
        rows.push_back(cnt);
    }
    CHECK(a.conjugate() == Partition(rows));
    CHECK(a.conjugate() == P({2, 1, 1}));
    // involution and size preservation over all |tau| <= 6
    for (const auto& p : partitions_up_to(6)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
}

TEST_CASE("z_order against the wreath brute force") {
    CHECK(z_sym(P({1, 1})) == 2);
    CHECK(z_wreath(MultiPartition(2, {P({1}), P({})})) == 2);
    CHECK(z_wreath(MultiPartition(2, {P({}), P({2})})) == 4);
    for (long n = 1; n <= 2; ++n) {
        for (long m = 1; m <= 3; ++m) {
            auto elems = all_elements(n, m);
            std::map<MultiPartition, long> class_sizes;
            for (const auto& e : elems) class_sizes[class_of(e, n)]++;
            long order = (long)elems.size();
            for (const auto& [cls, size] : class_sizes) {
                // |class| * |centralizer| = |G|
                CHECK(z_wreath(cls) == Int(order / size));
            }
        }
    }
}

TEST_CASE("aut_order") {
    CHECK(aut_order(MultiPartition::empty(2)) == 1);
    CHECK(aut_order(P({2, 2, 1})) == 2);
    CHECK(aut_order(MultiPartition(2, {P({1, 1}), P({1})})) == 2);
}

TEST_CASE("abacus round trip") {
    // pinned small cases
    CHECK(quotient_to_diagram(MultiPartition(1, {P({3, 1})})).shape == P({3, 1}));
    CHECK(quotient_to_diagram(MultiPartition(2, {P({1}), P({})})).shape == P({1, 1}));
    CHECK(quotient_to_diagram(MultiPartition(2, {P({}), P({1})})).shape == P({2}));

    // (2,1) is a genuine 2-core
    auto cq = diagram_to_quotient(ColoredDiagram(2, P({2, 1})));
    CHECK(cq.core == P({2, 1}));
    CHECK(cq.quotient == MultiPartition::empty(2));

    // (2,1,1) has empty 2-core and quotient (empty, (1,1))
    auto cq2 = diagram_to_quotient(ColoredDiagram(2, P({2, 1, 1})));
    CHECK(cq2.core.empty());
    CHECK(cq2.quotient == MultiPartition(2, {P({}), P({1, 1})}));

    for (long n = 1; n <= 4; ++n) {
        for (const auto& q : multipartitions_up_to(n, 6)) {
            ColoredDiagram d = quotient_to_diagram(q);
            CHECK(d.size() == n * q.size());
            auto back = diagram_to_quotient(d);
            CHECK(back.core.empty());
            CHECK(back.quotient == q);
        }
    }
}

TEST_CASE("color balance for empty-core diagrams") {
    for (long n = 2; n <= 3; ++n) {
        for (long m = 0; m * n <= 9; ++m) {
            for (const auto& shape : partitions_of(n * m)) {
                ColoredDiagram d(n, shape);
                auto cq = diagram_to_quotient(d);
                if (!cq.core.empty()) continue;
                CHECK(cq.quotient.size() == m);
                for (long c : d.color_counts()) CHECK(c == m);
            }
        }
    }
}

TEST_CASE("size bookkeeping: |core| + n|quotient| = |diagram|") {
    for (const auto& shape : partitions_up_to(9)) {
        ColoredDiagram d(3, shape);
        auto cq = diagram_to_quotient(d);
        CHECK(cq.core.size() + 3 * cq.quotient.size() == shape.size());
    }
}

TEST_CASE("subpartitions") {
    auto subs = subpartitions(P({2, 1}));
    CHECK(subs.size() == 5);  // {}, (1), (2), (1,1), (2,1)
    for (const auto& s : subs) CHECK(P({2, 1}).contains(s));
}
