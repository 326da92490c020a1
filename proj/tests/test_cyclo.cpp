#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbivertex/cyclotomic.hpp"

using namespace orbivertex;

namespace {

Cyclo xi(long n, long k) { return Cyclo::root_of_unity(n, k); }

Cyclo random_cyclo(std::mt19937& rng, long order) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Cyclo out;
    for (long i = 0; i < euler_phi(order); ++i)
        out += Cyclo(rat(num(rng), den(rng))) * xi(order, i);
    return out;
}

} // namespace

TEST_CASE("cyclotomic polynomial basics") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{Int(-1), Int(1)});
    CHECK(cyclotomic_poly(2) == std::vector<Int>{Int(1), Int(1)});
    CHECK(cyclotomic_poly(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
    CHECK(cyclotomic_poly(6) == std::vector<Int>{Int(1), Int(-1), Int(1)});
    CHECK(cyclotomic_poly(12).size() == 5);  // degree 4
}

TEST_CASE("embedding identities") {
    CHECK(xi(2, 1) == Cyclo(Rat(-1)));
    CHECK(xi(4, 1) * xi(4, 1) == Cyclo(Rat(-1)));
    // vanishing geometric sum for n = 3
    CHECK((xi(3, 0) + xi(3, 1) + xi(3, 2)).is_zero());
    // embedding respects arithmetic: compute in order 3, then promoted to 12
    Cyclo a = xi(3, 1) + Cyclo(Rat(2));
    Cyclo b = xi(3, 2) - Cyclo(rat(1, 2));
    CHECK((a * b).promoted(12) == a.promoted(12) * b.promoted(12));
}

TEST_CASE("is_rational") {
    CHECK((xi(3, 1) + xi(3, 2) + Cyclo(Rat(1))).is_rational());
    CHECK((xi(3, 1) + xi(3, 2) + Cyclo(Rat(1))).rational_value() == 0);
    CHECK(!xi(4, 1).is_rational());
    // 2cos(2pi/5) is irrational
    CHECK(!(xi(5, 1) + xi(5, 4)).is_rational());
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (long order : {3L, 4L, 6L, 8L, 12L}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclo a = random_cyclo(rng, order);
            Cyclo b = random_cyclo(rng, order);
            Cyclo c = random_cyclo(rng, order);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(Rat(1)));
        }
    }
}

TEST_CASE("conjugation is the Galois map") {
    CHECK(xi(4, 1).conj() == xi(4, 3));
    Cyclo z = xi(6, 1) + Cyclo(Rat(2)) * xi(6, 2);
    CHECK(z.conj().conj() == z);
    // z * conj(z) = |z|^2 = 7 here, and z + conj(z) is conjugation-fixed
    CHECK((z * z.conj()) == Cyclo(Rat(7)));
    Cyclo s = z + z.conj();
    CHECK(s.conj() == s);
}

TEST_CASE("root_power principal branch") {
    CHECK(root_power(RootUnity::one(), rat(7, 3)) == Cyclo(Rat(1)));
    // (xi_2)^{1/2} = xi_4
    CHECK(root_power(RootUnity::xi(2, 1), rat(1, 2)) == xi(4, 1));
    // (-xi_4)^2: the principal representative of -xi_4 is xi_4^3; squared: -1
    RootUnity m_xi4 = RootUnity::minus_one().times(RootUnity::xi(4, 1));
    CHECK(root_power(m_xi4, Rat(2)) == Cyclo(Rat(-1)));
}

TEST_CASE("root_power is additive in the exponent for a fixed base") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        RootUnity base = RootUnity::xi(12, num(rng));
        Rat r1 = rat(num(rng), den(rng));
        Rat r2 = rat(num(rng), den(rng));
        CHECK(root_power(base, r1 + r2) == root_power(base, r1) * root_power(base, r2));
    }
}
