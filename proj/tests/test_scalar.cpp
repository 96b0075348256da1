#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidhom/scalar.hpp"

using namespace braidhom;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 5);
    auto poly = [&]() {
        PolyZ p;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) p = p + PolyZ::monomial(Int(coef(rng)), i);
        return p;
    };
    PolyZ n = poly();
    PolyZ d = poly();
    while (d.is_zero()) d = poly();
    return Scalar(n, d);
}

} // namespace

TEST_CASE("polynomial basics") {
    PolyZ a = PolyZ::monomial(Int(1), 2) - PolyZ(1);   // p^2 - 1
    PolyZ b = PolyZ::monomial(Int(1), 1) - PolyZ(1);   // p - 1
    CHECK(PolyZ::gcd(a, b) == b);
    CHECK(a.divexact(b) == PolyZ::monomial(Int(1), 1) + PolyZ(1));
    CHECK(a.str() == "p^2-1");
    CHECK((a * b).eval(Rat(3)) == Rat(16));
    CHECK(PolyZ(0).is_zero());
    CHECK(PolyZ::gcd(PolyZ(6), PolyZ(-4)) == PolyZ(2));
}

TEST_CASE("canonical form and serialization") {
    // q + q^{-1} with q = p^4
    Scalar s = qpow(1) + qpow(-1);
    CHECK(s.str() == "(p^8+1)/p^4");
    CHECK(Scalar::parse("(p^8+1)/p^4") == s);

    Scalar t(PolyZ::monomial(Int(2), 2) - PolyZ(2), PolyZ::monomial(Int(2), 1) - PolyZ(2));
    // (2p^2-2)/(2p-2) = p+1
    CHECK(t.str() == "p+1");
    CHECK(t == Scalar::parse("p+1"));

    // sign normalization of the denominator
    Scalar u(PolyZ(1), PolyZ(0) - PolyZ::monomial(Int(1), 1));
    CHECK(u.str() == "-p^-1");

    CHECK(Scalar(Rat(1, 2)).str() == "1/2");
    CHECK(Scalar(Rat(-3, 6)).str() == "-1/2");
    CHECK(Scalar(0).str() == "0");
}

TEST_CASE("p_power and q helpers") {
    CHECK(Scalar::p_power(4) == qpow(1));
    CHECK(qpow(-2) * qpow(2) == Scalar(1));
    CHECK(qhalf(1) * qhalf(1) == qpow(1));
    CHECK(qq(1).pow(4) == qpow(1));
    CHECK(Scalar::p_power(-3) * Scalar::p_power(3) == Scalar(1));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar(0));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK(a / a == Scalar(1));
        }
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937 rng(77);
    SpecPoint pt;
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        Rat av, bv;
        bool pole = false;
        try {
            av = a.specialize(pt.p0);
            bv = b.specialize(pt.p0);
        } catch (const Error& e) {
            CHECK(e.kind() == "PoleAtPoint");
            pole = true;
        }
        if (pole) continue;
        CHECK((a + b).specialize(pt.p0) == av + bv);
        CHECK((a * b).specialize(pt.p0) == av * bv);
    }
    CHECK(qpow(1).specialize(Rat(2)) == Rat(16));
}

TEST_CASE("errors") {
    CHECK_THROWS_WITH_AS(Scalar(1) / Scalar(0), doctest::Contains("DivisionByZero"), Error);
    Scalar pole(PolyZ(1), PolyZ::monomial(Int(1), 1) - PolyZ(2));  // 1/(p-2)
    CHECK_THROWS_WITH_AS(pole.specialize(Rat(2)), doctest::Contains("PoleAtPoint"), Error);
    CHECK_THROWS_AS(Scalar::parse("q^2"), Error);
    CHECK_THROWS_AS(Scalar::parse("p^2 +"), Error);
}

TEST_CASE("parse round trip") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK(Scalar::parse("-(p^2-1)/(1-p)") == Scalar::parse("p+1"));
    CHECK(Scalar::parse("p^-4") == qpow(-1));
    CHECK(Scalar::parse("3") == Scalar(3));
}
