#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "braidhom/error.hpp"

namespace braidhom {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z in the deformation parameter p,
// coefficients stored low degree first, no trailing zeros.
class PolyZ {
public:
    PolyZ() = default;
    PolyZ(long c) { if (c) c_.push_back(Int(c)); }
    explicit PolyZ(const Int& c) { if (c != 0) c_.push_back(c); }

    static PolyZ monomial(const Int& c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    int low_degree() const;  // valuation at p; degree()+1 junk for 0, callers guard
    int term_count() const;
    const Int& lead() const { return c_.back(); }
    Int coeff(int d) const;

    PolyZ operator-() const;
    PolyZ operator+(const PolyZ& o) const;
    PolyZ operator-(const PolyZ& o) const;
    PolyZ operator*(const PolyZ& o) const;
    bool operator==(const PolyZ& o) const { return c_ == o.c_; }

    PolyZ shifted(int by) const;  // multiply by p^by, by >= 0
    Int content() const;          // gcd of coefficients, nonnegative
    PolyZ divexact_int(const Int& d) const;
    PolyZ divexact(const PolyZ& d) const;  // exact division, throws if inexact
    static PolyZ gcd(const PolyZ& a, const PolyZ& b);  // content-inclusive, lead > 0

    Rat eval(const Rat& x) const;
    std::string str() const;  // descending powers, e.g. "p^8+1"

private:
    void trim();
    std::vector<Int> c_;
};

// Exact scalar field Q(p): ratio num/den of integer polynomials in p, with
// q = p^4 so that all fractional q-powers used by the catalogue are integer
// powers of p. Canonical form: gcd(num,den) = 1 in Z[p] (integer content
// included), den has positive leading coefficient; equality is representation
// equality.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    explicit Scalar(const Int& n) : num_(n), den_(1) {}
    explicit Scalar(const Rat& r);
    Scalar(PolyZ num, PolyZ den);

    static Scalar p_power(long k);  // p^k, k may be negative
    static Scalar parse(const std::string& s);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const PolyZ& num() const { return num_; }
    const PolyZ& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero on o == 0
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    Scalar inverse() const;
    Scalar pow(long k) const;

    // Evaluate at a rational point p0; PoleAtPoint if den vanishes there.
    Rat specialize(const Rat& p0) const;

    std::string str() const;

    // Rough size measure used for pivot selection in exact elimination.
    long complexity() const;

private:
    void canonicalize();
    PolyZ num_, den_;
};

// q-power helpers, exponents counted in quarters of a power of q:
// qq(k) = q^{k/4} = p^k.
inline Scalar qq(long quarters) { return Scalar::p_power(quarters); }
inline Scalar qpow(long k) { return Scalar::p_power(4 * k); }      // q^k
inline Scalar qhalf(long k) { return Scalar::p_power(2 * k); }     // q^{k/2}

// Specialization point for exact rational evaluation (default p0 = 2).
struct SpecPoint {
    Rat p0{2};
};

} // namespace braidhom
