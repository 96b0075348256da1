#include "braidhom/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace braidhom {

void PolyZ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::monomial(const Int& c, int deg) {
    PolyZ r;
    if (c == 0) return r;
    if (deg < 0) fail("IllegalExponent", "PolyZ::monomial with negative degree");
    r.c_.assign(deg + 1, Int(0));
    r.c_[deg] = c;
    return r;
}

int PolyZ::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

int PolyZ::term_count() const {
    int n = 0;
    for (const auto& c : c_)
        if (c != 0) ++n;
    return n;
}

Int PolyZ::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Int(0);
    return c_[d];
}

PolyZ PolyZ::operator-() const {
    PolyZ r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
    PolyZ r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

PolyZ PolyZ::operator-(const PolyZ& o) const {
    PolyZ r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
    PolyZ r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

PolyZ PolyZ::shifted(int by) const {
    if (is_zero() || by == 0) return by >= 0 ? *this : PolyZ();
    if (by < 0) fail("IllegalExponent", "PolyZ::shifted negative");
    PolyZ r;
    r.c_.assign(c_.size() + by, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + by] = c_[i];
    return r;
}

Int PolyZ::content() const {
    Int g(0);
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolyZ PolyZ::divexact_int(const Int& d) const {
    if (d == 0) fail("DivisionByZero", "PolyZ::divexact_int by zero");
    PolyZ r(*this);
    for (auto& c : r.c_) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (rem != 0) fail("DivisionByZero", "PolyZ::divexact_int inexact");
        c = q;
    }
    return r;
}

// Exact division: *this = q*d with q in Z[p]. Classical long division; every
// leading-coefficient step is exact for true divisors after content split.
PolyZ PolyZ::divexact(const PolyZ& d) const {
    if (d.is_zero()) fail("DivisionByZero", "PolyZ::divexact by zero");
    if (is_zero()) return PolyZ();
    Int ca = content(), cd = d.content();
    Int cq, crem;
    mpz_tdiv_qr(cq.get_mpz_t(), crem.get_mpz_t(), ca.get_mpz_t(), cd.get_mpz_t());
    if (crem != 0) fail("DivisionByZero", "PolyZ::divexact content mismatch");
    PolyZ a = divexact_int(ca), b = d.divexact_int(cd);
    int dq = a.degree() - b.degree();
    if (dq < 0) fail("DivisionByZero", "PolyZ::divexact degree mismatch");
    PolyZ q;
    q.c_.assign(dq + 1, Int(0));
    for (int k = dq; k >= 0; --k) {
        Int top = a.coeff(b.degree() + k);
        if (top == 0) continue;
        Int step, rem;
        mpz_tdiv_qr(step.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        if (rem != 0) fail("DivisionByZero", "PolyZ::divexact inexact step");
        q.c_[k] = step;
        a = a - b.shifted(k) * PolyZ(step);
    }
    if (!a.is_zero()) fail("DivisionByZero", "PolyZ::divexact nonzero remainder");
    q.trim();
    PolyZ r = q;
    for (auto& c : r.c_) c *= cq;
    return r;
}

// Content-inclusive gcd via the primitive PRS; result has positive leading
// coefficient.
PolyZ PolyZ::gcd(const PolyZ& a0, const PolyZ& b0) {
    if (a0.is_zero() && b0.is_zero()) return PolyZ();
    if (a0.is_zero()) return b0.lead() > 0 ? b0 : -b0;
    if (b0.is_zero()) return a0.lead() > 0 ? a0 : -a0;
    Int gc;
    mpz_gcd(gc.get_mpz_t(), a0.content().get_mpz_t(), b0.content().get_mpz_t());
    PolyZ a = a0.divexact_int(a0.content());
    PolyZ b = b0.divexact_int(b0.content());
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        PolyZ r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Int rl = r.lead();
            PolyZ scaled;
            scaled.c_ = r.c_;
            for (auto& c : scaled.c_) c *= b.lead();
            r = scaled - b.shifted(k) * PolyZ(rl);
            r.trim();
        }
        a = b;
        Int c = r.content();
        b = (c == 0) ? PolyZ() : r.divexact_int(c);
    }
    if (a.lead() < 0) a = -a;
    PolyZ g = a;
    for (auto& c : g.c_) c *= gc;
    return g;
}

Rat PolyZ::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += Rat(c_[i]);
    }
    acc.canonicalize();
    return acc;
}

std::string PolyZ::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int c = coeff(d);
        if (c == 0) continue;
        Int ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (d == 0) {
            os << ab.get_str();
        } else {
            if (ab != 1) os << ab.get_str() << "*";
            os << "p";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

Scalar::Scalar(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    num_ = PolyZ(Int(c.get_num()));
    den_ = PolyZ(Int(c.get_den()));
    canonicalize();
}

Scalar::Scalar(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void Scalar::canonicalize() {
    if (den_.is_zero()) fail("DivisionByZero", "Scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = PolyZ(1);
        return;
    }
    PolyZ g = PolyZ::gcd(num_, den_);
    if (!(g.degree() == 0 && g.coeff(0) == 1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::p_power(long k) {
    Scalar s;
    if (k >= 0) {
        s.num_ = PolyZ::monomial(Int(1), static_cast<int>(k));
        s.den_ = PolyZ(1);
    } else {
        s.num_ = PolyZ(1);
        s.den_ = PolyZ::monomial(Int(1), static_cast<int>(-k));
    }
    return s;
}

bool Scalar::is_one() const {
    return num_.degree() == 0 && num_.coeff(0) == 1 && den_.degree() == 0 && den_.coeff(0) == 1;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (o.is_zero()) return *this;
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    // cross-reduce before multiplying to keep degrees down
    PolyZ g1 = PolyZ::gcd(num_, o.den_);
    PolyZ g2 = PolyZ::gcd(o.num_, den_);
    PolyZ n1 = num_.divexact(g1), d2 = o.den_.divexact(g1);
    PolyZ n2 = o.num_.divexact(g2), d1 = den_.divexact(g2);
    return Scalar(n1 * n2, d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) fail("DivisionByZero", "Scalar::inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long k) const {
    if (k == 0) return Scalar(1);
    Scalar base = k > 0 ? *this : inverse();
    long e = k > 0 ? k : -k;
    Scalar acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat Scalar::specialize(const Rat& p0) const {
    Rat d = den_.eval(p0);
    if (d == 0) fail("PoleAtPoint", "denominator vanishes at p0, scalar " + str());
    Rat n = num_.eval(p0);
    Rat r = n / d;
    r.canonicalize();
    return r;
}

std::string Scalar::str() const {
    std::string ns = num_.str();
    if (den_.degree() == 0 && den_.coeff(0) == 1) return ns;
    // integer over a pure power of p prints with a negative exponent
    if (num_.degree() == 0 && den_.term_count() == 1 && den_.lead() == 1) {
        std::string pk = "p^-" + std::to_string(den_.degree());
        Int n = num_.coeff(0);
        if (n == 1) return pk;
        if (n == -1) return "-" + pk;
        return n.get_str() + "*" + pk;
    }
    if (num_.term_count() > 1) ns = "(" + ns + ")";
    std::string ds = den_.str();
    // the denominator must reparse as one factor of the '/' term
    bool atomic = den_.term_count() == 1 &&
                  (den_.degree() == 0 || den_.lead() == 1);
    if (!atomic) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

long Scalar::complexity() const {
    return static_cast<long>(num_.term_count() + den_.term_count()) +
           (num_.degree() + den_.degree()) / 8;
}

namespace {

// Recursive-descent parser for scalar expressions over +,-,*,/,^,(),p and
// integers. Accepts a superset of the canonical grammar.
struct ScalarParser {
    const std::string& s;
    size_t i = 0;

    explicit ScalarParser(const std::string& src) : s(src) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }

    long integer() {
        skip();
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) fail("ParseError", "expected integer at offset " + std::to_string(i) + " in \"" + s + "\"");
        long v = std::stol(s.substr(i, k - i));
        i = k;
        return v;
    }

    Scalar atom() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("ParseError", "missing ')' in \"" + s + "\"");
            return power_suffix(v);
        }
        if (i < s.size() && s[i] == 'p') {
            ++i;
            return power_suffix_base_p();
        }
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
            size_t k = i;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            Int v(s.substr(i, k - i));
            i = k;
            return power_suffix(Scalar(v));
        }
        fail("ParseError", "unexpected character at offset " + std::to_string(i) + " in \"" + s + "\"");
    }

    Scalar power_suffix_base_p() {
        if (eat('^')) return Scalar::p_power(integer());
        return Scalar::p_power(1);
    }

    Scalar power_suffix(Scalar v) {
        if (eat('^')) return v.pow(integer());
        return v;
    }

    Scalar factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        return atom();
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) fail("DivisionByZero", "division by zero in \"" + s + "\"");
                v /= d;
            } else {
                // implicit multiplication like "2p" is not part of the grammar
                break;
            }
        }
        return v;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (peek('-')) v += term();  // term() consumes the sign
            else break;
        }
        return v;
    }

    Scalar run() {
        Scalar v = expr();
        skip();
        if (i != s.size()) fail("ParseError", "trailing input at offset " + std::to_string(i) + " in \"" + s + "\"");
        return v;
    }
};

} // namespace

Scalar Scalar::parse(const std::string& s) {
    ScalarParser p(s);
    return p.run();
}

} // namespace braidhom
