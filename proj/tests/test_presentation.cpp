#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "braidhom/error.hpp"
#include "braidhom/presentation.hpp"
#include "doctest.h"

using namespace braidhom;

namespace {

std::shared_ptr<Presentation> make_line() {
    return std::make_shared<Presentation>(
        "braided-line", std::vector<GenInfo>{{"x", false, "", 1, {1}}});
}

std::shared_ptr<Presentation> make_plane() {
    auto P = std::make_shared<Presentation>(
        "quantum-plane",
        std::vector<GenInfo>{{"x", false, "", 1, {1, 0}}, {"y", false, "", 1, {0, 1}}});
    P->add_rule("y*x", "p^4*x*y");
    return P;
}

std::shared_ptr<Presentation> make_slq2() {
    auto P = std::make_shared<Presentation>(
        "slq2", std::vector<GenInfo>{{"a", true, "d", 1, {1, 1}},
                                     {"b", false, "", 1, {1, -1}},
                                     {"c", false, "", 1, {-1, 1}}});
    P->add_rule("b*a", "p^-4*a*b");
    P->add_rule("c*a", "p^-4*a*c");
    P->add_rule("b*d", "p^4*d*b");
    P->add_rule("c*d", "p^4*d*c");
    P->add_rule("c*b", "b*c");
    P->add_rule("a*d", "1 + p^4*b*c");
    P->add_rule("d*a", "1 + p^-4*b*c");
    return P;
}

std::shared_ptr<Presentation> make_B() {
    auto P = std::make_shared<Presentation>(
        "braided-B", std::vector<GenInfo>{{"x", true, "y", 1, {1}},
                                          {"u", false, "", 1, {0}},
                                          {"z", false, "", 1, {0}}});
    P->add_rule("u*x", "p^8*x*u");
    P->add_rule("u*y", "p^-8*y*u");
    P->add_rule("z*x", "x*z + (1-p^8)*x*u");
    P->add_rule("z*y", "y*z + (1-p^-8)*y*u");
    P->add_rule("z*u", "u*z");
    P->add_rule("x*y", "u^2 + (1+p^-8)*u*z - 1");
    P->add_rule("y*x", "u^2 + (1+p^8)*u*z - 1");
    return P;
}

std::shared_ptr<Presentation> make_toy3() {
    auto P = std::make_shared<Presentation>(
        "toy3", std::vector<GenInfo>{{"x", false, "", 1, {1, 0}}, {"y", false, "", 1, {0, 1}}});
    P->add_rule("x*x", "0");
    P->add_rule("x*y", "0");
    P->add_rule("y*x", "0");
    P->add_rule("y*y", "0");
    return P;
}

std::shared_ptr<Presentation> make_laurent() {
    // group algebra of Z: one invertible generator, no rules
    return std::make_shared<Presentation>(
        "laurent", std::vector<GenInfo>{{"t", true, "", 1, {1}}});
}

std::vector<Letter> all_letters(const Presentation& P) {
    std::vector<Letter> ls;
    for (int i = 0; i < P.slots(); i++) {
        ls.push_back(Letter{i, 1});
        if (P.gens()[i].int_exponents) ls.push_back(Letter{i, -1});
    }
    return ls;
}

void collect_nf(const Presentation& P, const std::vector<Letter>& w, size_t lo, size_t hi,
                std::vector<Element>& out) {
    if (hi - lo == 1) {
        out.push_back(P.word_element({w[lo]}));
        return;
    }
    for (size_t s = lo + 1; s < hi; s++) {
        std::vector<Element> L, R;
        collect_nf(P, w, lo, s, L);
        collect_nf(P, w, s, hi, R);
        for (auto& l : L)
            for (auto& r : R) out.push_back(P.mul(l, r));
    }
}

void check_all_parenthesizations(const Presentation& P, size_t maxlen) {
    auto letters = all_letters(P);
    std::vector<std::vector<Letter>> words = {{}};
    for (size_t len = 1; len <= maxlen; len++) {
        std::vector<std::vector<Letter>> next;
        for (auto& w : words)
            if (w.size() == len - 1)
                for (Letter l : letters) {
                    auto w2 = w;
                    w2.push_back(l);
                    next.push_back(w2);
                }
        for (auto& w : next) {
            std::vector<Element> nfs;
            collect_nf(P, w, 0, w.size(), nfs);
            for (size_t i = 1; i < nfs.size(); i++) CHECK(nfs[i] == nfs[0]);
        }
        words = std::move(next);
    }
}

void check_critical_pairs(const Presentation& P) {
    auto rules = P.rules_list();
    for (auto& [l12, R12] : rules)
        for (auto& [l23, R23] : rules) {
            if (!(l12.second == l23.first)) continue;
            Element left = P.mul(R12, P.word_element({l23.second}));
            Element right = P.mul(P.word_element({l12.first}), R23);
            CHECK(left == right);
        }
}

std::string err_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

} // namespace

TEST_CASE("normal forms in the quantum plane") {
    auto P = make_plane();
    CHECK(P->str(P->parse_element("y*x")) == "p^4*x*y");
    // (x+y)^2 = x^2 + (1+q) x y + y^2
    Element sq = P->pow(P->parse_element("x+y"), 2);
    CHECK(sq == P->parse_element("x^2 + (1+p^4)*x*y + y^2"));
    CHECK(P->str(P->parse_element("y^2*x")) == "p^8*x*y^2");
}

TEST_CASE("normal forms and filtration in slq2") {
    auto P = make_slq2();
    CHECK(P->parse_element("a*d") == P->parse_element("1 + p^4*b*c"));
    CHECK(P->parse_element("d*a") == P->parse_element("1 + p^-4*b*c"));
    CHECK(P->parse_element("c*b") == P->parse_element("b*c"));
    CHECK(P->str(P->parse_element("b*a")) == "p^-4*a*b");

    // d^2 b c has filtration 4 and multidegree (-2,-2)
    Monomial m = P->parse_monomial("d^2*b*c");
    CHECK(m.e == std::vector<int32_t>{-2, 1, 1});
    CHECK(P->filtration(m) == 4);
    CHECK(P->multidegree(m) == std::vector<long>{-2, -2});
    CHECK(P->is_normal(m));

    // quantum determinant relation survives arbitrary association
    Element det = P->parse_element("a*d - p^4*b*c");
    CHECK(det == P->parse_element("1"));
    Element det2 = P->parse_element("d*a - p^-4*b*c");
    CHECK(det2 == P->parse_element("1"));

    // a * a^{-1}-side letters never cancel silently: a*d rewrites
    Element ad = P->mul(P->gen(0, 1), P->gen(0, -1));
    CHECK(ad == P->parse_element("1 + p^4*b*c"));
}

TEST_CASE("normal forms in the transmuted algebra B") {
    auto P = make_B();
    CHECK(P->parse_element("x*y") == P->parse_element("u^2 + (1+p^-8)*u*z - 1"));
    CHECK(P->parse_element("y*x") == P->parse_element("u^2 + (1+p^8)*u*z - 1"));
    CHECK(P->parse_element("u*x") == P->parse_element("p^8*x*u"));
    CHECK(P->parse_element("z*x*u") == P->parse_element("x*u*z + (1-p^8)*x*u^2"));
    // x and y are mutual inverses only up to the quadratic relation; u is not a unit
    Monomial xy = P->unit();
    CHECK(P->mul(P->gen(0, 1), P->gen(0, -1)) != Element{{xy, Scalar(1)}});
}

TEST_CASE("toy3 presentation collapses every quadratic word") {
    auto P = make_toy3();
    CHECK(is_zero(P->parse_element("x*x")));
    CHECK(is_zero(P->parse_element("x*y")));
    CHECK(is_zero(P->parse_element("y*x")));
    CHECK(is_zero(P->parse_element("(x+y)*(x+y)")));
    auto basis = P->enumerate_basis(Window{5, std::nullopt});
    REQUIRE(basis.size() == 3);
    CHECK(P->str(basis[0]) == "1");
    CHECK(P->str(basis[1]) == "x");
    CHECK(P->str(basis[2]) == "y");
}

TEST_CASE("laurent generator cancels") {
    auto P = make_laurent();
    CHECK(P->mul(P->gen(0, 3), P->gen(0, -3)) == Element{{P->unit(), Scalar(1)}});
    CHECK(P->str(P->gen(0, -2)) == "t^-2");
    CHECK(P->parse_monomial("t^-2") == P->gen(0, -2));
}

TEST_CASE("basis enumeration counts") {
    auto slq2 = make_slq2();
    auto B = make_B();
    for (int f = 0; f <= 5; f++) {
        auto basis = slq2->enumerate_basis(Window{f, std::nullopt});
        int exact = 0;
        for (auto& m : basis)
            if (slq2->filtration(m) == f) exact++;
        CHECK(exact == (f + 1) * (f + 1));
        auto basisB = B->enumerate_basis(Window{f, std::nullopt});
        int exactB = 0;
        for (auto& m : basisB)
            if (B->filtration(m) == f) exactB++;
        CHECK(exactB == (f + 1) * (f + 1));
    }
    auto line = make_line();
    CHECK(line->enumerate_basis(Window{5, std::nullopt}).size() == 6);
    auto plane = make_plane();
    CHECK(plane->enumerate_basis(Window{3, std::nullopt}).size() == 10);

    // multidegree-restricted window: slq2 degree (0,0) up to filtration 4
    auto zero = slq2->enumerate_basis(Window{4, std::vector<long>{0, 0}});
    REQUIRE(zero.size() == 3);
    CHECK(slq2->str(zero[0]) == "1");
    CHECK(slq2->str(zero[1]) == "b*c");
    CHECK(slq2->str(zero[2]) == "b^2*c^2");
}

TEST_CASE("confluence: critical pairs and all parenthesizations") {
    for (auto& P : {make_line(), make_plane(), make_slq2(), make_B(), make_toy3(), make_laurent()}) {
        check_critical_pairs(*P);
        check_all_parenthesizations(*P, 4);
    }
}

TEST_CASE("associativity and grading additivity on random elements") {
    std::mt19937 rng(20240812);
    for (auto& P : {make_slq2(), make_B()}) {
        auto basis = P->enumerate_basis(Window{2, std::nullopt});
        auto rnd_elem = [&]() {
            Element e;
            int terms = 1 + static_cast<int>(rng() % 2);
            for (int t = 0; t < terms; t++) {
                const Monomial& m = basis[rng() % basis.size()];
                long k = static_cast<long>(rng() % 5) - 2;
                Scalar c = Scalar(static_cast<long>(rng() % 7) - 3) * Scalar::p_power(2 * k);
                add_term(e, m, c);
            }
            return e;
        };
        for (int trial = 0; trial < 25; trial++) {
            Element A = rnd_elem(), Bm = rnd_elem(), C = rnd_elem();
            CHECK(P->mul(P->mul(A, Bm), C) == P->mul(A, P->mul(Bm, C)));
        }
        // multidegree additivity on monomial products
        for (int trial = 0; trial < 40; trial++) {
            const Monomial& m1 = basis[rng() % basis.size()];
            const Monomial& m2 = basis[rng() % basis.size()];
            auto d1 = P->multidegree(m1), d2 = P->multidegree(m2);
            for (auto& [m, c] : P->mul(m1, m2)) {
                (void)c;
                auto d = P->multidegree(m);
                for (size_t i = 0; i < d.size(); i++) CHECK(d[i] == d1[i] + d2[i]);
            }
        }
    }
}

TEST_CASE("element print/parse round trip") {
    std::mt19937 rng(20240813);
    for (auto& P : {make_slq2(), make_B(), make_plane()}) {
        auto basis = P->enumerate_basis(Window{3, std::nullopt});
        for (int trial = 0; trial < 40; trial++) {
            Element e;
            int terms = static_cast<int>(rng() % 4);
            for (int t = 0; t < terms; t++) {
                const Monomial& m = basis[rng() % basis.size()];
                long num = static_cast<long>(rng() % 9) - 4;
                long k = static_cast<long>(rng() % 7) - 3;
                Scalar c = Scalar(num) * Scalar::p_power(k) +
                           Scalar(static_cast<long>(rng() % 3) - 1);
                add_term(e, m, c);
            }
            CHECK(P->parse_element(P->str(e)) == e);
        }
    }
    auto P = make_slq2();
    CHECK(P->str(P->parse_element("a*d")) == "1 + p^4*b*c");
    CHECK(P->str(P->parse_element("-b*0 + a - a")) == "0");
    CHECK(P->parse_element("(p^8+1)/p^4*a") ==
          Element{{P->gen(0, 1), Scalar::p_power(4) + Scalar::p_power(-4)}});
}

TEST_CASE("presentation JSON round trip") {
    for (auto& P : {make_slq2(), make_B(), make_toy3(), make_line()}) {
        auto Q = Presentation::from_json(P->to_json());
        CHECK(Q->to_json() == P->to_json());
        CHECK(Q->name() == P->name());
        // identical normal forms on a sample product
        auto letters = all_letters(*P);
        for (Letter l1 : letters)
            for (Letter l2 : letters) {
                Element a = P->word_element({l1, l2});
                Element b = Q->word_element({l1, l2});
                CHECK(P->str(a) == Q->str(b));
            }
    }
}

TEST_CASE("errors: incomplete presentations, bad exponents, parse failures") {
    Presentation incomplete("incomplete",
                            {{"x", false, "", 1, {1}}, {"y", false, "", 1, {1}}});
    CHECK(err_kind([&] { incomplete.mul(incomplete.gen(1), incomplete.gen(0)); }) ==
          "MapUndefined");

    auto plane = make_plane();
    CHECK(err_kind([&] { plane->parse_element("x^-1"); }) == "IllegalExponent");
    CHECK(err_kind([&] { plane->gen(0, -2); }) == "IllegalExponent");
    CHECK(err_kind([&] { plane->parse_element("x*w"); }) == "ParseError");
    CHECK(err_kind([&] { plane->parse_element("x+"); }) == "ParseError");
    CHECK(err_kind([&] { plane->parse_element("(x+y"); }) == "ParseError");
    CHECK(err_kind([&] { plane->parse_monomial("x+y"); }) == "ParseError");
    CHECK(err_kind([&] { plane->parse_element("x/y"); }) == "IllegalExponent");

    // grading-breaking rule is rejected
    Presentation bad("bad", {{"x", false, "", 1, {1}}, {"y", false, "", 1, {2}}});
    CHECK(err_kind([&] { bad.add_rule("y*x", "y"); }) == "AxiomViolation");
    // filtration-raising rule is rejected (trivial grading isolates the filtration check)
    Presentation bad2("bad2", {{"x", false, "", 1, {}}, {"y", false, "", 1, {}}});
    CHECK(err_kind([&] { bad2.add_rule("y*x", "x*y^2"); }) == "AxiomViolation");
}

TEST_CASE("window membership") {
    auto P = make_slq2();
    Monomial m = P->parse_monomial("d^2*b*c");
    CHECK(P->in_window(m, Window{4, std::nullopt}));
    CHECK(!P->in_window(m, Window{3, std::nullopt}));
    CHECK(P->in_window(m, Window{4, std::vector<long>{-2, -2}}));
    CHECK(!P->in_window(m, Window{4, std::vector<long>{0, 0}}));
}
