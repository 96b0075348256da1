#include "braidhom/models.hpp"

#include <nlohmann/json.hpp>

namespace braidhom {

namespace {

Tensor pair_tensor(const Presentation* P,
                   std::initializer_list<std::pair<std::pair<const char*, const char*>, Scalar>>
                       entries) {
    Tensor t({P, P});
    for (auto& [mono_pair, c] : entries)
        t.add({P->parse_monomial(mono_pair.first), P->parse_monomial(mono_pair.second)}, c);
    return t;
}

} // namespace

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

std::shared_ptr<Presentation> line_presentation() {
    return std::make_shared<Presentation>(
        "braided_line", std::vector<GenInfo>{{"x", false, "", 1, {1}}});
}

std::shared_ptr<Presentation> plane_presentation() {
    auto P = std::make_shared<Presentation>(
        "quantum_plane",
        std::vector<GenInfo>{{"x", false, "", 1, {1, 0}}, {"y", false, "", 1, {0, 1}}});
    P->add_rule("y*x", "p^4*x*y");
    return P;
}

std::shared_ptr<Presentation> slq2_presentation() {
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

std::shared_ptr<Presentation> B_presentation() {
    auto P = std::make_shared<Presentation>(
        "braided_B", std::vector<GenInfo>{{"x", true, "y", 1, {1}},
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

std::shared_ptr<Presentation> toy3_presentation() {
    // x and y share the total-degree grading: the triangular ribbon
    // automorphism sigma(y) = x + y must preserve the multidegree.
    auto P = std::make_shared<Presentation>(
        "toy3", std::vector<GenInfo>{{"x", false, "", 1, {1}}, {"y", false, "", 1, {1}}});
    P->add_rule("x*x", "0");
    P->add_rule("x*y", "0");
    P->add_rule("y*x", "0");
    P->add_rule("y*y", "0");
    return P;
}

std::shared_ptr<Presentation> laurent_presentation() {
    return std::make_shared<Presentation>(
        "laurent_Z", std::vector<GenInfo>{{"t", true, "", 1, {1}}});
}

// ---------------------------------------------------------------------------
// Hopf structures
// ---------------------------------------------------------------------------

std::shared_ptr<Hopf> laurent_hopf(std::shared_ptr<Presentation> P) {
    auto H = std::make_shared<Hopf>(P, false);
    const Presentation* Pp = P.get();
    Letter t{0, 1}, ti{0, -1};
    H->set_coproduct(t, pair_tensor(Pp, {{{"t", "t"}, Scalar(1)}}));
    H->set_coproduct(ti, pair_tensor(Pp, {{{"t^-1", "t^-1"}, Scalar(1)}}));
    H->set_counit(t, Scalar(1));
    H->set_counit(ti, Scalar(1));
    Element et{{P->gen(0, 1), Scalar(1)}}, eti{{P->gen(0, -1), Scalar(1)}};
    H->set_antipode(t, eti);
    H->set_antipode(ti, et);
    H->set_antipode_inv(t, eti);
    H->set_antipode_inv(ti, et);
    return H;
}

std::shared_ptr<Hopf> slq2_hopf(std::shared_ptr<Presentation> P) {
    auto H = std::make_shared<Hopf>(P, false);
    const Presentation* Pp = P.get();
    Letter a = P->letter("a"), b = P->letter("b"), c = P->letter("c"), d = P->letter("d");
    H->set_coproduct(a, pair_tensor(Pp, {{{"a", "a"}, Scalar(1)}, {{"b", "c"}, Scalar(1)}}));
    H->set_coproduct(b, pair_tensor(Pp, {{{"a", "b"}, Scalar(1)}, {{"b", "d"}, Scalar(1)}}));
    H->set_coproduct(c, pair_tensor(Pp, {{{"c", "a"}, Scalar(1)}, {{"d", "c"}, Scalar(1)}}));
    H->set_coproduct(d, pair_tensor(Pp, {{{"c", "b"}, Scalar(1)}, {{"d", "d"}, Scalar(1)}}));
    H->set_counit(a, Scalar(1));
    H->set_counit(d, Scalar(1));
    H->set_counit(b, Scalar(0));
    H->set_counit(c, Scalar(0));
    H->set_antipode(a, P->parse_element("d"));
    H->set_antipode(b, P->parse_element("-p^-4*b"));
    H->set_antipode(c, P->parse_element("-p^4*c"));
    H->set_antipode(d, P->parse_element("a"));
    H->set_antipode_inv(a, P->parse_element("d"));
    H->set_antipode_inv(b, P->parse_element("-p^4*b"));
    H->set_antipode_inv(c, P->parse_element("-p^-4*c"));
    H->set_antipode_inv(d, P->parse_element("a"));
    return H;
}

std::shared_ptr<Hopf> line_braided_hopf(std::shared_ptr<Presentation> P) {
    auto H = std::make_shared<Hopf>(P, true);
    const Presentation* Pp = P.get();
    Letter x = P->letter("x");
    H->set_coproduct(x, pair_tensor(Pp, {{{"x", "1"}, Scalar(1)}, {{"1", "x"}, Scalar(1)}}));
    H->set_counit(x, Scalar(0));
    H->set_antipode(x, P->parse_element("-x"));
    H->set_antipode_inv(x, P->parse_element("-x"));
    return H;
}

std::shared_ptr<Hopf> plane_braided_hopf(std::shared_ptr<Presentation> P) {
    auto H = std::make_shared<Hopf>(P, true);
    const Presentation* Pp = P.get();
    for (const char* g : {"x", "y"}) {
        Letter l = P->letter(g);
        H->set_coproduct(l, pair_tensor(Pp, {{{g, "1"}, Scalar(1)}, {{"1", g}, Scalar(1)}}));
        H->set_counit(l, Scalar(0));
        Element ml{{P->gen(l.slot, 1), Scalar(-1)}};
        H->set_antipode(l, ml);
        H->set_antipode_inv(l, ml);
    }
    return H;
}

std::shared_ptr<Hopf> B_braided_hopf(std::shared_ptr<Presentation> P) {
    auto H = std::make_shared<Hopf>(P, true);
    const Presentation* Pp = P.get();
    Letter x = P->letter("x"), y = P->letter("y"), u = P->letter("u"), z = P->letter("z");
    Scalar one(1), qi2 = qpow(-2), cpl = one + qpow(-2);  // q^{-2} and 1 + q^{-2}
    H->set_coproduct(u, pair_tensor(Pp, {{{"u", "u"}, one}, {{"y", "x"}, qi2}}));
    H->set_coproduct(x, pair_tensor(Pp, {{{"x", "u"}, one}, {{"u", "x"}, one}, {{"z", "x"}, cpl}}));
    H->set_coproduct(y, pair_tensor(Pp, {{{"y", "u"}, one}, {{"u", "y"}, one}, {{"y", "z"}, cpl}}));
    // The mixed-term coefficient 1/(q^2 + 1) = q^{-2}/(1 + q^{-2}) is forced
    // by coassociativity (and by the antipode law); it is the transported
    // coproduct of (q a - q d)/(q + q^{-1}) with b (x) c = q^{-2} x (x) y.
    Scalar mix = one / (qpow(2) + one);
    H->set_coproduct(z, pair_tensor(Pp, {{{"z", "u"}, one},
                                         {{"u", "z"}, one},
                                         {{"z", "z"}, cpl},
                                         {{"x", "y"}, mix},
                                         {{"y", "x"}, -mix}}));
    H->set_counit(u, Scalar(1));
    H->set_counit(x, Scalar(0));
    H->set_counit(y, Scalar(0));
    H->set_counit(z, Scalar(0));
    H->set_antipode(u, P->parse_element("u + (1+p^8)*z"));
    H->set_antipode(x, P->parse_element("-p^8*x"));
    H->set_antipode(y, P->parse_element("-p^8*y"));
    H->set_antipode(z, P->parse_element("-p^8*z"));
    H->set_antipode_inv(u, P->parse_element("u + (1+p^-8)*z"));
    H->set_antipode_inv(x, P->parse_element("-p^-8*x"));
    H->set_antipode_inv(y, P->parse_element("-p^-8*y"));
    H->set_antipode_inv(z, P->parse_element("-p^-8*z"));
    return H;
}

// ---------------------------------------------------------------------------
// Coquasitriangular forms
// ---------------------------------------------------------------------------

std::shared_ptr<RForm> laurent_rform(std::shared_ptr<Hopf> H) {
    auto r = std::make_shared<RForm>(H);
    Letter t{0, 1}, ti{0, -1};
    r->set_base(t, t, qpow(1));
    r->set_base(t, ti, qpow(-1));
    r->set_base(ti, t, qpow(-1));
    r->set_base(ti, ti, qpow(1));
    return r;
}

std::shared_ptr<RForm> slq2_rform(std::shared_ptr<Hopf> H) {
    auto P = H->algebra();
    auto r = std::make_shared<RForm>(H);
    std::vector<Letter> letters = {P->letter("a"), P->letter("b"), P->letter("c"),
                                   P->letter("d")};
    for (Letter l1 : letters)
        for (Letter l2 : letters) r->set_base(l1, l2, Scalar(0));
    r->set_base(P->letter("a"), P->letter("a"), qhalf(1));
    r->set_base(P->letter("d"), P->letter("d"), qhalf(1));
    r->set_base(P->letter("a"), P->letter("d"), qhalf(-1));
    r->set_base(P->letter("d"), P->letter("a"), qhalf(-1));
    r->set_base(P->letter("c"), P->letter("b"), qhalf(-1) * (qpow(1) - qpow(-1)));
    return r;
}

// ---------------------------------------------------------------------------
// Coactions
// ---------------------------------------------------------------------------

std::shared_ptr<Coaction> line_coaction(std::shared_ptr<Presentation> A,
                                        std::shared_ptr<Hopf> H) {
    auto co = std::make_shared<Coaction>(A, H);
    const Presentation* Ap = A.get();
    const Presentation* Hp = H->algebra().get();
    Tensor t({Ap, Hp});
    t.add({A->parse_monomial("x"), Hp->parse_monomial("t")}, Scalar(1));
    co->set_coact(A->letter("x"), t);
    return co;
}

std::shared_ptr<Coaction> plane_coaction(std::shared_ptr<Presentation> A,
                                         std::shared_ptr<Hopf> H) {
    auto co = std::make_shared<Coaction>(A, H);
    const Presentation* Ap = A.get();
    const Presentation* Hp = H->algebra().get();
    Tensor tx({Ap, Hp}), ty({Ap, Hp});
    tx.add({A->parse_monomial("y"), Hp->parse_monomial("b")}, Scalar(1));
    tx.add({A->parse_monomial("x"), Hp->parse_monomial("d")}, Scalar(1));
    ty.add({A->parse_monomial("y"), Hp->parse_monomial("a")}, Scalar(1));
    ty.add({A->parse_monomial("x"), Hp->parse_monomial("c")}, Scalar(1));
    co->set_coact(A->letter("x"), tx);
    co->set_coact(A->letter("y"), ty);
    return co;
}

std::shared_ptr<Coaction> slq2_canonical_coaction(std::shared_ptr<Hopf> H) {
    auto P = H->algebra();
    auto co = std::make_shared<Coaction>(P, H);
    for (const char* g : {"a", "b", "c", "d"}) {
        Letter l = P->letter(g);
        co->set_coact(l, H->coproduct(P->gen(l.slot, l.sign)));
    }
    return co;
}

// ---------------------------------------------------------------------------
// Proof-device functionals
// ---------------------------------------------------------------------------

Functional slq2_varphi(std::shared_ptr<Hopf> H) {
    require(H->algebra()->name() == "slq2", "ConfigError",
            "this functional is defined on quantum SL(2)");
    return Functional(H, [](const Monomial& m) -> Scalar {
        if (m.is_unit()) return Scalar(1);
        long i = m.e[0], j = m.e[1], k = m.e[2];
        if (i != 0) return Scalar(0);
        // phi(b^j c^k) = q^{((j+k) - (j-k)^2)/4} beta^j gamma^k with
        // beta = q^{-1/4}, gamma = -q^{-5/4}; the q-powers collapse to
        // (-1)^k p^{-4k - (j-k)^2}.  These are the unique values for which
        // the r-form is the 2-coboundary of phi.
        Scalar v = Scalar::p_power(-4 * k - (j - k) * (j - k));
        return (k % 2) ? -v : v;
    });
}

// ---------------------------------------------------------------------------
// Braidings with catalogued closed-form oracles
// ---------------------------------------------------------------------------

namespace {

Scalar fq(long n) { return qpow(n) - qpow(-n); }  // f(n) = q^n - q^{-n}

Scalar spow(const Scalar& s, int n) {
    Scalar r(1);
    for (int i = 0; i < n; i++) r = r * s;
    return r;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; i++) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::shared_ptr<Braiding> line_braiding(std::shared_ptr<Presentation> A,
                                        std::shared_ptr<Hopf> H, std::shared_ptr<RForm> R,
                                        BraidMode mode) {
    auto Br = std::make_shared<Braiding>(H, R, mode);
    Br->register_coaction(line_coaction(A, H));
    const Presentation* P = A.get();
    for (int m = 0; m <= 3; m++)
        for (int n = 0; n <= 3; n++) {
            Tensor t({P, P});
            t.add({P->mono({n}), P->mono({m})}, qpow(1L * m * n));
            Br->add_oracle(P, P, P->mono({m}), P->mono({n}), t);
        }
    return Br;
}

std::shared_ptr<Braiding> plane_braiding(std::shared_ptr<Presentation> A,
                                         std::shared_ptr<Hopf> H, std::shared_ptr<RForm> R,
                                         BraidMode mode) {
    auto Br = std::make_shared<Braiding>(H, R, mode);
    Br->register_coaction(plane_coaction(A, H));
    const Presentation* P = A.get();
    auto xy = [&](int m, int n) { return P->mono({m, n}); };
    for (int m = 0; m <= 3; m++)
        for (int n = 0; n <= 3; n++) {
            Monomial v = xy(m, n);
            Tensor tx({P, P});
            tx.add({xy(1, 0), v}, qhalf(m - n));
            if (n >= 1) tx.add({xy(0, 1), xy(m + 1, n - 1)}, qhalf(n - m - 2) * fq(n));
            Br->add_oracle(P, P, v, xy(1, 0), tx);
            Tensor ty({P, P});
            ty.add({xy(0, 1), v}, qhalf(n - m));
            Br->add_oracle(P, P, v, xy(0, 1), ty);
            Tensor xt({P, P});
            xt.add({v, xy(1, 0)}, qhalf(m - n));
            Br->add_oracle(P, P, xy(1, 0), v, xt);
            Tensor yt({P, P});
            yt.add({v, xy(0, 1)}, qhalf(n - m));
            if (m >= 1) yt.add({xy(m - 1, n + 1), xy(1, 0)}, qhalf(m - n - 2) * fq(m));
            Br->add_oracle(P, P, xy(0, 1), v, yt);
        }
    return Br;
}

std::shared_ptr<Braiding> slq2_braiding(std::shared_ptr<Hopf> H, std::shared_ptr<RForm> R,
                                        BraidMode mode) {
    auto Br = std::make_shared<Braiding>(H, R, mode);
    Br->register_coaction(slq2_canonical_coaction(H));
    const Presentation* P = H->algebra().get();
    const Scalar h = qhalf(1), hb = qhalf(-1), w = qhalf(-1) * fq(1);
    auto put = [&](const char* l, const char* r, Tensor t) {
        Br->add_oracle(P, P, P->parse_monomial(l), P->parse_monomial(r), std::move(t));
    };
    put("a", "a", pair_tensor(P, {{{"a", "a"}, h}}));
    put("a", "b", pair_tensor(P, {{{"b", "a"}, hb}, {{"a", "b"}, w}}));
    put("a", "c", pair_tensor(P, {{{"c", "a"}, h}}));
    put("a", "d", pair_tensor(P, {{{"d", "a"}, hb}, {{"c", "b"}, w}}));
    put("b", "a", pair_tensor(P, {{{"a", "b"}, hb}}));
    put("b", "b", pair_tensor(P, {{{"b", "b"}, h}}));
    put("b", "c", pair_tensor(P, {{{"c", "b"}, hb}}));
    put("b", "d", pair_tensor(P, {{{"d", "b"}, h}}));
    put("c", "a", pair_tensor(P, {{{"a", "c"}, h}}));
    put("c", "b", pair_tensor(P, {{{"b", "c"}, hb}, {{"a", "d"}, w}}));
    put("c", "c", pair_tensor(P, {{{"c", "c"}, h}}));
    put("c", "d", pair_tensor(P, {{{"d", "c"}, hb}, {{"c", "d"}, w}}));
    put("d", "a", pair_tensor(P, {{{"a", "d"}, hb}}));
    put("d", "b", pair_tensor(P, {{{"b", "d"}, h}}));
    put("d", "c", pair_tensor(P, {{{"c", "d"}, hb}}));
    put("d", "d", pair_tensor(P, {{{"d", "d"}, h}}));
    // PBW-monomial eigenvector families of the canonical braiding
    Monomial am = P->parse_monomial("a"), cm = P->parse_monomial("c");
    for (int i = 0; i <= 2; i++)
        for (int j = 0; j <= 2; j++)
            for (int k = 0; k <= 2; k++) {
                Monomial av = P->mono({i, j, k});
                Monomial dv = P->mono({-i, j, k});
                Tensor t1({P, P});
                t1.add({cm, av}, qhalf(i - j + k));
                Br->add_oracle(P, P, av, cm, t1);
                Tensor t2({P, P});
                t2.add({am, av}, qhalf(i - j + k));
                Br->add_oracle(P, P, av, am, t2);
                Tensor t3({P, P});
                t3.add({cm, dv}, qhalf(-i - j + k));
                Br->add_oracle(P, P, dv, cm, t3);
            }
    return Br;
}

std::shared_ptr<Braiding> baez_braiding(std::shared_ptr<Hopf> H, std::shared_ptr<RForm> R) {
    auto Br = std::make_shared<Braiding>(H, R, BraidMode::Engine);
    const Presentation* P = H->algebra().get();
    Br->set_custom_engine(P, [H, R, P](const Monomial& f, const Monomial& g, bool inverse) {
        Tensor out({P, P});
        for (auto& [kf, cf] : H->coproduct_iter(f, 3).terms())
            for (auto& [kg, cg] : H->coproduct_iter(g, 3).terms()) {
                Scalar c = inverse ? R->eval(kg[0], kf[0]) * R->bar(kg[2], kf[2])
                                   : R->bar(kf[0], kg[0]) * R->eval(kf[2], kg[2]);
                out.add({kg[1], kf[1]}, cf * cg * c);
            }
        return out;
    });
    return Br;
}

std::shared_ptr<Braiding> toy3_braiding(std::shared_ptr<Presentation> A) {
    auto L = laurent_presentation();
    auto H = laurent_hopf(L);
    auto R = laurent_rform(H);
    auto Br = std::make_shared<Braiding>(H, R, BraidMode::Engine);
    auto C = std::make_shared<Coaction>(A, H);
    for (int s = 0; s < A->slots(); s++) {
        Tensor t({A.get(), L.get()});
        t.add({A->gen(s), L->unit()}, Scalar(1));
        C->set_coact(Letter{s, 1}, t);
    }
    Br->register_coaction(C);
    return Br;
}

// ---------------------------------------------------------------------------
// Transmuted presentation utilities
// ---------------------------------------------------------------------------

Element B_letter_image(const Presentation* B, const Presentation* Hp, const Letter& l) {
    const GenInfo& g = B->gens()[l.slot];
    const std::string& name = (l.sign > 0) ? g.name : g.inverse_name;
    if (name == "u") return Element{{Hp->parse_monomial("d"), Scalar(1)}};
    if (name == "x") return Element{{Hp->parse_monomial("b"), qpow(1)}};
    if (name == "y") return Element{{Hp->parse_monomial("c"), qpow(1)}};
    if (name == "z") {
        Scalar coeff = qpow(1) / (qpow(1) + qpow(-1));
        return Element{{Hp->parse_monomial("a"), coeff}, {Hp->parse_monomial("d"), -coeff}};
    }
    fail("MapUndefined", "no transmuted image for generator " + name);
}

Element B_monomial_image(const Transmuted& T, const Presentation* B, const Monomial& m) {
    const Presentation* Hp = T.hopf()->algebra().get();
    std::vector<Element> factors;
    for (Letter l : B->spell(m)) factors.push_back(B_letter_image(B, Hp, l));
    return T.product_chain(factors);
}

Element slq2_linear_to_B(const Presentation* Hp, const Presentation* B, const Element& e) {
    Monomial a = Hp->parse_monomial("a"), b = Hp->parse_monomial("b"),
             c = Hp->parse_monomial("c"), d = Hp->parse_monomial("d");
    Monomial x = B->parse_monomial("x"), y = B->parse_monomial("y"),
             u = B->parse_monomial("u"), z = B->parse_monomial("z");
    Element out;
    for (auto& [m, cc] : e) {
        if (m.is_unit()) {
            add_term(out, B->unit(), cc);
        } else if (m == d) {
            add_term(out, u, cc);
        } else if (m == b) {
            add_term(out, x, cc * qpow(-1));
        } else if (m == c) {
            add_term(out, y, cc * qpow(-1));
        } else if (m == a) {
            add_term(out, u, cc);
            add_term(out, z, cc * (Scalar(1) + qpow(-2)));
        } else {
            fail("MapUndefined", "element is not in the span of 1, a, b, c, d");
        }
    }
    return out;
}

std::shared_ptr<Coaction> B_coaction(std::shared_ptr<Presentation> B, std::shared_ptr<Hopf> H,
                                     std::shared_ptr<RForm> R) {
    auto C = std::make_shared<Coaction>(B, H);
    Transmuted T(H, R);
    const Presentation* Hp = H->algebra().get();
    for (Letter l : {Letter{0, 1}, Letter{0, -1}, Letter{1, 1}, Letter{2, 1}}) {
        Tensor ad = T.ad_coaction(B_letter_image(B.get(), Hp, l));
        Tensor t({B.get(), Hp});
        for (auto& [k, c] : ad.terms()) {
            Element lb = slq2_linear_to_B(Hp, B.get(), Element{{k[0], Scalar(1)}});
            for (auto& [bm, bc] : lb) t.add({bm, k[1]}, c * bc);
        }
        C->set_coact(l, t);
    }
    return C;
}

std::shared_ptr<Braiding> B_braiding(std::shared_ptr<Presentation> B, std::shared_ptr<Hopf> H,
                                     std::shared_ptr<RForm> R, BraidMode mode) {
    auto Br = std::make_shared<Braiding>(H, R, mode);
    Br->register_coaction(B_coaction(B, H, R));
    const Presentation* P = B.get();
    const Scalar one(1), f2 = fq(2);
    auto put = [&](const char* l, const char* r, Tensor t) {
        Br->add_oracle(P, P, P->parse_monomial(l), P->parse_monomial(r), std::move(t));
    };
    put("x", "x", pair_tensor(P, {{{"x", "x"}, qpow(2)}}));
    put("x", "y", pair_tensor(P, {{{"y", "x"}, qpow(-2)}}));
    put("x", "z", pair_tensor(P, {{{"z", "x"}, one}}));
    put("x", "u", pair_tensor(P, {{{"u", "x"}, one}}));
    put("y", "x", pair_tensor(P, {{{"x", "y"}, qpow(-2)},
                                  {{"y", "x"}, (one - qpow(-2)) * f2},
                                  {{"z", "z"}, -(one + qpow(-2)) * f2}}));
    put("y", "y", pair_tensor(P, {{{"y", "y"}, qpow(2)}}));
    put("y", "z", pair_tensor(P, {{{"z", "y"}, one}, {{"y", "z"}, f2}}));
    put("y", "u", pair_tensor(P, {{{"u", "y"}, one}, {{"y", "z"}, -f2}}));
    put("z", "x", pair_tensor(P, {{{"x", "z"}, one}, {{"z", "x"}, f2}}));
    put("z", "y", pair_tensor(P, {{{"y", "z"}, one}}));
    put("z", "z", pair_tensor(P, {{{"z", "z"}, one}, {{"y", "x"}, qpow(-2) - one}}));
    put("z", "u", pair_tensor(P, {{{"u", "z"}, one}, {{"y", "x"}, one - qpow(-2)}}));
    put("u", "x", pair_tensor(P, {{{"x", "u"}, one}, {{"z", "x"}, -f2}}));
    put("u", "y", pair_tensor(P, {{{"y", "u"}, one}}));
    put("u", "z", pair_tensor(P, {{{"z", "u"}, one}, {{"y", "x"}, one - qpow(-2)}}));
    put("u", "u", pair_tensor(P, {{{"u", "u"}, one}, {{"y", "x"}, qpow(-2) - one}}));
    // PBW-monomial families.  bracket(j, k) is the element
    // u^{-1}[x u^j z^k - u^j z^k x]; for j >= 1 the u^{-1} cancels directly,
    // for j = 0 it expands through (z + (1-q^2)u)^k, whose non-leading terms
    // all carry a positive power of u.
    Monomial xm = P->parse_monomial("x"), ym = P->parse_monomial("y"),
             um = P->parse_monomial("u");
    auto bracket = [&](int j, int k) -> Element {
        if (j >= 1) {
            Monomial ujk = P->mono({0, j - 1, k});
            return scaled(P->mul(xm, ujk), qpow(-2)) - P->mul(ujk, xm);
        }
        Element out;
        for (int l = 0; l <= k - 1; l++)
            add_term(out, P->mono({1, k - l - 1, l}),
                     -qpow(-2) * Scalar(binom(k, l)) * spow(one - qpow(2), k - l));
        return out;
    };
    for (int i = 0; i <= 2; i++)
        for (int j = 0; j <= 2; j++)
            for (int k = 0; k <= 2; k++) {
                Monomial xv = P->mono({i, j, k});
                Monomial yv = P->mono({-i, j, k});
                Tensor t1({P, P});
                t1.add({ym, xv}, qpow(-2 * i));
                Br->add_oracle(P, P, xv, ym, t1);
                Tensor t2({P, P});
                t2.add({ym, yv}, qpow(2 * i));
                Br->add_oracle(P, P, yv, ym, t2);
                Tensor t3({P, P});
                t3.add({um, xv}, one);
                Element xb = P->mul(Element{{P->mono({i, 0, 0}), one}}, bracket(j, k));
                for (auto& [m, c] : xb) t3.add({ym, m}, qpow(-2 * i) * c);
                Br->add_oracle(P, P, xv, um, t3);
                Tensor t4({P, P});
                t4.add({um, yv}, one);
                if (i >= 1) {
                    Element mid =
                        P->mul(Element{{P->mono({-(i - 1), j, k}), one}},
                               Element{{P->parse_monomial("z"), one + qpow(-2)},
                                       {um, qpow(-2) - qpow(-2 * i)}});
                    for (auto& [m, c] : mid) t4.add({ym, m}, (one - qpow(2 * i)) * c);
                }
                Element yb = P->mul(Element{{P->mono({-i, 0, 0}), one}}, bracket(j, k));
                for (auto& [m, c] : yb) t4.add({ym, m}, qpow(2 * i) * c);
                Br->add_oracle(P, P, yv, um, t4);
            }
    return Br;
}

// ---------------------------------------------------------------------------
// Ribbon automorphism generator tables
// ---------------------------------------------------------------------------

std::map<Letter, Element> scaling_sigma_table(const Presentation* A, const Scalar& lambda) {
    std::map<Letter, Element> t;
    for (int s = 0; s < A->slots(); s++)
        t[Letter{s, 1}] = Element{{A->gen(s), lambda}};
    return t;
}

std::map<Letter, Element> slq2_sigma_table(const Presentation* H, int sign) {
    Scalar c = (sign >= 0) ? qhalf(3) : -qhalf(3);
    std::map<Letter, Element> t;
    for (Letter l : {Letter{0, 1}, Letter{0, -1}, Letter{1, 1}, Letter{2, 1}})
        t[l] = Element{{H->gen(l.slot, l.sign), c}};
    return t;
}

std::map<Letter, Element> B_sigma_table(const Presentation* B, int sign) {
    Scalar s = (sign >= 0) ? Scalar(1) : Scalar(-1);
    Monomial u = B->parse_monomial("u"), z = B->parse_monomial("z");
    std::map<Letter, Element> t;
    t[Letter{0, 1}] = Element{{B->parse_monomial("x"), s * qpow(4)}};
    t[Letter{0, -1}] = Element{{B->parse_monomial("y"), s * qpow(4)}};
    t[Letter{2, 1}] = Element{{z, s * qpow(4)}};
    t[Letter{1, 1}] = Element{{u, s}, {z, s * (Scalar(1) - qpow(4))}};
    return t;
}

std::map<Letter, Element> toy3_sigma_table(const Presentation* A) {
    Monomial x = A->gen(0), y = A->gen(1);
    std::map<Letter, Element> t;
    t[Letter{0, 1}] = Element{{x, Scalar(1)}};
    t[Letter{1, 1}] = Element{{x, Scalar(1)}, {y, Scalar(1)}};
    return t;
}

// ---------------------------------------------------------------------------
// Catalogued free resolutions
// ---------------------------------------------------------------------------

ResolutionSpec line_resolution(std::shared_ptr<Presentation> A) {
    ResolutionSpec R;
    R.A = A;
    R.ranks = {1, 1};
    R.boundary = {{{A->parse_element("x")}}};
    R.shifts = {{{0}}, {{1}}};
    R.graded = true;
    return R;
}

ResolutionSpec plane_resolution(std::shared_ptr<Presentation> A) {
    ResolutionSpec R;
    R.A = A;
    R.ranks = {1, 2, 1};
    R.boundary = {
        {{A->parse_element("x")}, {A->parse_element("y")}},
        {{A->parse_element("y"), A->parse_element("-p^4*x")}},
    };
    R.shifts = {{{0, 0}}, {{1, 0}, {0, 1}}, {{1, 1}}};
    R.graded = true;
    return R;
}

ResolutionSpec B_resolution(std::shared_ptr<Presentation> B) {
    ResolutionSpec R;
    R.A = B;
    Element x = B->parse_element("x"), y = B->parse_element("y");
    Element um1 = B->parse_element("u") - B->parse_element("1");
    Element zero;
    // (1 - q^2)(u + 1)
    Element rib = scaled(B->parse_element("u") + B->parse_element("1"), Scalar(1) - qpow(2));
    R.ranks = {1, 3, 3, 1};
    R.boundary = {
        {{x}, {y}, {um1}},
        {{B->parse_element("p^-8*u") - B->parse_element("1"), zero, scaled(x, Scalar(-1))},
         {zero, B->parse_element("p^8*u") - B->parse_element("1"), scaled(y, Scalar(-1))},
         {scaled(y, Scalar(-1)), B->parse_element("p^8*x"), rib}},
        {{y, B->parse_element("-p^8*x"), um1}},
    };
    R.shifts = {{{0}}, {{1}, {-1}, {0}}, {{1}, {-1}, {0}}, {{0}}};
    R.graded = false;  // the degree blocks x^s u^j z^k are infinite; use windows
    return R;
}

// ---------------------------------------------------------------------------
// Quantum-plane proof functionals
// ---------------------------------------------------------------------------

Scalar plane_tau(const Presentation* A, long s, long t, const Tensor& chain) {
    require(chain.nlegs() == 1 && chain.legs()[0] == A, "ArityMismatch",
            "tau_{s,t} evaluates one-leg chains over the plane");
    Scalar out(0);
    for (const auto& [key, c] : chain.terms())
        if (key[0].e[0] == s && key[0].e[1] == t) out = out + c;
    return out;
}

Element plane_partial(const Presentation* A, int which, const Element& a) {
    require(which == 1 || which == 2, "IndexOutOfRange", "plane derivations are partial_1/2");
    (void)A;
    Element out;
    for (const auto& [m, c] : a) {
        long e = which == 1 ? m.e[0] : m.e[1];
        if (e != 0) add_term(out, m, c * Scalar(Rat(e)));
    }
    return out;
}

Scalar plane_phi(const Presentation* A, long s, long t, const Tensor& chain) {
    require(chain.nlegs() == 3, "ArityMismatch",
            "phi_{s,t} evaluates three-leg chains over the plane");
    for (const Presentation* leg : chain.legs())
        require(leg == A, "ArityMismatch", "phi_{s,t} evaluates chains over the plane");
    Scalar out(0);
    for (const auto& [key, c] : chain.terms()) {
        // partial_i acts on monomials by the Euler scalars; the bracket is
        // (m_b n_c - n_b m_c) b c.
        long det = static_cast<long>(key[1].e[0]) * key[2].e[1] -
                   static_cast<long>(key[1].e[1]) * key[2].e[0];
        if (det == 0) continue;
        Element prod = A->mul(Element{{key[0], Scalar(1)}}, A->mul(key[1], key[2]));
        Scalar val(0);
        for (const auto& [m, cc] : prod)
            if (m.e[0] == s && m.e[1] == t) val = val + cc;
        out = out + c * Scalar(Rat(det)) * val;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form oracles
// ---------------------------------------------------------------------------

namespace {

// C(k, l) base^{k-l}.
Scalar scaled_binom(long k, long l, const Scalar& base) {
    return Scalar(Rat(binom(static_cast<int>(k), static_cast<int>(l)))) *
           spow(base, static_cast<int>(k - l));
}

// Braided bracket u^{-1}[x u^j z^k - u^j z^k x] of the transmuted algebra:
// q^{-2} x u^{j-1} z^k - u^{j-1} z^k x for j >= 1, and the expanded binomial
// sum -q^{-2} sum_{l=0}^{k-1} C(k,l) (1-q^2)^{k-l} x z^l u^{k-l-1} for j = 0.
Element B_bracket(const Presentation* B, long j, long k) {
    if (j >= 1) {
        Element left{{B->mono({1, static_cast<int32_t>(j - 1), static_cast<int32_t>(k)}),
                      qpow(-2)}};
        Element right = B->mul(B->mono({0, static_cast<int32_t>(j - 1), static_cast<int32_t>(k)}),
                               B->gen(0, 1));
        return left - right;
    }
    Element out;
    for (long l = 0; l <= k - 1; l++)
        add_term(out,
                 B->mono({1, static_cast<int32_t>(k - l - 1), static_cast<int32_t>(l)}),
                 scaled_binom(k, l, Scalar(1) - qpow(2)) * (-qpow(-2)));
    return out;
}

Element line_raction(const Presentation* A, const Scalar& lambda, const Monomial& m,
                     const Letter& g) {
    require(g.slot == 0 && g.sign > 0, "NotInOracle", "line action catalogued for x only");
    long n = m.e[0];
    return Element{{A->gen(0, static_cast<int>(n) + 1), Scalar(1) - lambda * qpow(n)}};
}

Element plane_raction(const Presentation* A, const Scalar& lambda, const Monomial& m,
                      const Letter& g) {
    long mm = m.e[0], nn = m.e[1];
    Scalar base = Scalar(1) - lambda * qhalf(mm + nn);
    if (g.slot == 0 && g.sign > 0)
        return Element{{A->mono({static_cast<int32_t>(mm + 1), static_cast<int32_t>(nn)}),
                        qpow(nn) * base}};
    if (g.slot == 1 && g.sign > 0)
        return Element{{A->mono({static_cast<int32_t>(mm), static_cast<int32_t>(nn + 1)}),
                        base}};
    fail("NotInOracle", "plane action catalogued for x and y only");
}

Element B_raction(const Presentation* B, const Monomial& m, const Letter& g) {
    long s = m.e[0], j = m.e[1], k = m.e[2];
    if (g.slot == 1 && g.sign > 0)  // <| u  on every PBW monomial
        return Element{{m, qpow(-2 * s)}};
    if (g.slot == 0 && g.sign < 0 && s == 0) {  // u^j z^k <| y
        Element out;
        if (j >= 1) {
            for (long l = 0; l <= k; l++)
                add_term(out,
                         B->mono({-1, static_cast<int32_t>(j - 1 + k - l),
                                  static_cast<int32_t>(l)}),
                         scaled_binom(k, l, Scalar(1) - qpow(-2)) * qpow(2 - 2 * j));
            add_term(out,
                     B->mono({-1, static_cast<int32_t>(j - 1), static_cast<int32_t>(k)}),
                     -qpow(2));
        } else {
            for (long l = 0; l <= k - 1; l++)
                add_term(out,
                         B->mono({-1, static_cast<int32_t>(k - l - 1),
                                  static_cast<int32_t>(l)}),
                         scaled_binom(k, l, Scalar(1) - qpow(-2)) * qpow(2));
        }
        return out;
    }
    if (g.slot == 0 && g.sign > 0 && m.is_unit()) return Element{};  // 1 <| x = 0
    fail("NotInOracle", "transmuted action catalogued for <|u, u^j z^k <|y and 1 <|x");
}

Tensor line_family(const Presentation* A, const Monomial& v, const Monomial& w) {
    Tensor t{{A, A}};
    t.add({w, v}, qpow(static_cast<long>(v.e[0]) * w.e[0]));
    return t;
}

Tensor plane_family(const Presentation* A, const Monomial& v, const Monomial& w) {
    long m = v.e[0], n = v.e[1], a = w.e[0], b = w.e[1];
    Tensor t{{A, A}};
    if (a == 1 && b == 0) {  // Psi(x^m y^n (x) x)
        t.add({w, v}, qhalf(m - n));
        if (n >= 1)
            t.add({A->mono({0, 1}),
                   A->mono({static_cast<int32_t>(m + 1), static_cast<int32_t>(n - 1)})},
                  qhalf(n - m - 2) * fq(n));
        return t;
    }
    if (a == 0 && b == 1) {  // Psi(x^m y^n (x) y)
        t.add({w, v}, qhalf(n - m));
        return t;
    }
    if (m == 1 && n == 0) {  // Psi(x (x) x^a y^b)
        t.add({w, v}, qhalf(a - b));
        return t;
    }
    if (m == 0 && n == 1) {  // Psi(y (x) x^a y^b)
        t.add({w, v}, qhalf(b - a));
        if (a >= 1)
            t.add({A->mono({static_cast<int32_t>(a - 1), static_cast<int32_t>(b + 1)}),
                   A->mono({1, 0})},
                  qhalf(a - b - 2) * fq(a));
        return t;
    }
    fail("NotInOracle", "plane families need a generator on one side");
}

Tensor slq2_family(const Presentation* H, const Monomial& v, const Monomial& w) {
    long s = v.e[0], j = v.e[1], k = v.e[2];
    Tensor t{{H, H}};
    if (w == H->gen(0, 1) && s >= 0) {  // Psi(a^s b^j c^k (x) a)
        t.add({w, v}, qhalf(s - j + k));
        return t;
    }
    if (w == H->gen(2, 1)) {  // Psi(a^s b^j c^k (x) c), any sign of s
        t.add({w, v}, qhalf(s - j + k));
        return t;
    }
    fail("NotInOracle", "slq2 families catalogued for (x) a on a^i b^j c^k and (x) c");
}

Tensor B_family(const Presentation* B, const Monomial& v, const Monomial& w) {
    long s = v.e[0], j = v.e[1], k = v.e[2];
    Monomial ym = B->gen(0, -1), um = B->gen(1, 1);
    Tensor t{{B, B}};
    if (w == ym) {  // Psi(v (x) y) = q^{-2 s} y (x) v
        t.add({w, v}, qpow(-2 * s));
        return t;
    }
    if (w == um) {
        t.add({w, v}, Scalar(1));
        if (s >= 0) {  // x-family: + q^{-2s} y (x) x^s Br(j,k)
            Element tail = B->mul(Element{{B->gen(0, static_cast<int>(s)), Scalar(1)}},
                                  B_bracket(B, j, k));
            for (const auto& [m2, c2] : tail) t.add({ym, m2}, qpow(-2 * s) * c2);
            return t;
        }
        long i = -s;  // y-family, i >= 1
        Scalar head = Scalar(1) - qpow(2 * i);
        Monomial zlift = B->mono({static_cast<int32_t>(-(i - 1)), static_cast<int32_t>(j),
                                  static_cast<int32_t>(k + 1)});
        Monomial ulift = B->mono({static_cast<int32_t>(-(i - 1)), static_cast<int32_t>(j + 1),
                                  static_cast<int32_t>(k)});
        t.add({ym, zlift}, head * (Scalar(1) + qpow(-2)));
        t.add({ym, ulift}, head * (qpow(-2) - qpow(-2 * i)));
        Element tail = B->mul(Element{{B->gen(0, static_cast<int>(s)), Scalar(1)}},
                              B_bracket(B, j, k));
        for (const auto& [m2, c2] : tail) t.add({ym, m2}, qpow(2 * i) * c2);
        return t;
    }
    fail("NotInOracle", "transmuted families catalogued for (x) y and (x) u");
}

} // namespace

std::map<Letter, Element> identity_sigma_table(const Presentation* A) {
    std::map<Letter, Element> t;
    for (int s = 0; s < A->slots(); s++) {
        t[Letter{s, 1}] = Element{{A->gen(s), Scalar(1)}};
        if (A->gens()[s].int_exponents)
            t[Letter{s, -1}] = Element{{A->gen(s, -1), Scalar(1)}};
    }
    return t;
}

// ---------------------------------------------------------------------------
// Example bundles
// ---------------------------------------------------------------------------

const ResolutionSpec& ExampleBundle::require_resolution() const {
    require(resolution.has_value(), "NoResolution",
            "example '" + name + "' has no catalogued free resolution");
    return *resolution;
}

std::vector<std::string> example_names() {
    return {"braided_line", "quantum_plane", "slq2_canonical",
            "slq2_baez",    "braided_B",     "toy3"};
}

namespace {

struct LambdaSpec {
    Scalar value;
    std::string printable;
};

LambdaSpec parse_lambda(const std::string& s) {
    auto colon = s.find(':');
    require(colon != std::string::npos && colon > 0 && colon + 1 < s.size(), "ConfigError",
            "lambda must be 'generic:<scalar>' or 'qpow:<k>'");
    std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    if (head == "generic") {
        Scalar v = Scalar::parse(tail);
        return {v, v.str()};
    }
    if (head == "qpow") {
        long k = 0;
        try {
            size_t used = 0;
            k = std::stol(tail, &used);
            require(used == tail.size(), "ConfigError", "qpow exponent must be an integer");
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail("ConfigError", "qpow exponent must be an integer");
        }
        Scalar v = qhalf(k);  // lambda = q^{k/2}
        return {v, v.str()};
    }
    fail("ConfigError", "lambda must be 'generic:<scalar>' or 'qpow:<k>'");
}

} // namespace

ExampleBundle load_example(const std::string& name, const LoadParams& params) {
    require(params.sign == 1 || params.sign == -1, "ConfigError", "sign must be +1 or -1");
    ExampleBundle b;
    b.name = name;

    bool scaling = (name == "braided_line" || name == "quantum_plane");
    require(params.lambda.empty() || scaling, "ConfigError",
            "example '" + name + "' has fixed ribbon data; lambda does not apply");
    LambdaSpec lam{Scalar(1), ""};
    if (scaling) lam = parse_lambda(params.lambda.empty() ? "generic:3" : params.lambda);

    if (name == "braided_line") {
        b.description = "polynomial line with Psi(x^m (x) x^n) = q^{mn} x^n (x) x^m "
                        "and the scaling ribbon automorphism sigma(x^n) = (lambda q^{n-1})^n x^n";
        b.A = line_presentation();
        b.H = laurent_presentation();
        b.hopf_H = laurent_hopf(b.H);
        b.rform = laurent_rform(b.hopf_H);
        b.braid = line_braiding(b.A, b.hopf_H, b.rform);
        b.hopf_A = line_braided_hopf(b.A);
        b.hopf_A->set_braid_hooks(braid_swap(b.braid), braid_swap(b.braid, true));
        b.sigma = std::make_shared<RibbonAut>(b.A, b.braid,
                                              scaling_sigma_table(b.A.get(), lam.value));
        b.braiding_name = "line";
        b.ribbon = {lam.printable, +1, "sigma(g) = lambda g on the generator"};
        b.resolution = line_resolution(b.A);
        const Presentation* Ap = b.A.get();
        Scalar lv = lam.value;
        b.raction_oracle = [Ap, lv](const Monomial& m, const Letter& g) {
            return line_raction(Ap, lv, m, g);
        };
        b.braiding_family = [Ap](const Monomial& v, const Monomial& w) {
            return line_family(Ap, v, w);
        };
        b.checks = {"relations", "hopf", "rform", "coaction", "braiding",
                    "ribbon",    "braided-hopf", "resolution", "raction"};
        b.theorems = {
            "HH_* = (1, 0) for generic lambda; at lambda = q^{-N} the extra classes "
            "[x^{N+1}] and [x^N (x) x] appear",
            "HC_0..6 = (1,0,1,0,1,0,1) generic; (2,0,1,0,1,0,1) at lambda = q^{-N}",
            "x^n <| x = (1 - lambda q^n) x^{n+1}",
        };
    } else if (name == "quantum_plane") {
        b.description = "Manin plane yx = q xy as a comodule algebra over quantum SL(2), "
                        "with the scaling ribbon automorphism";
        b.A = plane_presentation();
        b.H = slq2_presentation();
        b.hopf_H = slq2_hopf(b.H);
        b.rform = slq2_rform(b.hopf_H);
        b.braid = plane_braiding(b.A, b.hopf_H, b.rform);
        b.hopf_A = plane_braided_hopf(b.A);
        b.hopf_A->set_braid_hooks(braid_swap(b.braid), braid_swap(b.braid, true));
        b.sigma = std::make_shared<RibbonAut>(b.A, b.braid,
                                              scaling_sigma_table(b.A.get(), lam.value));
        b.braiding_name = "plane";
        b.ribbon = {lam.printable, +1, "sigma(g) = lambda g on both generators"};
        b.resolution = plane_resolution(b.A);
        const Presentation* Ap = b.A.get();
        Scalar lv = lam.value;
        b.raction_oracle = [Ap, lv](const Monomial& m, const Letter& g) {
            return plane_raction(Ap, lv, m, g);
        };
        b.braiding_family = [Ap](const Monomial& v, const Monomial& w) {
            return plane_family(Ap, v, w);
        };
        b.checks = {"relations",  "hopf",       "rform",   "coaction",
                    "braiding",   "ribbon",     "braided-hopf-caveat",
                    "resolution", "raction",    "functionals"};
        b.theorems = {
            "HH_* = (1, 0, 0) for generic lambda; (N+3, 2N+2, N+1) at lambda = q^{-N/2}",
            "HC_0..6 = (N+3, N, 2, 0, 2, 0, 2) at lambda = q^{-N/2}",
            "tau_{s,t} (s + t = N + 1) is a cyclic 0-cocycle and phi_{s,t} a Hochschild "
            "2-cocycle pairing nontrivially with the B_1 classes",
        };
    } else if (name == "slq2_canonical") {
        b.description = "quantum SL(2) braided by its canonical right self-coaction, with "
                        "the paired ribbon automorphisms sigma_pm(g) = pm q^{3/2} g";
        b.A = slq2_presentation();
        b.H = b.A;
        b.hopf_H = slq2_hopf(b.H);
        b.rform = slq2_rform(b.hopf_H);
        b.braid = slq2_braiding(b.hopf_H, b.rform);
        b.sigma = std::make_shared<RibbonAut>(b.A, b.braid,
                                              slq2_sigma_table(b.A.get(), params.sign));
        b.braiding_name = "slq2-canonical";
        b.ribbon = {"", params.sign, "sigma_pm(g) = pm q^{3/2} g from the ribbon functional"};
        const Presentation* Ap = b.A.get();
        b.braiding_family = [Ap](const Monomial& v, const Monomial& w) {
            return slq2_family(Ap, v, w);
        };
        b.checks = {"relations", "hopf", "rform", "coaction", "braiding", "ribbon", "varphi"};
        b.theorems = {
            "HH_0 vanishes on truncations: every basis monomial of filtration <= 4 is a "
            "b_1 boundary from filtration <= 6",
            "the coquasitriangular form is the coboundary of the functional varphi, and "
            "(varphi^2)^{-1} is a ribbon functional",
        };
    } else if (name == "slq2_baez") {
        b.description = "quantum SL(2) with the Psi-commutative braiding "
                        "f (x) g -> rbar(f1,g1) g2 (x) f2 r(f3,g3) and sigma = id";
        b.A = slq2_presentation();
        b.H = b.A;
        b.hopf_H = slq2_hopf(b.H);
        b.rform = slq2_rform(b.hopf_H);
        b.braid = baez_braiding(b.hopf_H, b.rform);
        b.sigma = std::make_shared<RibbonAut>(b.A, b.braid,
                                              identity_sigma_table(b.A.get()));
        b.braiding_name = "psi-commutative";
        b.ribbon = {"", +1, "sigma = id (mu . Psi = mu makes the ribbon relation trivial)"};
        b.checks = {"relations", "hopf", "rform", "braiding", "psi-commutative", "ribbon"};
        b.theorems = {
            "mu . Psi = mu holds exactly, so sigma = id satisfies the ribbon relation",
        };
    } else if (name == "braided_B") {
        b.description = "transmuted braided SL(2) on the PBW basis x^i u^j z^k with the "
                        "adjoint-coaction braiding and sigma_pm";
        b.A = B_presentation();
        b.H = slq2_presentation();
        b.hopf_H = slq2_hopf(b.H);
        b.rform = slq2_rform(b.hopf_H);
        b.braid = B_braiding(b.A, b.hopf_H, b.rform);
        b.hopf_A = B_braided_hopf(b.A);
        b.hopf_A->set_braid_hooks(braid_swap(b.braid), braid_swap(b.braid, true));
        b.sigma = std::make_shared<RibbonAut>(b.A, b.braid,
                                              B_sigma_table(b.A.get(), params.sign));
        b.braiding_name = "transmuted-adjoint";
        b.ribbon = {"", params.sign,
                    "sigma_pm(u) = pm[u + (1 - q^4) z], sigma_pm(g) = pm q^4 g on x, y, z"};
        b.resolution = B_resolution(b.A);
        const Presentation* Ap = b.A.get();
        b.raction_oracle = [Ap](const Monomial& m, const Letter& g) {
            return B_raction(Ap, m, g);
        };
        b.braiding_family = [Ap](const Monomial& v, const Monomial& w) {
            return B_family(Ap, v, w);
        };
        b.checks = {"relations", "hopf",      "rform",      "coaction", "braiding",
                    "ribbon",    "braided-hopf", "transmute", "resolution", "raction"};
        b.theorems = {
            "the presentation reproduces the transmuted product, antipode and braiding "
            "of quantum SL(2) through u -> d, x -> qb, y -> qc, z -> (qa - qd)/(q + q^{-1})",
            "H_3 of the length-3 free resolution is one-dimensional, generated by [1; e0]",
            "t = u + z is central",
        };
    } else if (name == "toy3") {
        b.description = "three-dimensional algebra with zero products, flip braiding and "
                        "the triangular ribbon automorphism sigma(y) = x + y; the cyclic "
                        "operator is not split on C_1";
        b.A = toy3_presentation();
        b.braid = toy3_braiding(b.A);
        b.sigma = std::make_shared<RibbonAut>(b.A, b.braid, toy3_sigma_table(b.A.get()));
        b.braiding_name = "flip";
        b.ribbon = {"", +1, "sigma(x) = x, sigma(y) = x + y"};
        b.checks = {"relations", "braiding", "ribbon"};
        b.theorems = {
            "1 - T_1 is not idempotent-split on C_1, and [1 (x) x] is a nonzero class of "
            "H_1(im(1 - T)): the splitting hypothesis of the quotient construction is real",
        };
    } else {
        fail("UnknownExample", "unknown example '" + name + "'; see list-examples");
    }

    if (params.run_axiom_suite) {
        if (b.hopf_H) b.hopf_H->check_axioms(Window{2});
        if (b.rform) b.rform->check_axioms(Window{2});
        if (name == "braided_line" || name == "quantum_plane" || name == "slq2_canonical" ||
            name == "braided_B") {
            b.braid->coaction(b.A.get())->check_axioms(Window{3});
        }
        // The plane's additive coproduct is deliberately not a braided Hopf
        // structure for this braiding (see plane_braided_hopf); skip it.
        if (b.hopf_A && name != "quantum_plane") b.hopf_A->check_axioms(Window{2});
        b.sigma->check_ribbon(*b.braid, Window{2});
        if (b.resolution) b.resolution->check_composites(b.hopf_A.get());
    }
    return b;
}

std::string bundle_to_json(const ExampleBundle& b) {
    nlohmann::json j;
    j["name"] = b.name;
    j["description"] = b.description;
    j["braiding"] = b.braiding_name;
    j["presentation"] = nlohmann::json::parse(b.A->to_json());
    if (b.H && b.H != b.A) j["background"] = nlohmann::json::parse(b.H->to_json());
    j["ribbon"] = {{"lambda", b.ribbon.lambda},
                   {"sign", b.ribbon.sign},
                   {"note", b.ribbon.note}};

    if (b.rform) {
        const Presentation* Hp = b.H.get();
        nlohmann::json r = nlohmann::json::object();
        std::vector<Letter> letters;
        for (int s = 0; s < Hp->slots(); s++) {
            letters.push_back(Letter{s, 1});
            if (Hp->gens()[s].int_exponents) letters.push_back(Letter{s, -1});
        }
        for (Letter f : letters)
            for (Letter g : letters) {
                Monomial mf = Hp->gen(f.slot, f.sign), mg = Hp->gen(g.slot, g.sign);
                Scalar v = b.rform->eval(mf, mg);
                if (!v.is_zero()) r[Hp->str(mf) + "," + Hp->str(mg)] = v.str();
            }
        j["rform"] = r;
    }

    if (b.braid) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : b.braid->oracle_entries())
            arr.push_back({{"v", e.V->str(e.v)},
                           {"w", e.W->str(e.w)},
                           {"result", e.result->str()}});
        j["braiding_oracle"] = arr;
    }

    nlohmann::json fns = nlohmann::json::object();
    if (b.name == "quantum_plane") {
        fns["tau_{s,t}"] = "tau_{s,t}(x^i y^j) = delta_{s,i} delta_{t,j}";
        fns["phi_{s,t}"] =
            "phi_{s,t}(a (x) b (x) c) = tau_{s,t}(a [partial_1(b) partial_2(c) - "
            "partial_2(b) partial_1(c)])";
    } else if (b.name == "slq2_canonical" || b.name == "slq2_baez") {
        Functional vp = slq2_varphi(b.hopf_H);
        nlohmann::json g = nlohmann::json::object();
        for (const Monomial& m : b.H->enumerate_basis(Window{2})) {
            Scalar v = vp.eval(m);
            if (!v.is_zero()) g[b.H->str(m)] = v.str();
        }
        fns["varphi"] = g;
    }
    j["functionals"] = fns;

    if (b.resolution) {
        const ResolutionSpec& R = *b.resolution;
        nlohmann::json res;
        res["ranks"] = R.ranks;
        res["graded"] = R.graded;
        nlohmann::json mats = nlohmann::json::array();
        for (const auto& M : R.boundary) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : M) {
                nlohmann::json cols = nlohmann::json::array();
                for (const auto& e : row) cols.push_back(R.A->str(e));
                rows.push_back(cols);
            }
            mats.push_back(rows);
        }
        res["boundary"] = mats;
        j["resolution"] = res;
    }

    j["checks"] = b.checks;
    j["theorems"] = b.theorems;
    return j.dump(2);
}

} // namespace braidhom
