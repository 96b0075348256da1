#include "braidhom/hopf.hpp"

#include "braidhom/linalg.hpp"

namespace braidhom {

// ---------------------------------------------------------------------------
// Hopf
// ---------------------------------------------------------------------------

Hopf::Hopf(std::shared_ptr<Presentation> H, bool braided)
    : H_(std::move(H)), braided_(braided) {}

void Hopf::set_coproduct(Letter l, const Tensor& t) {
    require(t.legs() == std::vector<const Presentation*>{H_.get(), H_.get()}, "ArityMismatch",
            "coproduct table entry must have legs H,H");
    delta_.insert_or_assign(l, t);
}
void Hopf::set_counit(Letter l, const Scalar& c) { eps_.insert_or_assign(l, c); }
void Hopf::set_antipode(Letter l, const Element& e) { S_.insert_or_assign(l, e); }
void Hopf::set_antipode_inv(Letter l, const Element& e) { Sinv_.insert_or_assign(l, e); }
void Hopf::set_braid_hooks(SwapFn psi, SwapFn psi_inv) {
    psi_ = std::move(psi);
    psi_inv_ = std::move(psi_inv);
}

const Tensor& Hopf::delta_letter(Letter l) const {
    auto it = delta_.find(l);
    if (it == delta_.end())
        fail("MapUndefined", "coproduct undefined on a letter of " + H_->name());
    return it->second;
}

Tensor Hopf::pair_product(const Tensor& ab, const Tensor& cd) const {
    Tensor t = ab.tensor_with(cd);  // legs (a, b, c, d)
    if (braided_) {
        require(static_cast<bool>(psi_), "ConfigError",
                "braided Hopf algebra needs braid hooks before coproduct extension");
        t = psi_(t, 1);
    } else {
        t = plain_flip(t, 1);
    }
    return t.mul_adjacent(0).mul_adjacent(1);
}

Tensor Hopf::coproduct(const Monomial& m) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = delta_cache_.find(m);
        if (it != delta_cache_.end()) return it->second;
    }
    Tensor out({H_.get(), H_.get()});
    if (m.is_unit()) {
        out.add({H_->unit(), H_->unit()}, Scalar(1));
    } else {
        auto w = H_->spell(m);
        Letter last = w.back();
        Monomial mp = m;
        mp.e[last.slot] -= last.sign;
        out = pair_product(coproduct(mp), delta_letter(last));
    }
    std::lock_guard<std::mutex> lk(mu_);
    delta_cache_.emplace(m, out);
    return out;
}

Tensor Hopf::coproduct(const Element& e) const {
    Tensor out({H_.get(), H_.get()});
    for (auto& [m, c] : e) out = out + coproduct(m).scaled(c);
    return out;
}

Tensor Hopf::coproduct_iter(const Monomial& m, int nlegs) const {
    require(nlegs >= 1, "ConfigError", "coproduct_iter needs at least one leg");
    Tensor t = Tensor::from_element(H_.get(), Element{{m, Scalar(1)}});
    for (int k = 1; k < nlegs; k++)
        t = t.apply_at(0, {H_.get(), H_.get()},
                       [&](const Monomial& h) { return coproduct(h); });
    return t;
}

Scalar Hopf::counit(const Monomial& m) const {
    Scalar out(1);
    for (Letter l : H_->spell(m)) {
        auto it = eps_.find(l);
        if (it == eps_.end())
            fail("MapUndefined", "counit undefined on a letter of " + H_->name());
        out = out * it->second;
    }
    return out;
}

Scalar Hopf::counit(const Element& e) const {
    Scalar out(0);
    for (auto& [m, c] : e) out = out + c * counit(m);
    return out;
}

Element Hopf::antipode(const Monomial& m) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = S_cache_.find(m);
        if (it != S_cache_.end()) return it->second;
    }
    Element out;
    if (m.is_unit()) {
        add_term(out, H_->unit(), Scalar(1));
    } else {
        auto w = H_->spell(m);
        Letter last = w.back();
        Monomial mp = m;
        mp.e[last.slot] -= last.sign;
        auto it = S_.find(last);
        if (it == S_.end())
            fail("MapUndefined", "antipode undefined on a letter of " + H_->name());
        Tensor t = Tensor::from_element(H_.get(), antipode(mp))
                       .tensor_with(Tensor::from_element(H_.get(), it->second));
        if (braided_) {
            require(static_cast<bool>(psi_), "ConfigError",
                    "braided Hopf algebra needs braid hooks before the antipode");
            t = psi_(t, 0);
        } else {
            t = plain_flip(t, 0);
        }
        out = tensor_to_element(t.mul_adjacent(0));
    }
    std::lock_guard<std::mutex> lk(mu_);
    S_cache_.emplace(m, out);
    return out;
}

Element Hopf::antipode(const Element& e) const {
    Element out;
    for (auto& [m, c] : e)
        for (auto& [m2, c2] : antipode(m)) add_term(out, m2, c * c2);
    return out;
}

Element Hopf::antipode_inv(const Monomial& m) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = Sinv_cache_.find(m);
        if (it != Sinv_cache_.end()) return it->second;
    }
    Element out;
    if (m.is_unit()) {
        add_term(out, H_->unit(), Scalar(1));
    } else {
        auto w = H_->spell(m);
        Letter last = w.back();
        Monomial mp = m;
        mp.e[last.slot] -= last.sign;
        auto it = Sinv_.find(last);
        if (it == Sinv_.end())
            fail("MapUndefined", "inverse antipode undefined on a letter of " + H_->name());
        Tensor t = Tensor::from_element(H_.get(), antipode_inv(mp))
                       .tensor_with(Tensor::from_element(H_.get(), it->second));
        if (braided_) {
            require(static_cast<bool>(psi_inv_), "ConfigError",
                    "braided Hopf algebra needs braid hooks before the inverse antipode");
            t = psi_inv_(t, 0);
        } else {
            t = plain_flip(t, 0);
        }
        out = tensor_to_element(t.mul_adjacent(0));
    }
    std::lock_guard<std::mutex> lk(mu_);
    Sinv_cache_.emplace(m, out);
    return out;
}

Element Hopf::antipode_inv(const Element& e) const {
    Element out;
    for (auto& [m, c] : e)
        for (auto& [m2, c2] : antipode_inv(m)) add_term(out, m2, c * c2);
    return out;
}

void Hopf::check_axioms(const Window& w) const {
    const Presentation* P = H_.get();
    auto basis = P->enumerate_basis(w);
    auto to_eps = [&](const Monomial& h) { return Tensor::scalar(counit(h)); };
    for (const Monomial& h : basis) {
        Element he{{h, Scalar(1)}};
        Tensor d = coproduct(h);
        // counit laws
        Tensor left = d.apply_at(0, {}, to_eps);
        Tensor right = d.apply_at(1, {}, to_eps);
        require(left == Tensor::from_element(P, he), "AxiomViolation",
                "(eps x id) Delta != id at " + P->str(h));
        require(right == Tensor::from_element(P, he), "AxiomViolation",
                "(id x eps) Delta != id at " + P->str(h));
        // coassociativity
        auto dmap = [&](const Monomial& x) { return coproduct(x); };
        Tensor dl = d.apply_at(0, {P, P}, dmap);
        Tensor dr = d.apply_at(1, {P, P}, dmap);
        require(dl == dr, "AxiomViolation", "coassociativity fails at " + P->str(h));
        // antipode laws
        Element want;
        add_term(want, P->unit(), counit(h));
        Element sa = tensor_to_element(
            d.apply_linear(0, [&](const Monomial& x) { return antipode(x); }).mul_adjacent(0));
        Element as = tensor_to_element(
            d.apply_linear(1, [&](const Monomial& x) { return antipode(x); }).mul_adjacent(0));
        require(sa == want, "AxiomViolation", "mu (S x id) Delta != eta eps at " + P->str(h));
        require(as == want, "AxiomViolation", "mu (id x S) Delta != eta eps at " + P->str(h));
        // inverse antipode
        require(antipode_inv(antipode(he)) == he, "AxiomViolation",
                "S^{-1} S != id at " + P->str(h));
        require(antipode(antipode_inv(he)) == he, "AxiomViolation",
                "S S^{-1} != id at " + P->str(h));
    }
    // compatibility with every rewrite rule: Delta, eps, S respect the relations
    for (auto& [lhs, rhs] : P->rules_list()) {
        Element lhs_nf = P->word_element({lhs.first, lhs.second});
        require(coproduct(lhs_nf) == pair_product(delta_letter(lhs.first), delta_letter(lhs.second)),
                "AxiomViolation", "coproduct incompatible with a rewrite rule of " + P->name());
        Element l1{{P->gen(lhs.first.slot, lhs.first.sign), Scalar(1)}};
        Element l2{{P->gen(lhs.second.slot, lhs.second.sign), Scalar(1)}};
        require((counit(lhs_nf) == counit(l1) * counit(l2)), "AxiomViolation",
                "counit incompatible with a rewrite rule of " + P->name());
        Tensor t = Tensor::from_element(P, antipode(l1)).tensor_with(Tensor::from_element(P, antipode(l2)));
        t = braided_ ? psi_(t, 0) : plain_flip(t, 0);
        require(antipode(lhs_nf) == tensor_to_element(t.mul_adjacent(0)), "AxiomViolation",
                "antipode incompatible with a rewrite rule of " + P->name());
        (void)rhs;
    }
}

// ---------------------------------------------------------------------------
// Coaction
// ---------------------------------------------------------------------------

Coaction::Coaction(std::shared_ptr<Presentation> A, std::shared_ptr<Hopf> H)
    : A_(std::move(A)), H_(std::move(H)) {}

void Coaction::set_coact(Letter l, const Tensor& t) {
    require(t.legs() == std::vector<const Presentation*>{A_.get(), H_->algebra().get()},
            "ArityMismatch", "coaction table entry must have legs A,H");
    table_.insert_or_assign(l, t);
}

const Tensor& Coaction::coact_letter(Letter l) const {
    auto it = table_.find(l);
    if (it == table_.end())
        fail("MapUndefined", "coaction undefined on a letter of " + A_->name());
    return it->second;
}

Tensor Coaction::coact(const Monomial& m) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
    }
    const Presentation* A = A_.get();
    const Presentation* H = H_->algebra().get();
    Tensor out({A, H});
    if (m.is_unit()) {
        out.add({A->unit(), H->unit()}, Scalar(1));
    } else {
        auto w = A_->spell(m);
        Letter last = w.back();
        Monomial mp = m;
        mp.e[last.slot] -= last.sign;
        Tensor t = coact(mp).tensor_with(coact_letter(last));  // (A,H,A,H)
        t = plain_flip(t, 1);                                  // (A,A,H,H)
        out = t.mul_adjacent(0).mul_adjacent(1);
    }
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(m, out);
    return out;
}

Tensor Coaction::coact(const Element& e) const {
    Tensor out({A_.get(), H_->algebra().get()});
    for (auto& [m, c] : e) out = out + coact(m).scaled(c);
    return out;
}

void Coaction::check_axioms(const Window& w) const {
    const Presentation* A = A_.get();
    const Presentation* H = H_->algebra().get();
    for (const Monomial& m : A->enumerate_basis(w)) {
        Element me{{m, Scalar(1)}};
        Tensor d = coact(m);
        Tensor ce = d.apply_at(1, {}, [&](const Monomial& h) { return Tensor::scalar(H_->counit(h)); });
        require(ce == Tensor::from_element(A, me), "AxiomViolation",
                "(id x eps) coact != id at " + A->str(m));
        Tensor dl = d.apply_at(0, {A, H}, [&](const Monomial& a) { return coact(a); });
        Tensor dr = d.apply_at(1, {H, H}, [&](const Monomial& h) { return H_->coproduct(h); });
        require(dl == dr, "AxiomViolation", "coaction coassociativity fails at " + A->str(m));
    }
    for (auto& [lhs, rhs] : A->rules_list()) {
        (void)rhs;
        Element lhs_nf = A->word_element({lhs.first, lhs.second});
        Tensor t = coact_letter(lhs.first).tensor_with(coact_letter(lhs.second));
        t = plain_flip(t, 1);
        Tensor prod = t.mul_adjacent(0).mul_adjacent(1);
        require(coact(lhs_nf) == prod, "AxiomViolation",
                "coaction incompatible with a rewrite rule of " + A->name());
    }
}

// ---------------------------------------------------------------------------
// RForm
// ---------------------------------------------------------------------------

RForm::RForm(std::shared_ptr<Hopf> H) : H_(std::move(H)) {
    require(!H_->braided(), "ConfigError",
            "the coquasitriangular form lives on an ordinary Hopf algebra");
}

void RForm::set_base(Letter a, Letter b, const Scalar& v) { base_.insert_or_assign({a, b}, v); }

Scalar RForm::eval(const Monomial& f, const Monomial& g) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find({f, g});
        if (it != cache_.end()) return it->second;
    }
    Scalar out = eval_nolock(f, g);
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(std::make_pair(f, g), out);
    return out;
}

Scalar RForm::eval_nolock(const Monomial& f, const Monomial& g) const {
    const Presentation* P = H_->algebra().get();
    if (f.is_unit()) return H_->counit(g);
    if (g.is_unit()) return H_->counit(f);
    auto wf = P->spell(f);
    if (wf.size() >= 2) {
        // r(f' l, g) = r(f', g1) r(l, g2)
        Letter last = wf.back();
        Monomial fp = f;
        fp.e[last.slot] -= last.sign;
        Monomial lm = P->gen(last.slot, last.sign);
        Scalar out(0);
        for (auto& [k, c] : H_->coproduct(g).terms())
            out = out + c * eval(fp, k[0]) * eval(lm, k[1]);
        return out;
    }
    auto wg = P->spell(g);
    if (wg.size() >= 2) {
        // r(f, g' m) = r(f1, m) r(f2, g')
        Letter last = wg.back();
        Monomial gp = g;
        gp.e[last.slot] -= last.sign;
        Monomial lm = P->gen(last.slot, last.sign);
        Scalar out(0);
        for (auto& [k, c] : H_->coproduct(f).terms())
            out = out + c * eval(k[0], lm) * eval(k[1], gp);
        return out;
    }
    auto it = base_.find({wf[0], wg[0]});
    if (it == base_.end())
        fail("MapUndefined", "r-form base table missing a letter pair in " + P->name());
    return it->second;
}

Scalar RForm::eval(const Element& f, const Element& g) const {
    Scalar out(0);
    for (auto& [mf, cf] : f)
        for (auto& [mg, cg] : g) out = out + cf * cg * eval(mf, mg);
    return out;
}

Scalar RForm::bar(const Monomial& f, const Monomial& g) const {
    return eval(H_->antipode(f), Element{{g, Scalar(1)}});
}

Scalar RForm::bar(const Element& f, const Element& g) const {
    return eval(H_->antipode(f), g);
}

Scalar RForm::theta(const Monomial& f, const Monomial& g) const {
    Scalar out(0);
    for (auto& [kf, cf] : H_->coproduct(f).terms())
        for (auto& [kg, cg] : H_->coproduct(g).terms())
            out = out + cf * cg * eval(kg[0], kf[0]) * eval(kf[1], kg[1]);
    return out;
}

Scalar RForm::theta_bar(const Monomial& f, const Monomial& g) const {
    Scalar out(0);
    for (auto& [kf, cf] : H_->coproduct(f).terms())
        for (auto& [kg, cg] : H_->coproduct(g).terms())
            out = out + cf * cg * bar(kf[0], kg[0]) * bar(kg[1], kf[1]);
    return out;
}

void RForm::check_axioms(const Window& w) const {
    const Presentation* P = H_->algebra().get();
    auto basis = P->enumerate_basis(w);
    for (const Monomial& f : basis)
        for (const Monomial& g : basis) {
            // convolution inverse law: r(f1,g1) rbar(f2,g2) = eps(f) eps(g)
            Scalar lhs(0), lhs2(0);
            for (auto& [kf, cf] : H_->coproduct(f).terms())
                for (auto& [kg, cg] : H_->coproduct(g).terms()) {
                    lhs = lhs + cf * cg * eval(kf[0], kg[0]) * bar(kf[1], kg[1]);
                    lhs2 = lhs2 + cf * cg * bar(kf[0], kg[0]) * eval(kf[1], kg[1]);
                }
            Scalar want = H_->counit(f) * H_->counit(g);
            require(lhs == want, "AxiomViolation", "r * rbar != eps x eps on " + P->name());
            require(lhs2 == want, "AxiomViolation", "rbar * r != eps x eps on " + P->name());
            // commutation identity: g f = r(f1,g1) f2 g2 rbar(f3,g3)
            Element rhs;
            for (auto& [kf, cf] : H_->coproduct_iter(f, 3).terms())
                for (auto& [kg, cg] : H_->coproduct_iter(g, 3).terms()) {
                    Scalar c = cf * cg * eval(kf[0], kg[0]) * bar(kf[2], kg[2]);
                    if (c.is_zero()) continue;
                    for (auto& [m, cm] : P->mul(kf[1], kg[1])) add_term(rhs, m, c * cm);
                }
            require(P->mul(g, f) == rhs, "AxiomViolation",
                    "commutation identity fails on " + P->name());
        }
    // bicharacter laws on letter pairs against basis elements
    std::vector<Letter> letters;
    for (int i = 0; i < P->slots(); i++) {
        letters.push_back({i, 1});
        if (P->gens()[i].int_exponents) letters.push_back({i, -1});
    }
    for (Letter l1 : letters)
        for (Letter l2 : letters)
            for (const Monomial& h : basis) {
                Element prod = P->word_element({l1, l2});
                Monomial m1 = P->gen(l1.slot, l1.sign), m2 = P->gen(l2.slot, l2.sign);
                // r(l1 l2, h) = r(l1, h1) r(l2, h2)
                Scalar rhs(0);
                for (auto& [k, c] : H_->coproduct(h).terms())
                    rhs = rhs + c * eval(m1, k[0]) * eval(m2, k[1]);
                require(eval(prod, Element{{h, Scalar(1)}}) == rhs, "AxiomViolation",
                        "product law in the first argument fails on " + P->name());
                // r(h, l1 l2) = r(h1, l2) r(h2, l1)
                Scalar rhs2(0);
                for (auto& [k, c] : H_->coproduct(h).terms())
                    rhs2 = rhs2 + c * eval(k[0], m2) * eval(k[1], m1);
                require(eval(Element{{h, Scalar(1)}}, prod) == rhs2, "AxiomViolation",
                        "product law in the second argument fails on " + P->name());
            }
}

// ---------------------------------------------------------------------------
// Functional / BilinearForm
// ---------------------------------------------------------------------------

Functional::Functional(std::shared_ptr<Hopf> H, std::function<Scalar(const Monomial&)> f)
    : H_(std::move(H)), f_(std::move(f)) {}

Functional::Functional(std::shared_ptr<Hopf> H, std::map<Monomial, Scalar> table, Window domain)
    : H_(std::move(H)),
      table_(std::make_shared<std::map<Monomial, Scalar>>(std::move(table))),
      domain_(domain) {
    auto tbl = table_;
    auto dom = *domain_;
    auto P = H_->algebra();
    f_ = [tbl, dom, P](const Monomial& m) -> Scalar {
        auto it = tbl->find(m);
        if (it != tbl->end()) return it->second;
        require(!P->in_window(m, dom), "OutsideWindow",
                "window table is missing an in-window monomial");
        fail("OutsideWindow", "functional evaluated outside its window: " + P->str(m));
    };
}

Scalar Functional::eval(const Monomial& m) const { return f_(m); }

Scalar Functional::eval(const Element& e) const {
    Scalar out(0);
    for (auto& [m, c] : e) out = out + c * f_(m);
    return out;
}

Functional Functional::convolve(const Functional& o) const {
    require(H_ == o.H_, "ConfigError", "convolution of functionals on different Hopf algebras");
    auto H = H_;
    auto a = *this;
    auto b = o;
    return Functional(H, [H, a, b](const Monomial& m) {
        Scalar out(0);
        for (auto& [k, c] : H->coproduct(m).terms()) out = out + c * a.eval(k[0]) * b.eval(k[1]);
        return out;
    });
}

Functional Functional::convolution_inverse(const Window& w) const {
    auto P = H_->algebra();
    auto basis = P->enumerate_basis(w);
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); i++) index[basis[i]] = static_cast<int>(i);
    SMat<Scalar> A(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    SVec<Scalar> b;
    for (size_t i = 0; i < basis.size(); i++) {
        for (auto& [k, c] : H_->coproduct(basis[i]).terms()) {
            auto it = index.find(k[1]);
            require(it != index.end(), "WindowOverflow",
                    "coproduct leg escapes the window in convolution_inverse");
            A.add(static_cast<int>(i), it->second, c * eval(k[0]));
        }
        svec_add(b, static_cast<int>(i), H_->counit(basis[i]));
    }
    require(kernel_basis(A).empty(), "NotInvertible",
            "windowed convolution inverse is not unique");
    auto sol = solve(A, b);
    require(sol.has_value(), "NotInvertible", "functional has no convolution inverse on the window");
    std::map<Monomial, Scalar> table;
    for (size_t i = 0; i < basis.size(); i++) {
        auto it = sol->find(static_cast<int>(i));
        table[basis[i]] = (it == sol->end()) ? Scalar(0) : it->second;
    }
    return Functional(H_, std::move(table), w);
}

BilinearForm::BilinearForm(std::shared_ptr<Hopf> H,
                           std::function<Scalar(const Monomial&, const Monomial&)> f)
    : H_(std::move(H)), f_(std::move(f)) {}

Scalar BilinearForm::eval(const Monomial& a, const Monomial& b) const { return f_(a, b); }

Scalar BilinearForm::eval(const Element& a, const Element& b) const {
    Scalar out(0);
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) out = out + ca * cb * f_(ma, mb);
    return out;
}

BilinearForm BilinearForm::convolve(const BilinearForm& o) const {
    require(H_ == o.H_, "ConfigError", "convolution of forms on different Hopf algebras");
    auto H = H_;
    auto a = *this;
    auto b = o;
    return BilinearForm(H, [H, a, b](const Monomial& x, const Monomial& y) {
        Scalar out(0);
        for (auto& [kx, cx] : H->coproduct(x).terms())
            for (auto& [ky, cy] : H->coproduct(y).terms())
                out = out + cx * cy * a.eval(kx[0], ky[0]) * b.eval(kx[1], ky[1]);
        return out;
    });
}

BilinearForm BilinearForm::convolution_inverse(const Window& w, size_t max_unknowns) const {
    auto P = H_->algebra();
    auto basis = P->enumerate_basis(w);
    size_t n = basis.size();
    require(n * n <= max_unknowns, "WindowOverflow",
            "bilinear convolution inverse window is too large");
    std::map<Monomial, int> index;
    for (size_t i = 0; i < n; i++) index[basis[i]] = static_cast<int>(i);
    auto pair_index = [&](int i, int j) { return i * static_cast<int>(n) + j; };
    SMat<Scalar> A(static_cast<int>(n * n), static_cast<int>(n * n));
    SVec<Scalar> b;
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            int row = pair_index(static_cast<int>(i), static_cast<int>(j));
            for (auto& [kx, cx] : H_->coproduct(basis[i]).terms())
                for (auto& [ky, cy] : H_->coproduct(basis[j]).terms()) {
                    auto it1 = index.find(kx[1]);
                    auto it2 = index.find(ky[1]);
                    require(it1 != index.end() && it2 != index.end(), "WindowOverflow",
                            "coproduct leg escapes the window in convolution_inverse");
                    A.add(row, pair_index(it1->second, it2->second),
                          cx * cy * eval(kx[0], ky[0]));
                }
            svec_add(b, row, H_->counit(basis[i]) * H_->counit(basis[j]));
        }
    require(kernel_basis(A).empty(), "NotInvertible",
            "windowed bilinear convolution inverse is not unique");
    auto sol = solve(A, b);
    require(sol.has_value(), "NotInvertible", "bilinear form has no convolution inverse");
    auto table = std::make_shared<std::map<std::pair<Monomial, Monomial>, Scalar>>();
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            auto it = sol->find(pair_index(static_cast<int>(i), static_cast<int>(j)));
            if (it != sol->end()) (*table)[{basis[i], basis[j]}] = it->second;
        }
    auto Pw = w;
    auto Pp = P;
    return BilinearForm(H_, [table, Pw, Pp](const Monomial& x, const Monomial& y) -> Scalar {
        auto it = table->find({x, y});
        if (it != table->end()) return it->second;
        require(Pp->in_window(x, Pw) && Pp->in_window(y, Pw), "OutsideWindow",
                "bilinear form evaluated outside its window");
        return Scalar(0);
    });
}

void BilinearForm::check_inverse_of(const BilinearForm& g, const Window& w) const {
    auto P = H_->algebra();
    auto basis = P->enumerate_basis(w);
    BilinearForm fg = g.convolve(*this);
    BilinearForm gf = convolve(g);
    for (auto& x : basis)
        for (auto& y : basis) {
            Scalar want = H_->counit(x) * H_->counit(y);
            require(fg.eval(x, y) == want, "AxiomViolation", "form * inverse != eps x eps");
            require(gf.eval(x, y) == want, "AxiomViolation", "inverse * form != eps x eps");
        }
}

// ---------------------------------------------------------------------------
// Coboundaries, twists, banal transformation
// ---------------------------------------------------------------------------

BilinearForm cochain_boundary(const Functional& phi, const Functional& phibar) {
    auto H = phi.hopf();
    return BilinearForm(H, [H, phi, phibar](const Monomial& x, const Monomial& y) {
        const Presentation* P = H->algebra().get();
        Scalar out(0);
        for (auto& [kx, cx] : H->coproduct(x).terms())
            for (auto& [ky, cy] : H->coproduct(y).terms())
                out = out + cx * cy * phi.eval(kx[0]) * phi.eval(ky[0]) *
                                phibar.eval(P->mul(kx[1], ky[1]));
        return out;
    });
}

BilinearForm cochain_boundary_inverse(const Functional& phi, const Functional& phibar) {
    auto H = phi.hopf();
    return BilinearForm(H, [H, phi, phibar](const Monomial& x, const Monomial& y) {
        const Presentation* P = H->algebra().get();
        Scalar out(0);
        for (auto& [kx, cx] : H->coproduct(x).terms())
            for (auto& [ky, cy] : H->coproduct(y).terms())
                out = out + cx * cy * phi.eval(P->mul(kx[0], ky[0])) * phibar.eval(kx[1]) *
                                phibar.eval(ky[1]);
        return out;
    });
}

Element twisted_product_hopf(const Hopf& H, const BilinearForm& F, const BilinearForm& Fbar,
                             const Element& a, const Element& b) {
    const Presentation* P = H.algebra().get();
    Element out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Tensor ta = H.coproduct_iter(ma, 3);
            Tensor tb = H.coproduct_iter(mb, 3);
            for (auto& [ka, ca2] : ta.terms())
                for (auto& [kb, cb2] : tb.terms()) {
                    Scalar c = ca * cb * ca2 * cb2 * F.eval(ka[0], kb[0]) * Fbar.eval(ka[2], kb[2]);
                    if (c.is_zero()) continue;
                    for (auto& [m, cm] : P->mul(ka[1], kb[1])) add_term(out, m, c * cm);
                }
        }
    return out;
}

Element twisted_product_comodule(const Coaction& coact, const BilinearForm& theta_bar,
                                 const Element& f, const Element& g) {
    const Presentation* A = coact.comodule().get();
    Element out;
    for (auto& [kf, cf] : coact.coact(f).terms())
        for (auto& [kg, cg] : coact.coact(g).terms()) {
            Scalar c = cf * cg * theta_bar.eval(kf[1], kg[1]);
            if (c.is_zero()) continue;
            for (auto& [m, cm] : A->mul(kf[0], kg[0])) add_term(out, m, c * cm);
        }
    return out;
}

Element banal_transform(const Hopf& H, const Functional& phi, const Functional& phibar,
                        const Element& h) {
    Element out;
    for (auto& [m, c] : h) {
        Tensor t = H.coproduct_iter(m, 3);
        for (auto& [k, ck] : t.terms()) {
            Scalar v = c * ck * phibar.eval(k[0]) * phi.eval(k[2]);
            add_term(out, k[1], v);
        }
    }
    return out;
}

} // namespace braidhom
