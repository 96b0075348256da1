#include "braidhom/braid.hpp"

#include "braidhom/linalg.hpp"

namespace braidhom {

// ---------------------------------------------------------------------------
// Braiding
// ---------------------------------------------------------------------------

Braiding::Braiding(std::shared_ptr<Hopf> H, std::shared_ptr<RForm> r, BraidMode mode)
    : H_(std::move(H)), r_(std::move(r)), mode_(mode) {
    require(H_ == r_->hopf(), "ConfigError", "r-form is not defined on the symmetry Hopf algebra");
}

void Braiding::register_coaction(std::shared_ptr<Coaction> c) {
    require(c->hopf() == H_, "ConfigError", "coaction is over a different symmetry Hopf algebra");
    coact_[c->comodule().get()] = std::move(c);
}

std::shared_ptr<Coaction> Braiding::coaction(const Presentation* A) const {
    auto it = coact_.find(A);
    require(it != coact_.end(), "MapUndefined",
            "no coaction registered for " + (A ? A->name() : std::string("<null>")));
    return it->second;
}

void Braiding::set_custom_engine(
    const Presentation* A,
    std::function<Tensor(const Monomial&, const Monomial&, bool inverse)> f) {
    custom_[A] = std::move(f);
}

void Braiding::add_oracle(const Presentation* V, const Presentation* W, const Monomial& v,
                          const Monomial& w, Tensor result) {
    require(result.legs() == std::vector<const Presentation*>{W, V}, "ArityMismatch",
            "braiding oracle entry must have legs {W, V}");
    oracle_[OracleKey{V, W, v, w}] = std::move(result);
}

bool Braiding::has_oracle(const Presentation* V, const Presentation* W, const Monomial& v,
                          const Monomial& w) const {
    return oracle_.count(OracleKey{V, W, v, w}) != 0;
}

std::vector<Braiding::OracleEntry> Braiding::oracle_entries() const {
    std::vector<OracleEntry> out;
    out.reserve(oracle_.size());
    for (const auto& [key, result] : oracle_) {
        out.push_back(OracleEntry{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                  std::get<3>(key), &result});
    }
    return out;
}

Tensor Braiding::engine_pair(const Presentation* V, const Monomial& v, const Presentation* W,
                             const Monomial& w, bool inverse) const {
    if (V == W) {
        auto it = custom_.find(V);
        if (it != custom_.end()) return it->second(v, w, inverse);
    }
    auto cv = coaction(V);
    auto cw = coaction(W);
    Tensor out({W, V});
    for (auto& [kv, cvv] : cv->coact(v).terms())
        for (auto& [kw, cww] : cw->coact(w).terms()) {
            Scalar c = inverse ? r_->bar(kw[1], kv[1]) : r_->eval(kv[1], kw[1]);
            out.add({kw[0], kv[0]}, cvv * cww * c);
        }
    return out;
}

Tensor Braiding::pair_nolock(const Presentation* V, const Monomial& v, const Presentation* W,
                             const Monomial& w, bool inverse) const {
    if (mode_ == BraidMode::Oracle && !inverse) {
        auto it = oracle_.find(OracleKey{V, W, v, w});
        require(it != oracle_.end(), "NotInOracle",
                "braiding oracle has no entry for " + V->str(v) + " (x) " + W->str(w));
        return it->second;
    }
    CacheKey key{V, W, v, w, inverse};
    auto hit = cache_.find(key);
    Tensor t = (hit != cache_.end()) ? hit->second : engine_pair(V, v, W, w, inverse);
    if (hit == cache_.end()) cache_.emplace(key, t);
    if (mode_ == BraidMode::Both && !inverse) {
        auto it = oracle_.find(OracleKey{V, W, v, w});
        if (it != oracle_.end())
            require(t == it->second, "AxiomViolation",
                    "engine braiding disagrees with the oracle on " + V->str(v) + " (x) " +
                        W->str(w));
    }
    return t;
}

Tensor Braiding::pair(const Presentation* V, const Monomial& v, const Presentation* W,
                      const Monomial& w, bool inverse) const {
    std::lock_guard<std::mutex> lock(mu_);
    return pair_nolock(V, v, W, w, inverse);
}

Tensor Braiding::pair(const Presentation* V, const Element& v, const Presentation* W,
                      const Element& w, bool inverse) const {
    std::lock_guard<std::mutex> lock(mu_);
    Tensor out({W, V});
    for (auto& [mv, cv] : v)
        for (auto& [mw, cw] : w)
            out = out + pair_nolock(V, mv, W, mw, inverse).scaled(cv * cw);
    return out;
}

Tensor Braiding::apply(const Tensor& chain, int leg, bool inverse) const {
    require(leg >= 0 && leg + 1 < chain.nlegs(), "IndexOutOfRange",
            "braiding leg out of range");
    const Presentation* V = chain.legs()[leg];
    const Presentation* W = chain.legs()[leg + 1];
    return chain.apply_at2(leg, {W, V}, [&](const Monomial& a, const Monomial& b) {
        return pair(V, a, W, b, inverse);
    });
}

Tensor Braiding::apply_block(const Tensor& chain, int m, int n, bool inverse) const {
    require(0 <= m && m <= n && n + 1 < chain.nlegs(), "IndexOutOfRange",
            "block braiding indices out of range");
    Tensor t = chain;
    if (!inverse) {
        for (int i = n; i >= m; --i) t = apply(t, i, false);
    } else {
        for (int i = m; i <= n; ++i) t = apply(t, i, true);
    }
    return t;
}

// ---------------------------------------------------------------------------
// RibbonAut
// ---------------------------------------------------------------------------

RibbonAut::RibbonAut(std::shared_ptr<Presentation> A, std::shared_ptr<const Braiding> braid,
                     std::map<Letter, Element> gen_values)
    : A_(std::move(A)), braid_(std::move(braid)), table_(std::move(gen_values)) {
    for (auto& [l, e] : table_) {
        (void)l;
        for (auto& [m, c] : e) {
            (void)c;
            require(A_->is_normal(m), "ConfigError", "ribbon generator image is not normal");
        }
    }
}

RibbonAut::RibbonAut(std::shared_ptr<Coaction> coact, Functional s)
    : A_(coact->comodule()), coact_(std::move(coact)), s_(std::move(s)) {}

Element RibbonAut::apply_nolock(const Monomial& m) const {
    auto hit = cache_.find(m);
    if (hit != cache_.end()) return hit->second;
    Element out;
    if (s_) {
        for (auto& [k, c] : coact_->coact(m).terms()) add_term(out, k[0], c * s_->eval(k[1]));
    } else if (m.is_unit()) {
        add_term(out, m, Scalar(1));
    } else {
        auto word = A_->spell(m);
        if (word.size() == 1) {
            auto it = table_.find(word[0]);
            require(it != table_.end(), "MapUndefined",
                    "ribbon automorphism undefined on a generator of " + A_->name());
            out = it->second;
        } else {
            // sigma(l t) = mu (sigma (x) sigma) Psi^2 (l (x) t)
            Letter l = word[0];
            Monomial head = A_->gen(l.slot, l.sign);
            Monomial tail = m;
            tail.e[l.slot] -= l.sign;
            Tensor t = Tensor::from_element(A_.get(), Element{{head, Scalar(1)}})
                           .tensor_with(Tensor::from_element(A_.get(), Element{{tail, Scalar(1)}}));
            t = braid_->apply(t, 0);
            t = braid_->apply(t, 0);
            for (auto& [k, c] : t.terms()) {
                Element prod = A_->mul(apply_nolock(k[0]), apply_nolock(k[1]));
                for (auto& [pm, pc] : prod) add_term(out, pm, c * pc);
            }
        }
    }
    cache_.emplace(m, out);
    return out;
}

Element RibbonAut::apply(const Monomial& m) const {
    std::lock_guard<std::mutex> lock(mu_);
    return apply_nolock(m);
}

Element RibbonAut::apply(const Element& e) const {
    std::lock_guard<std::mutex> lock(mu_);
    Element out;
    for (auto& [m, c] : e) {
        Element s = apply_nolock(m);
        for (auto& [sm, sc] : s) add_term(out, sm, c * sc);
    }
    return out;
}

Element RibbonAut::inverse(const Monomial& m) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto hit = inv_cache_.find(m);
    if (hit != inv_cache_.end()) return hit->second;
    Window w{A_->filtration(m), A_->multidegree(m)};
    auto basis = A_->enumerate_basis(w);
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); i++) index[basis[i]] = static_cast<int>(i);
    auto mit = index.find(m);
    require(mit != index.end(), "IndexOutOfRange", "monomial missing from its own window");
    SMat<Scalar> M(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); j++)
        for (auto& [mm, c] : apply_nolock(basis[j])) {
            auto it = index.find(mm);
            require(it != index.end(), "NotInvertible",
                    "ribbon automorphism leaves the multidegree window");
            M.add(it->second, static_cast<int>(j), c);
        }
    SVec<Scalar> b;
    svec_add(b, mit->second, Scalar(1));
    auto sol = solve(M, b);
    require(sol.has_value(), "NotInvertible",
            "ribbon automorphism is not invertible on the window");
    Element out;
    for (auto& [j, c] : *sol) add_term(out, basis[j], c);
    inv_cache_.emplace(m, out);
    return out;
}

Element RibbonAut::inverse(const Element& e) const {
    Element out;
    for (auto& [m, c] : e) {
        Element s = inverse(m);
        for (auto& [sm, sc] : s) add_term(out, sm, c * sc);
    }
    return out;
}

void RibbonAut::check_ribbon(const Braiding& B, const Window& w) const {
    Element one{{A_->unit(), Scalar(1)}};
    require(apply(A_->unit()) == one, "AxiomViolation", "sigma(1) != 1 on " + A_->name());
    auto basis = A_->enumerate_basis(w);
    for (const Monomial& f : basis) {
        Element sf = apply(f);
        for (auto& [mm, c] : sf) {
            (void)c;
            require(A_->filtration(mm) <= A_->filtration(f), "AxiomViolation",
                    "sigma raises the filtration");
            require(A_->multidegree(mm) == A_->multidegree(f), "AxiomViolation",
                    "sigma does not preserve the multidegree");
        }
        require(apply(inverse(f)) == Element{{f, Scalar(1)}}, "AxiomViolation",
                "sigma o sigma^{-1} != id");
    }
    for (const Monomial& f : basis)
        for (const Monomial& g : basis) {
            Tensor fg = Tensor::from_element(A_.get(), Element{{f, Scalar(1)}})
                            .tensor_with(Tensor::from_element(A_.get(), Element{{g, Scalar(1)}}));
            // ribbon relation sigma o mu = mu (sigma (x) sigma) Psi^2
            Tensor t = B.apply(B.apply(fg, 0), 0);
            Element rhs;
            for (auto& [k, c] : t.terms()) {
                Element prod = A_->mul(apply(k[0]), apply(k[1]));
                for (auto& [pm, pc] : prod) add_term(rhs, pm, c * pc);
            }
            require(apply(A_->mul(f, g)) == rhs, "AxiomViolation",
                    "ribbon relation fails on " + A_->name());
            // naturality: (sigma (x) id) Psi = Psi (id (x) sigma) and the mirror
            Tensor p = B.apply(fg, 0);
            auto sig = [&](const Monomial& mm) { return apply(mm); };
            require(p.apply_linear(0, sig) ==
                        B.apply(fg.apply_linear(1, sig), 0),
                    "AxiomViolation", "naturality (sigma x id) Psi = Psi (id x sigma) fails");
            require(p.apply_linear(1, sig) ==
                        B.apply(fg.apply_linear(0, sig), 0),
                    "AxiomViolation", "naturality (id x sigma) Psi = Psi (sigma x id) fails");
        }
}

// ---------------------------------------------------------------------------
// Transmuted
// ---------------------------------------------------------------------------

Transmuted::Transmuted(std::shared_ptr<Hopf> H, std::shared_ptr<RForm> r)
    : H_(std::move(H)), r_(std::move(r)) {
    require(!H_->braided(), "ConfigError", "transmutation starts from an ordinary Hopf algebra");
    require(r_->hopf() == H_, "ConfigError", "r-form is not defined on this Hopf algebra");
}

Element Transmuted::product(const Monomial& a, const Monomial& b) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto hit = prod_cache_.find({a, b});
        if (hit != prod_cache_.end()) return hit->second;
    }
    auto P = H_->algebra();
    Element out;
    for (auto& [ka, ca] : H_->coproduct_iter(a, 3).terms())
        for (auto& [kb, cb] : H_->coproduct_iter(b, 3).terms()) {
            Scalar c = ca * cb * r_->eval(ka[0], kb[1]);
            if (c.is_zero()) continue;
            c = c * r_->eval(Element{{ka[2], Scalar(1)}}, H_->antipode(kb[0]));
            if (c.is_zero()) continue;
            Element prod = P->mul(ka[1], kb[2]);
            for (auto& [pm, pc] : prod) add_term(out, pm, c * pc);
        }
    std::lock_guard<std::mutex> lock(mu_);
    prod_cache_.emplace(std::make_pair(a, b), out);
    return out;
}

Element Transmuted::product(const Element& a, const Element& b) const {
    Element out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Element p = product(ma, mb);
            for (auto& [pm, pc] : p) add_term(out, pm, ca * cb * pc);
        }
    return out;
}

Element Transmuted::antipode(const Monomial& a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto hit = antipode_cache_.find(a);
        if (hit != antipode_cache_.end()) return hit->second;
    }
    auto P = H_->algebra();
    Element out;
    for (auto& [k, c] : H_->coproduct_iter(a, 4).terms()) {
        Element u = P->mul(H_->antipode(H_->antipode(k[2])), H_->antipode(k[0]));
        Scalar cc = c * r_->eval(u, Element{{k[3], Scalar(1)}});
        if (cc.is_zero()) continue;
        Element s2 = H_->antipode(k[1]);
        for (auto& [sm, sc] : s2) add_term(out, sm, cc * sc);
    }
    std::lock_guard<std::mutex> lock(mu_);
    antipode_cache_.emplace(a, out);
    return out;
}

Element Transmuted::antipode(const Element& a) const {
    Element out;
    for (auto& [m, c] : a) {
        Element s = antipode(m);
        for (auto& [sm, sc] : s) add_term(out, sm, c * sc);
    }
    return out;
}

Tensor Transmuted::braiding(const Element& a, const Element& b) const {
    auto P = H_->algebra();
    Tensor out({P.get(), P.get()});
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b)
            for (auto& [ka, cka] : H_->coproduct_iter(ma, 3).terms())
                for (auto& [kb, ckb] : H_->coproduct_iter(mb, 3).terms()) {
                    Element s = P->mul(H_->antipode(ka[0]), Element{{ka[2], Scalar(1)}});
                    Element t = P->mul(H_->antipode(kb[0]), Element{{kb[2], Scalar(1)}});
                    Scalar c = ca * cb * cka * ckb * r_->eval(s, t);
                    if (c.is_zero()) continue;
                    out.add({kb[1], ka[1]}, c);
                }
    return out;
}

Tensor Transmuted::ad_coaction(const Element& a) const {
    auto P = H_->algebra();
    Tensor out({P.get(), P.get()});
    for (auto& [ma, ca] : a)
        for (auto& [k, c] : H_->coproduct_iter(ma, 3).terms()) {
            Element h = P->mul(H_->antipode(k[0]), Element{{k[2], Scalar(1)}});
            for (auto& [hm, hc] : h) out.add({k[1], hm}, ca * c * hc);
        }
    return out;
}

Element Transmuted::product_chain(const std::vector<Element>& factors) const {
    Element out{{H_->algebra()->unit(), Scalar(1)}};
    for (auto& f : factors) out = product(out, f);
    return out;
}

// ---------------------------------------------------------------------------
// Braided tensor products
// ---------------------------------------------------------------------------

Tensor braided_tensor_multiply(const Braiding& B, const Tensor& x, const Tensor& y,
                               bool inverse_flavor) {
    require(x.nlegs() == 2 && y.nlegs() == 2, "ArityMismatch",
            "braided tensor product acts on two-leg tensors");
    require(x.legs() == y.legs(), "ArityMismatch", "braided tensor product leg mismatch");
    Tensor t = x.tensor_with(y);
    if (!inverse_flavor) {
        t = B.apply(t, 1);
    } else {
        t = B.apply(t, 1, true);
        t = B.apply(t, 2, true);
    }
    t = t.mul_adjacent(0);
    t = t.mul_adjacent(1);
    return t;
}

} // namespace braidhom
