#pragma once
#include <functional>
#include <memory>
#include <mutex>

#include "braidhom/tensor.hpp"

namespace braidhom {

// Applies a braiding (or its inverse) at legs (i, i+1) of a tensor.
using SwapFn = std::function<Tensor(const Tensor&, int)>;

// Hopf algebra structure on a presented algebra: per-letter structure maps
// extended multiplicatively. For a Hopf algebra in a braided category the
// extension of the coproduct and the antipode uses the category braiding,
// supplied through set_braid_hooks after construction.
class Hopf {
public:
    Hopf(std::shared_ptr<Presentation> H, bool braided);

    const std::shared_ptr<Presentation>& algebra() const { return H_; }
    bool braided() const { return braided_; }

    void set_coproduct(Letter l, const Tensor& t);  // legs {H, H}
    void set_counit(Letter l, const Scalar& c);
    void set_antipode(Letter l, const Element& e);
    void set_antipode_inv(Letter l, const Element& e);
    void set_braid_hooks(SwapFn psi, SwapFn psi_inv);

    Tensor coproduct(const Monomial& m) const;
    Tensor coproduct(const Element& e) const;
    // (n+1)-fold legs: applies the coproduct at leg 0 repeatedly
    Tensor coproduct_iter(const Monomial& m, int nlegs) const;
    Scalar counit(const Monomial& m) const;
    Scalar counit(const Element& e) const;
    Element antipode(const Monomial& m) const;
    Element antipode(const Element& e) const;
    Element antipode_inv(const Monomial& m) const;
    Element antipode_inv(const Element& e) const;

    // Coassociativity, counit and antipode laws, inverse antipode, and
    // compatibility of the coproduct/counit with every rewrite rule, checked
    // exactly on the basis of the window.
    void check_axioms(const Window& w) const;

private:
    std::shared_ptr<Presentation> H_;
    bool braided_;
    std::map<Letter, Tensor> delta_;
    std::map<Letter, Scalar> eps_;
    std::map<Letter, Element> S_, Sinv_;
    SwapFn psi_, psi_inv_;

    mutable std::mutex mu_;
    mutable std::map<Monomial, Tensor> delta_cache_;
    mutable std::map<Monomial, Element> S_cache_, Sinv_cache_;

    const Tensor& delta_letter(Letter l) const;
    // product on H (x) H, braided when requested: legs (a,b,c,d) -> (a?(b,c)first, ?(b,c)second d)
    Tensor pair_product(const Tensor& ab, const Tensor& cd) const;
};

// Right coaction delta: A -> A (x) H on a comodule algebra, per-letter tables
// extended as an algebra map with the componentwise product on A (x) H.
class Coaction {
public:
    Coaction(std::shared_ptr<Presentation> A, std::shared_ptr<Hopf> H);

    const std::shared_ptr<Presentation>& comodule() const { return A_; }
    const std::shared_ptr<Hopf>& hopf() const { return H_; }

    void set_coact(Letter l, const Tensor& t);  // legs {A, H}

    Tensor coact(const Monomial& m) const;      // legs {A, H}
    Tensor coact(const Element& e) const;

    // counit law, coassociativity with the H coproduct, multiplicativity on
    // every rewrite rule, checked exactly on the window basis.
    void check_axioms(const Window& w) const;

private:
    std::shared_ptr<Presentation> A_;
    std::shared_ptr<Hopf> H_;
    std::map<Letter, Tensor> table_;

    mutable std::mutex mu_;
    mutable std::map<Monomial, Tensor> cache_;

    const Tensor& coact_letter(Letter l) const;
};

// Coquasitriangular form r on an ordinary Hopf algebra, generated from a
// letter-by-letter base table through the bicharacter laws
//   r(f g, h) = r(f, h1) r(g, h2)      r(f, g h) = r(f1, h) r(f2, g).
class RForm {
public:
    explicit RForm(std::shared_ptr<Hopf> H);

    const std::shared_ptr<Hopf>& hopf() const { return H_; }

    void set_base(Letter a, Letter b, const Scalar& v);

    Scalar eval(const Monomial& f, const Monomial& g) const;
    Scalar eval(const Element& f, const Element& g) const;
    Scalar bar(const Monomial& f, const Monomial& g) const;  // r(S f, g)
    Scalar bar(const Element& f, const Element& g) const;

    // theta = r21 * r and its convolution inverse theta_bar = rbar * rbar21
    Scalar theta(const Monomial& f, const Monomial& g) const;
    Scalar theta_bar(const Monomial& f, const Monomial& g) const;

    // bicharacter laws, rbar inverse law, quasi-commutativity (RTT relations)
    // and the Yang-Baxter property, checked exactly on the window basis.
    void check_axioms(const Window& w) const;

private:
    std::shared_ptr<Hopf> H_;
    std::map<std::pair<Letter, Letter>, Scalar> base_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<Monomial, Monomial>, Scalar> cache_;

    Scalar eval_nolock(const Monomial& f, const Monomial& g) const;
};

// Linear functional on H, by closed form or by a window table.
class Functional {
public:
    Functional(std::shared_ptr<Hopf> H, std::function<Scalar(const Monomial&)> f);
    Functional(std::shared_ptr<Hopf> H, std::map<Monomial, Scalar> table, Window domain);

    const std::shared_ptr<Hopf>& hopf() const { return H_; }

    Scalar eval(const Monomial& m) const;
    Scalar eval(const Element& e) const;

    Functional convolve(const Functional& o) const;            // (f*g)(h)=f(h1)g(h2)
    Functional convolution_inverse(const Window& w) const;     // unique windowed solve

private:
    std::shared_ptr<Hopf> H_;
    std::function<Scalar(const Monomial&)> f_;
    std::shared_ptr<std::map<Monomial, Scalar>> table_;
    std::optional<Window> domain_;
};

// Bilinear form on H (x) H with convolution structure
//   (F*G)(x,y) = F(x1,y1) G(x2,y2).
class BilinearForm {
public:
    BilinearForm(std::shared_ptr<Hopf> H,
                 std::function<Scalar(const Monomial&, const Monomial&)> f);

    const std::shared_ptr<Hopf>& hopf() const { return H_; }

    Scalar eval(const Monomial& a, const Monomial& b) const;
    Scalar eval(const Element& a, const Element& b) const;

    BilinearForm convolve(const BilinearForm& o) const;
    // windowed solve; guarded by an unknown-count limit
    BilinearForm convolution_inverse(const Window& w, size_t max_unknowns = 4000) const;

    // verify F * G = counit(x)counit on the window
    void check_inverse_of(const BilinearForm& g, const Window& w) const;

private:
    std::shared_ptr<Hopf> H_;
    std::function<Scalar(const Monomial&, const Monomial&)> f_;
};

// Convolution coboundary of an invertible functional:
//   (d phi)(x,y) = phi(x1) phi(y1) phibar(x2 y2).
BilinearForm cochain_boundary(const Functional& phi, const Functional& phibar);
// Its convolution inverse in closed form:
//   (d phi)^{-1}(x,y) = phi(x1 y1) phibar(x2) phibar(y2).
BilinearForm cochain_boundary_inverse(const Functional& phi, const Functional& phibar);

// Hopf 2-cocycle twist of the product of H: a ._F b = F(a1,b1) a2 b2 Fbar(a3,b3).
Element twisted_product_hopf(const Hopf& H, const BilinearForm& F, const BilinearForm& Fbar,
                             const Element& a, const Element& b);

// Comodule-algebra twist: f . g = f0 g0 * theta_bar(f1, g1).
Element twisted_product_comodule(const Coaction& coact, const BilinearForm& theta_bar,
                                 const Element& f, const Element& g);

// Banal transformation h -> phibar(h1) h2 phi(h3), an algebra map from the
// twisted product to the original one.
Element banal_transform(const Hopf& H, const Functional& phi, const Functional& phibar,
                        const Element& h);

} // namespace braidhom
