#pragma once
#include <optional>

#include "braidhom/hopf.hpp"

namespace braidhom {

enum class BraidMode { Engine, Oracle, Both };

// Braiding of the category of right H-comodules for a coquasitriangular
// (H, r):
//     Psi(v (x) w)      = w0 (x) v0 r(v1, w1)
//     Psi^{-1}(v (x) w) = w0 (x) v0 rbar(w1, v1)
// (the inverse braiding is the braiding of the same category taken with the
// r-form rbar21).  Objects are registered through their coactions; braiding
// evaluation is memoized per monomial pair.
//
// Closed-form oracle tables can be attached per presentation pair.  In mode
// Both every engine evaluation that has an oracle entry is cross-checked
// against it; in mode Oracle evaluation uses the table alone and uncovered
// pairs raise NotInOracle.  Oracle tables describe the forward braiding;
// inverse evaluation always uses the engine.
class Braiding {
public:
    Braiding(std::shared_ptr<Hopf> H, std::shared_ptr<RForm> r,
             BraidMode mode = BraidMode::Engine);

    const std::shared_ptr<Hopf>& hopf() const { return H_; }
    const std::shared_ptr<RForm>& rform() const { return r_; }
    BraidMode mode() const { return mode_; }
    void set_mode(BraidMode m) { mode_ = m; }

    void register_coaction(std::shared_ptr<Coaction> c);
    std::shared_ptr<Coaction> coaction(const Presentation* A) const;  // MapUndefined

    // Replace the coaction/r-form engine by a direct formula for pairs over
    // one presentation (used for braidings that are not of the standard
    // right-comodule form, e.g. the Psi-commutative braiding on a Hopf
    // algebra coacting on itself both ways).
    void set_custom_engine(
        const Presentation* A,
        std::function<Tensor(const Monomial&, const Monomial&, bool inverse)> f);

    void add_oracle(const Presentation* V, const Presentation* W, const Monomial& v,
                    const Monomial& w, Tensor result);
    bool has_oracle(const Presentation* V, const Presentation* W, const Monomial& v,
                    const Monomial& w) const;
    size_t oracle_size() const { return oracle_.size(); }

    // Read-only view of the registered generator-pair oracles (serialization,
    // reporting).  Pointers into the oracle map stay valid while the braiding
    // is alive and no further oracles are added.
    struct OracleEntry {
        const Presentation* V;
        const Presentation* W;
        Monomial v, w;
        const Tensor* result;
    };
    std::vector<OracleEntry> oracle_entries() const;

    // Psi^{+-1}(v (x) w), result legs {W, V}.
    Tensor pair(const Presentation* V, const Monomial& v, const Presentation* W,
                const Monomial& w, bool inverse = false) const;
    Tensor pair(const Presentation* V, const Element& v, const Presentation* W,
                const Element& w, bool inverse = false) const;

    // Apply the braiding at legs (leg, leg + 1) of a chain.
    Tensor apply(const Tensor& chain, int leg, bool inverse = false) const;

    // Block braiding Psi_{[m,n],n+1} = Psi_{m,m+1} Psi_{m+1,m+2} ... Psi_{n,n+1}
    // moving leg n+1 leftwards past legs m..n; the inverse composes inverse
    // crossings in the opposite order.
    Tensor apply_block(const Tensor& chain, int m, int n, bool inverse = false) const;

private:
    std::shared_ptr<Hopf> H_;
    std::shared_ptr<RForm> r_;
    BraidMode mode_;
    std::map<const Presentation*, std::shared_ptr<Coaction>> coact_;
    std::map<const Presentation*,
             std::function<Tensor(const Monomial&, const Monomial&, bool)>>
        custom_;
    using OracleKey = std::tuple<const Presentation*, const Presentation*, Monomial, Monomial>;
    std::map<OracleKey, Tensor> oracle_;

    mutable std::mutex mu_;
    using CacheKey = std::tuple<const Presentation*, const Presentation*, Monomial, Monomial, bool>;
    mutable std::map<CacheKey, Tensor> cache_;

    Tensor engine_pair(const Presentation* V, const Monomial& v, const Presentation* W,
                       const Monomial& w, bool inverse) const;
    Tensor pair_nolock(const Presentation* V, const Monomial& v, const Presentation* W,
                       const Monomial& w, bool inverse) const;
};

// SwapFn adapter for Hopf::set_braid_hooks; keeps the braiding alive.
inline SwapFn braid_swap(std::shared_ptr<const Braiding> B, bool inverse = false) {
    return [B, inverse](const Tensor& t, int leg) { return B->apply(t, leg, inverse); };
}

// Ribbon automorphism sigma of an algebra A in the braided category: either
// generator values extended through the ribbon relation
//     sigma(f g) = mu (sigma (x) sigma) Psi^2 (f (x) g),
// or the functional route sigma(v) = v0 s(v1) for a ribbon functional s.
class RibbonAut {
public:
    RibbonAut(std::shared_ptr<Presentation> A, std::shared_ptr<const Braiding> braid,
              std::map<Letter, Element> gen_values);
    RibbonAut(std::shared_ptr<Coaction> coact, Functional s);

    const std::shared_ptr<Presentation>& algebra() const { return A_; }

    Element apply(const Monomial& m) const;
    Element apply(const Element& e) const;

    // Windowed inverse: solved on the block of monomials with the same
    // multidegree and no larger filtration (sigma preserves both).
    Element inverse(const Monomial& m) const;
    Element inverse(const Element& e) const;

    // sigma(1) = 1, multidegree/filtration preservation, the ribbon relation,
    // naturality against the braiding, and invertibility, exactly on the
    // window basis.
    void check_ribbon(const Braiding& B, const Window& w) const;

private:
    std::shared_ptr<Presentation> A_;
    std::shared_ptr<const Braiding> braid_;
    std::map<Letter, Element> table_;
    std::shared_ptr<Coaction> coact_;
    std::optional<Functional> s_;

    mutable std::mutex mu_;
    mutable std::map<Monomial, Element> cache_, inv_cache_;

    Element apply_nolock(const Monomial& m) const;
};

// Transmutation B(H) of a coquasitriangular Hopf algebra (H, r): the braided
// group structure carried by the vector space of H with
//     a * b            = a2 b3 r(a1, b2) r(a3, S b1)
//     coproduct        = the coproduct of H (the same linear map)
//     Sbar(a)          = S(a2) r(S^2(a3) S(a1), a4)
//     Psi_B(a (x) b)   = b2 (x) a2 r(S(a1) a3, S(b1) b3)
//     Ad coaction      = a2 (x) S(a1) a3
class Transmuted {
public:
    Transmuted(std::shared_ptr<Hopf> H, std::shared_ptr<RForm> r);

    const std::shared_ptr<Hopf>& hopf() const { return H_; }

    Element product(const Monomial& a, const Monomial& b) const;
    Element product(const Element& a, const Element& b) const;
    Element antipode(const Monomial& a) const;
    Element antipode(const Element& a) const;
    Tensor braiding(const Element& a, const Element& b) const;  // legs {H, H}
    Tensor ad_coaction(const Element& a) const;                 // legs {H, H}

    // Ordered *-product of a list of elements (left to right).
    Element product_chain(const std::vector<Element>& factors) const;

private:
    std::shared_ptr<Hopf> H_;
    std::shared_ptr<RForm> r_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<Monomial, Monomial>, Element> prod_cache_;
    mutable std::map<Monomial, Element> antipode_cache_;
};

inline Transmuted transmute(std::shared_ptr<Hopf> H, std::shared_ptr<RForm> r) {
    return Transmuted(std::move(H), std::move(r));
}

// Product on the braided tensor square: x, y are two-leg tensors over (A, B).
//   standard flavor (A (x)hat B):      (mu (x) mu) Psi_{1,2}
//   inverse flavor  (A^e = A (x)hat A^op in (C, Psi^{-1})):
//                                      (mu (x) mu) Psi^{-1}_{2,3} Psi^{-1}_{1,2}
Tensor braided_tensor_multiply(const Braiding& B, const Tensor& x, const Tensor& y,
                               bool inverse_flavor);

} // namespace braidhom
