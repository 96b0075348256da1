#pragma once
#include <functional>
#include <string>
#include <vector>

#include "braidhom/presentation.hpp"

namespace braidhom {

// Sparse element of V_1 (x) ... (x) V_k where each leg is the normal-form
// basis of a presentation. A zero-leg tensor is a scalar. Leg identity is
// the Presentation pointer; operations validate leg compatibility.
class Tensor {
public:
    using Key = std::vector<Monomial>;

    Tensor() = default;
    explicit Tensor(std::vector<const Presentation*> legs) : legs_(std::move(legs)) {}

    static Tensor scalar(const Scalar& c) {
        Tensor t{std::vector<const Presentation*>{}};
        t.add(Key{}, c);
        return t;
    }
    static Tensor from_element(const Presentation* P, const Element& e) {
        Tensor t{{P}};
        for (auto& [m, c] : e) t.add(Key{m}, c);
        return t;
    }

    const std::vector<const Presentation*>& legs() const { return legs_; }
    int nlegs() const { return static_cast<int>(legs_.size()); }
    // Ref-qualified so that iterating the terms of a temporary tensor (for
    // example `for (auto& [k, c] : H->coproduct(m).terms())`) moves the map
    // out before the temporary dies instead of dangling.
    const std::map<Key, Scalar>& terms() const& { return terms_; }
    std::map<Key, Scalar> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Tensor& o) const { return legs_ == o.legs_ && terms_ == o.terms_; }

    void add(Key key, const Scalar& c) {
        require(key.size() == legs_.size(), "IndexOutOfRange", "tensor key has wrong arity");
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Tensor scaled(const Scalar& c) const {
        Tensor out{legs_};
        if (c.is_zero()) return out;
        for (auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }

    Tensor operator+(const Tensor& o) const {
        require(legs_ == o.legs_, "IndexOutOfRange", "tensor leg mismatch in sum");
        Tensor out = *this;
        for (auto& [k, v] : o.terms_) out.add(k, v);
        return out;
    }
    Tensor operator-(const Tensor& o) const { return *this + o.scaled(Scalar(-1)); }

    Tensor tensor_with(const Tensor& o) const {
        std::vector<const Presentation*> legs = legs_;
        legs.insert(legs.end(), o.legs_.begin(), o.legs_.end());
        Tensor out{std::move(legs)};
        for (auto& [k1, c1] : terms_)
            for (auto& [k2, c2] : o.terms_) {
                Key k = k1;
                k.insert(k.end(), k2.begin(), k2.end());
                out.add(std::move(k), c1 * c2);
            }
        return out;
    }

    // Linear extension of f over leg i. f(m) must be a tensor with legs
    // exactly `replacement`; leg i is substituted by those legs.
    Tensor apply_at(int leg, const std::vector<const Presentation*>& replacement,
                    const std::function<Tensor(const Monomial&)>& f) const {
        require(leg >= 0 && leg < nlegs(), "IndexOutOfRange", "tensor leg out of range");
        Tensor out{spliced_legs(leg, 1, replacement)};
        for (auto& [k, c] : terms_) {
            Tensor img = f(k[leg]);
            require(img.legs_ == replacement, "ArityMismatch",
                    "leg map returned unexpected legs");
            for (auto& [ik, ic] : img.terms_) out.add(spliced_key(k, leg, 1, ik), c * ic);
        }
        return out;
    }

    // Same with a two-leg window (i, i+1).
    Tensor apply_at2(int leg, const std::vector<const Presentation*>& replacement,
                     const std::function<Tensor(const Monomial&, const Monomial&)>& f) const {
        require(leg >= 0 && leg + 1 < nlegs(), "IndexOutOfRange", "tensor leg pair out of range");
        Tensor out{spliced_legs(leg, 2, replacement)};
        for (auto& [k, c] : terms_) {
            Tensor img = f(k[leg], k[leg + 1]);
            require(img.legs_ == replacement, "ArityMismatch",
                    "leg map returned unexpected legs");
            for (auto& [ik, ic] : img.terms_) out.add(spliced_key(k, leg, 2, ik), c * ic);
        }
        return out;
    }

    // Linear map leaving the leg in place.
    Tensor apply_linear(int leg, const std::function<Element(const Monomial&)>& f) const {
        const Presentation* P = legs_.at(leg);
        return apply_at(leg, {P}, [&](const Monomial& m) { return from_element(P, f(m)); });
    }

    // Multiply legs (i, i+1), which must live over one presentation.
    Tensor mul_adjacent(int leg) const {
        require(leg >= 0 && leg + 1 < nlegs(), "IndexOutOfRange", "tensor leg pair out of range");
        const Presentation* P = legs_[leg];
        require(P == legs_[leg + 1], "ArityMismatch", "cannot multiply legs of different algebras");
        return apply_at2(leg, {P}, [&](const Monomial& a, const Monomial& b) {
            return from_element(P, P->mul(a, b));
        });
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [k, c] : terms_) {
            std::string body;
            for (size_t i = 0; i < k.size(); i++) {
                if (i) body += " (x) ";
                body += legs_[i]->str(k[i]);
            }
            if (k.empty()) body = "1";
            std::string cs = c.str();
            if (!out.empty()) out += " + ";
            out += "(" + cs + ")*[" + body + "]";
        }
        return out;
    }

    // Apply a fully general transformation term by term.
    Tensor apply_terms(std::vector<const Presentation*> result_legs,
                       const std::function<Tensor(const Key&)>& f) const {
        Tensor out{std::move(result_legs)};
        for (auto& [k, c] : terms_) {
            Tensor img = f(k);
            require(img.legs_ == out.legs_, "ArityMismatch", "term map returned unexpected legs");
            for (auto& [ik, ic] : img.terms_) out.add(ik, c * ic);
        }
        return out;
    }

private:
    std::vector<const Presentation*> legs_;
    std::map<Key, Scalar> terms_;

    std::vector<const Presentation*> spliced_legs(
        int leg, int count, const std::vector<const Presentation*>& replacement) const {
        std::vector<const Presentation*> legs(legs_.begin(), legs_.begin() + leg);
        legs.insert(legs.end(), replacement.begin(), replacement.end());
        legs.insert(legs.end(), legs_.begin() + leg + count, legs_.end());
        return legs;
    }
    static Key spliced_key(const Key& k, int leg, int count, const Key& repl) {
        Key out(k.begin(), k.begin() + leg);
        out.insert(out.end(), repl.begin(), repl.end());
        out.insert(out.end(), k.begin() + leg + count, k.end());
        return out;
    }
};

inline Element tensor_to_element(const Tensor& t) {
    require(t.nlegs() == 1, "ArityMismatch", "expected a one-leg tensor");
    Element e;
    for (auto& [k, c] : t.terms()) add_term(e, k[0], c);
    return e;
}

inline Scalar tensor_to_scalar(const Tensor& t) {
    require(t.nlegs() == 0, "ArityMismatch", "expected a zero-leg tensor");
    Scalar s(0);
    for (auto& [k, c] : t.terms()) {
        (void)k;
        s = s + c;
    }
    return s;
}

// Untwisted transposition of legs (i, i+1); not a braiding.
inline Tensor plain_flip(const Tensor& t, int leg) {
    std::vector<const Presentation*> repl{t.legs().at(leg + 1), t.legs().at(leg)};
    const Presentation* a = t.legs()[leg];
    const Presentation* b = t.legs()[leg + 1];
    return t.apply_at2(leg, repl, [&](const Monomial& m1, const Monomial& m2) {
        Tensor out{{b, a}};
        out.add({m2, m1}, Scalar(1));
        return out;
    });
}

} // namespace braidhom
