#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidhom/scalar.hpp"

namespace braidhom {

// A single factor of a word: generator slot with orientation. Negative
// orientation is only legal for generators declared with integer exponents
// (their negative powers are displayed under inverse_name, e.g. d = a^{-1}
// in the O_q(SL2) basis convention).
struct Letter {
    int slot = 0;
    int sign = 1;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

// Exponent vector aligned with the generator slots; negative entries encode
// inverse-name powers where permitted.
struct Monomial {
    std::vector<int32_t> e;
    bool is_unit() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }
    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;  // plain lex, deterministic
};

// Linear combination of normal-form monomials; zero coefficients never stored.
using Element = std::map<Monomial, Scalar>;

void add_term(Element& e, const Monomial& m, const Scalar& c);
Element scaled(const Element& e, const Scalar& c);
Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
bool is_zero(const Element& e);

struct GenInfo {
    std::string name;
    bool int_exponents = false;
    std::string inverse_name;  // optional display/parse name for negative powers
    int weight = 1;            // filtration weight
    std::vector<long> grading; // multidegree contribution of one positive power
};

// Truncation window: filtration bound plus optional exact multidegree.
struct Window {
    int max_filtration = 0;
    std::optional<std::vector<long>> degree;
};

// Ordered presentation with two-letter rewrite rules mapping words to the
// PBW-type normal form basis. Rewriting is deterministic; confluence is
// asserted by the overlap tests in the model axiom suites.
class Presentation {
public:
    Presentation(std::string name, std::vector<GenInfo> gens);

    const std::string& name() const { return name_; }
    const std::vector<GenInfo>& gens() const { return gens_; }
    int slots() const { return static_cast<int>(gens_.size()); }
    size_t grading_dim() const { return grading_dim_; }

    void add_rule(Letter a, Letter b, Element rhs);
    void add_rule(const std::string& lhs_word, const std::string& rhs_element);
    const Element* rule(Letter a, Letter b) const;
    std::vector<std::pair<std::pair<Letter, Letter>, Element>> rules_list() const;

    Monomial unit() const;
    Monomial mono(std::vector<int32_t> exps) const;
    Monomial gen(int slot, int exp = 1) const;
    Letter letter(const std::string& name) const;  // resolves inverse names too
    std::vector<Letter> spell(const Monomial& m) const;

    // Normal-form multiplication.
    Element mul(const Monomial& a, const Monomial& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element mul_letter(const Monomial& m, Letter g) const;
    Element word_element(const std::vector<Letter>& w) const;
    Element pow(const Element& a, long k) const;

    bool is_normal(const Monomial& m) const;
    int filtration(const Monomial& m) const;
    std::vector<long> multidegree(const Monomial& m) const;
    bool in_window(const Monomial& m, const Window& w) const;

    // Graded-lex order used for basis enumeration and display.
    bool mono_less(const Monomial& a, const Monomial& b) const;
    std::vector<Monomial> enumerate_basis(const Window& w) const;

    std::string str(const Monomial& m) const;
    std::string str(const Element& e) const;
    Monomial parse_monomial(const std::string& s) const;
    Element parse_element(const std::string& s) const;

    std::string to_json() const;
    static std::shared_ptr<Presentation> from_json(const std::string& text);

private:
    friend struct ElementParser;
    std::string name_;
    std::vector<GenInfo> gens_;
    size_t grading_dim_ = 0;
    std::map<std::pair<Letter, Letter>, Element> rules_;
    std::map<std::string, Letter> names_;
    struct RawRule {
        std::string lhs, rhs;
    };
    std::vector<RawRule> raw_rules_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<Monomial, Letter>, Element> mul_cache_;
};

} // namespace braidhom
