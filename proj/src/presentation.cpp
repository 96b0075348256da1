#include "braidhom/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "braidhom/error.hpp"
#include "json.hpp"

namespace braidhom {

void add_term(Element& e, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = e.find(m);
    if (it == e.end()) {
        e.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) e.erase(it);
    }
}

Element scaled(const Element& e, const Scalar& c) {
    Element out;
    if (c.is_zero()) return out;
    for (auto& [m, v] : e) out.emplace(m, v * c);
    return out;
}

Element operator+(const Element& a, const Element& b) {
    Element out = a;
    for (auto& [m, v] : b) add_term(out, m, v);
    return out;
}

Element operator-(const Element& a, const Element& b) {
    Element out = a;
    for (auto& [m, v] : b) add_term(out, m, Scalar(0) - v);
    return out;
}

bool is_zero(const Element& e) { return e.empty(); }

namespace {
thread_local int g_mul_depth = 0;
struct DepthGuard {
    DepthGuard() {
        if (++g_mul_depth > 8000)
            fail("AxiomViolation", "rewriting recursion exceeded depth bound; rules do not terminate");
    }
    ~DepthGuard() { --g_mul_depth; }
};
} // namespace

Presentation::Presentation(std::string name, std::vector<GenInfo> gens)
    : name_(std::move(name)), gens_(std::move(gens)) {
    require(!gens_.empty(), "ConfigError", "presentation needs at least one generator");
    grading_dim_ = gens_[0].grading.size();
    for (int i = 0; i < slots(); i++) {
        const GenInfo& g = gens_[i];
        require(!g.name.empty() && g.name != "p", "ConfigError",
                "generator name must be nonempty and distinct from the scalar variable p");
        require(g.weight >= 1, "ConfigError", "generator weight must be >= 1: " + g.name);
        require(g.grading.size() == grading_dim_, "ConfigError",
                "all generators must share one grading dimension");
        require(!names_.count(g.name), "ConfigError", "duplicate generator name: " + g.name);
        names_[g.name] = Letter{i, 1};
        if (!g.inverse_name.empty()) {
            require(g.int_exponents, "ConfigError",
                    "inverse_name requires integer exponents: " + g.name);
            require(!names_.count(g.inverse_name), "ConfigError",
                    "duplicate generator name: " + g.inverse_name);
            names_[g.inverse_name] = Letter{i, -1};
        }
    }
}

Monomial Presentation::unit() const { return Monomial{std::vector<int32_t>(slots(), 0)}; }

Monomial Presentation::mono(std::vector<int32_t> exps) const {
    require(static_cast<int>(exps.size()) == slots(), "ConfigError", "exponent vector has wrong length");
    for (int i = 0; i < slots(); i++)
        require(exps[i] >= 0 || gens_[i].int_exponents, "IllegalExponent",
                "negative exponent on generator " + gens_[i].name);
    return Monomial{std::move(exps)};
}

Monomial Presentation::gen(int slot, int exp) const {
    require(slot >= 0 && slot < slots(), "IndexOutOfRange", "generator slot out of range");
    auto m = unit();
    m.e[slot] = exp;
    return mono(std::move(m.e));
}

Letter Presentation::letter(const std::string& name) const {
    auto it = names_.find(name);
    require(it != names_.end(), "ParseError", "unknown generator name: " + name);
    return it->second;
}

std::vector<Letter> Presentation::spell(const Monomial& m) const {
    require(static_cast<int>(m.e.size()) == slots(), "ConfigError", "monomial has wrong slot count");
    std::vector<Letter> out;
    for (int i = 0; i < slots(); i++) {
        int sign = m.e[i] > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(m.e[i]); k++) out.push_back(Letter{i, sign});
    }
    return out;
}

namespace {
std::string letter_str(const std::vector<GenInfo>& gens, Letter l, int rep = 1) {
    const GenInfo& g = gens[l.slot];
    if (l.sign > 0) return rep == 1 ? g.name : g.name + "^" + std::to_string(rep);
    if (!g.inverse_name.empty())
        return rep == 1 ? g.inverse_name : g.inverse_name + "^" + std::to_string(rep);
    return g.name + "^" + std::to_string(-rep);
}
} // namespace

void Presentation::add_rule(Letter a, Letter b, Element rhs) {
    for (Letter l : {a, b}) {
        require(l.slot >= 0 && l.slot < slots(), "IndexOutOfRange", "rule letter slot out of range");
        require(l.sign == 1 || gens_[l.slot].int_exponents, "IllegalExponent",
                "negative letter on nat generator in rule");
    }
    // Grading compatibility and filtration non-increase keep windows sound.
    std::vector<long> lhs_deg(grading_dim_, 0);
    for (size_t d = 0; d < grading_dim_; d++)
        lhs_deg[d] = a.sign * gens_[a.slot].grading[d] + b.sign * gens_[b.slot].grading[d];
    int lhs_filt = gens_[a.slot].weight + gens_[b.slot].weight;
    for (auto& [m, c] : rhs) {
        (void)c;
        require(multidegree(m) == lhs_deg, "AxiomViolation",
                "rule rhs breaks the grading: " + letter_str(gens_, a) + "*" + letter_str(gens_, b));
        require(filtration(m) <= lhs_filt, "AxiomViolation",
                "rule rhs raises the filtration: " + letter_str(gens_, a) + "*" + letter_str(gens_, b));
    }
    require(!rules_.count({a, b}), "ConfigError", "duplicate rule");
    rules_[{a, b}] = std::move(rhs);
}

void Presentation::add_rule(const std::string& lhs_word, const std::string& rhs_element) {
    // lhs: two '*'-separated letters (NAME, inverse NAME, or NAME^-1)
    std::vector<Letter> lhs;
    std::string cur;
    auto flush = [&]() {
        std::string tok = cur;
        cur.clear();
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
        require(!tok.empty(), "ParseError", "empty factor in rule lhs: " + lhs_word);
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            lhs.push_back(letter(tok));
        } else {
            require(tok.substr(caret + 1) == "-1", "ParseError",
                    "rule lhs factor must be a single letter: " + tok);
            Letter l = letter(tok.substr(0, caret));
            l.sign = -l.sign;
            lhs.push_back(l);
        }
    };
    for (char ch : lhs_word) {
        if (ch == '*') flush();
        else cur.push_back(ch);
    }
    flush();
    require(lhs.size() == 2, "ParseError", "rule lhs must be a two-letter word: " + lhs_word);
    add_rule(lhs[0], lhs[1], parse_element(rhs_element));
    raw_rules_.push_back({lhs_word, rhs_element});
}

const Element* Presentation::rule(Letter a, Letter b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::pair<Letter, Letter>, Element>> Presentation::rules_list() const {
    std::vector<std::pair<std::pair<Letter, Letter>, Element>> out;
    for (auto& [k, v] : rules_) out.push_back({k, v});
    return out;
}

Element Presentation::mul_letter(const Monomial& m, Letter g) const {
    require(g.sign == 1 || gens_[g.slot].int_exponents, "IllegalExponent",
            "negative letter on nat generator " + gens_[g.slot].name);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = mul_cache_.find({m, g});
        if (it != mul_cache_.end()) return it->second;
    }
    DepthGuard guard;
    Element out;
    if (m.is_unit()) {
        add_term(out, gen(g.slot, g.sign), Scalar(1));
    } else {
        int j = slots() - 1;
        while (m.e[j] == 0) j--;
        Letter lj{j, m.e[j] > 0 ? 1 : -1};
        if (const Element* rhs = rule(lj, g)) {
            Monomial mp = m;
            mp.e[j] -= lj.sign;
            Element left;
            add_term(left, mp, Scalar(1));
            out = mul(left, *rhs);
        } else if (j < g.slot) {
            Monomial r = m;
            r.e[g.slot] = g.sign;
            add_term(out, r, Scalar(1));
        } else if (j == g.slot) {
            require(lj.sign == g.sign || gens_[j].int_exponents, "IllegalExponent",
                    "cannot cancel letters on nat generator " + gens_[j].name);
            Monomial r = m;
            r.e[j] += g.sign;
            add_term(out, r, Scalar(1));
        } else {
            fail("MapUndefined", "no rewrite rule for adjacent letters " +
                                     letter_str(gens_, lj) + "*" + letter_str(gens_, g) +
                                     " in presentation " + name_);
        }
    }
    std::lock_guard<std::mutex> lk(mu_);
    mul_cache_.emplace(std::make_pair(m, g), out);
    return out;
}

Element Presentation::mul(const Monomial& a, const Monomial& b) const {
    Element acc;
    add_term(acc, a, Scalar(1));
    for (Letter l : spell(b)) {
        Element next;
        for (auto& [m, c] : acc)
            for (auto& [m2, c2] : mul_letter(m, l)) add_term(next, m2, c * c2);
        acc = std::move(next);
    }
    return acc;
}

Element Presentation::mul(const Element& a, const Element& b) const {
    Element out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b)
            for (auto& [m, c] : mul(ma, mb)) add_term(out, m, ca * cb * c);
    return out;
}

Element Presentation::word_element(const std::vector<Letter>& w) const {
    Element acc;
    add_term(acc, unit(), Scalar(1));
    for (Letter l : w) {
        Element next;
        for (auto& [m, c] : acc)
            for (auto& [m2, c2] : mul_letter(m, l)) add_term(next, m2, c * c2);
        acc = std::move(next);
    }
    return acc;
}

Element Presentation::pow(const Element& a, long k) const {
    if (k < 0) {
        // Only invertible single terms: coefficient times a power of one int-letter.
        require(a.size() == 1, "IllegalExponent", "negative power of a non-invertible element");
        const auto& [m, c] = *a.begin();
        int nz = -1;
        for (int i = 0; i < slots(); i++)
            if (m.e[i]) {
                require(nz == -1 && gens_[i].int_exponents, "IllegalExponent",
                        "negative power of a non-invertible element");
                nz = i;
            }
        Monomial r = unit();
        if (nz >= 0) r.e[nz] = static_cast<int32_t>(m.e[nz] * k);
        Element out;
        add_term(out, r, c.pow(k));
        return out;
    }
    Element acc;
    add_term(acc, unit(), Scalar(1));
    for (long i = 0; i < k; i++) acc = mul(acc, a);
    return acc;
}

bool Presentation::is_normal(const Monomial& m) const {
    auto w = spell(m);
    for (size_t i = 0; i + 1 < w.size(); i++)
        if (rule(w[i], w[i + 1])) return false;
    return true;
}

int Presentation::filtration(const Monomial& m) const {
    require(static_cast<int>(m.e.size()) == slots(), "ConfigError", "monomial has wrong slot count");
    int f = 0;
    for (int i = 0; i < slots(); i++) f += gens_[i].weight * std::abs(m.e[i]);
    return f;
}

std::vector<long> Presentation::multidegree(const Monomial& m) const {
    require(static_cast<int>(m.e.size()) == slots(), "ConfigError", "monomial has wrong slot count");
    std::vector<long> d(grading_dim_, 0);
    for (int i = 0; i < slots(); i++)
        for (size_t k = 0; k < grading_dim_; k++) d[k] += static_cast<long>(m.e[i]) * gens_[i].grading[k];
    return d;
}

bool Presentation::in_window(const Monomial& m, const Window& w) const {
    if (filtration(m) > w.max_filtration) return false;
    if (w.degree && multidegree(m) != *w.degree) return false;
    return true;
}

bool Presentation::mono_less(const Monomial& a, const Monomial& b) const {
    int fa = filtration(a), fb = filtration(b);
    if (fa != fb) return fa < fb;
    return b.e < a.e;  // earlier slots carry higher powers first: a^2 before a*b before b^2
}

std::vector<Monomial> Presentation::enumerate_basis(const Window& w) const {
    std::vector<Monomial> out;
    Monomial cur = unit();
    auto rec = [&](auto&& self, int slot, int budget) -> void {
        if (slot == slots()) {
            if (is_normal(cur) && (!w.degree || multidegree(cur) == *w.degree)) out.push_back(cur);
            return;
        }
        int cap = budget / gens_[slot].weight;
        int lo = gens_[slot].int_exponents ? -cap : 0;
        for (int e = lo; e <= cap; e++) {
            cur.e[slot] = e;
            self(self, slot + 1, budget - gens_[slot].weight * std::abs(e));
        }
        cur.e[slot] = 0;
    };
    rec(rec, 0, w.max_filtration);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return mono_less(a, b); });
    return out;
}

std::string Presentation::str(const Monomial& m) const {
    require(static_cast<int>(m.e.size()) == slots(), "ConfigError", "monomial has wrong slot count");
    std::string s;
    for (int i = 0; i < slots(); i++) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        Letter l{i, m.e[i] > 0 ? 1 : -1};
        s += letter_str(gens_, l, std::abs(m.e[i]));
    }
    return s.empty() ? "1" : s;
}

namespace {
bool scalar_str_is_atomic(const std::string& s) {
    for (size_t i = 0; i < s.size(); i++) {
        char c = s[i];
        if (c == '+' || c == '*' || c == '/' || c == '(') return false;
        if (c == '-' && i > 0 && s[i - 1] != '^') return false;
    }
    return true;
}
} // namespace

std::string Presentation::str(const Element& e) const {
    if (e.empty()) return "0";
    std::vector<const std::pair<const Monomial, Scalar>*> terms;
    for (auto& t : e) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [&](auto* a, auto* b) { return mono_less(a->first, b->first); });
    std::string out;
    for (auto* t : terms) {
        const Monomial& m = t->first;
        std::string cs = t->second.str();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && scalar_str_is_atomic(cs)) {
            neg = true;
            cs = cs.substr(1);
        }
        std::string body;
        if (m.is_unit()) {
            body = scalar_str_is_atomic(cs) ? cs : "(" + cs + ")";
        } else if (cs == "1") {
            body = str(m);
        } else {
            body = (scalar_str_is_atomic(cs) ? cs : "(" + cs + ")") + "*" + str(m);
        }
        if (out.empty()) {
            out = neg ? "-" + body : body;
        } else {
            out += neg ? " - " + body : " + " + body;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Element parser: one grammar covering scalars (in the variable p), generator
// names, inverse names, parentheses, and integer powers.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' ['-'] INT]
//   primary:= INT | NAME | '(' expr ')'
// ---------------------------------------------------------------------------
struct ElementParser {
    const Presentation& P;
    const std::string& s;
    size_t i = 0;

    ElementParser(const Presentation& p, const std::string& text) : P(p), s(text) {}

    [[noreturn]] void err(const std::string& msg) const {
        fail("ParseError", msg + " at offset " + std::to_string(i) + " in \"" + s + "\"");
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        i++;
        return true;
    }

    Element scalar_elem(const Scalar& c) const {
        Element e;
        add_term(e, P.unit(), c);
        return e;
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
        if (i == start) err("expected integer");
        long v = std::stol(s.substr(start, i - start));
        return neg ? -v : v;
    }

    Element primary() {
        skip_ws();
        if (i >= s.size()) err("unexpected end of input");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
            return scalar_elem(Scalar(Int(s.substr(start, i - start))));
        }
        if (c == '(') {
            i++;
            Element e = expr();
            if (!eat(')')) err("expected ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) i++;
            std::string name = s.substr(start, i - start);
            if (name == "p") return scalar_elem(Scalar::p_power(1));
            Letter l = P.letter(name);
            Element e;
            add_term(e, P.gen(l.slot, l.sign), Scalar(1));
            return e;
        }
        err("unexpected character");
    }

    Element factor() {
        Element base = primary();
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            i++;
            long k = integer();
            return P.pow(base, k);
        }
        return base;
    }

    Element term() {
        Element acc = factor();
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                i++;
                acc = P.mul(acc, factor());
            } else if (i < s.size() && s[i] == '/') {
                i++;
                acc = P.mul(acc, P.pow(factor(), -1));
            } else {
                return acc;
            }
        }
    }

    Element expr() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
        Element acc = term();
        if (neg) acc = scaled(acc, Scalar(-1));
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == '+') {
                i++;
                acc = acc + term();
            } else if (i < s.size() && s[i] == '-') {
                i++;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Element run() {
        Element e = expr();
        skip_ws();
        if (i != s.size()) err("trailing input");
        return e;
    }
};

Element Presentation::parse_element(const std::string& s) const {
    return ElementParser(*this, s).run();
}

Monomial Presentation::parse_monomial(const std::string& s) const {
    Element e = parse_element(s);
    require(e.size() == 1 && e.begin()->second.is_one(), "ParseError",
            "not a single monomial with coefficient 1: " + s);
    return e.begin()->first;
}

std::string Presentation::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["generators"] = nlohmann::json::array();
    for (const GenInfo& g : gens_) {
        nlohmann::json jg;
        jg["name"] = g.name;
        jg["exponents"] = g.int_exponents ? "int" : "nat";
        if (!g.inverse_name.empty()) jg["inverse_name"] = g.inverse_name;
        jg["weight"] = g.weight;
        jg["grading"] = g.grading;
        j["generators"].push_back(jg);
    }
    j["rules"] = nlohmann::json::array();
    for (auto& [lhs, rhs] : rules_) {
        nlohmann::json jr;
        jr["lhs"] = letter_str(gens_, lhs.first) + "*" + letter_str(gens_, lhs.second);
        jr["rhs"] = str(rhs);
        j["rules"].push_back(jr);
    }
    return j.dump(2);
}

std::shared_ptr<Presentation> Presentation::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        fail("ParseError", std::string("bad presentation JSON: ") + ex.what());
    }
    require(j.contains("name") && j.contains("generators"), "ParseError",
            "presentation JSON needs name and generators");
    std::vector<GenInfo> gens;
    for (auto& jg : j["generators"]) {
        GenInfo g;
        g.name = jg.at("name").get<std::string>();
        std::string ex = jg.value("exponents", "nat");
        require(ex == "nat" || ex == "int", "ParseError", "exponents must be nat or int");
        g.int_exponents = (ex == "int");
        g.inverse_name = jg.value("inverse_name", "");
        g.weight = jg.value("weight", 1);
        g.grading = jg.value("grading", std::vector<long>{});
        gens.push_back(g);
    }
    auto P = std::make_shared<Presentation>(j["name"].get<std::string>(), gens);
    for (auto& jr : j.value("rules", nlohmann::json::array()))
        P->add_rule(jr.at("lhs").get<std::string>(), jr.at("rhs").get<std::string>());
    return P;
}

} // namespace braidhom
