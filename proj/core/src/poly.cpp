#include "confal/poly.hpp"

#include <algorithm>
#include <cctype>

#include "confal/errors.hpp"

namespace confal {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "lam", "mu", "nu", "d", "x", "y", "z", "w"};

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r{};
    for (std::size_t i = 0; i < kVarCount; ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
    Mono r{};
    for (std::size_t i = 0; i < kVarCount; ++i) r[i] = b[i] - a[i];
    return r;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

Poly Poly::constant(Rat c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(Mono{}, std::move(c));
    return p;
}

Poly Poly::variable(Var v) {
    Mono m{};
    m[static_cast<std::size_t>(v)] = 1;
    return monomial(Rat(1), m);
}

Poly Poly::monomial(Rat c, Mono m) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

std::optional<Rat> Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_.begin()->first == Mono{})
        return terms_.begin()->second;
    return std::nullopt;
}

unsigned Poly::degree(Var v) const {
    unsigned deg = 0;
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [m, c] : terms_) deg = std::max(deg, m[idx]);
    return deg;
}

bool Poly::uses_only(VarSet allowed) const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (m[i] != 0 && !(allowed & var_bit(static_cast<Var>(i)))) return false;
    return true;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(Rat(1));
    Poly base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        if (e >>= 1u) base *= base;
    }
    return result;
}

Poly Poly::subst(const std::map<Var, Poly>& bindings) const {
    if (bindings.empty()) return *this;
    // Precompute powers of each bound image up to the degree present.
    std::array<std::vector<Poly>, kVarCount> powers;
    for (const auto& [v, image] : bindings) {
        unsigned deg = degree(v);
        auto& pw = powers[static_cast<std::size_t>(v)];
        pw.reserve(deg + 1);
        pw.push_back(Poly::constant(Rat(1)));
        for (unsigned e = 1; e <= deg; ++e) pw.push_back(pw.back() * image);
    }
    Poly result;
    for (const auto& [m, c] : terms_) {
        Mono passthrough{};
        Poly factor = Poly::constant(Rat(1));
        bool any_bound = false;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (m[i] == 0) continue;
            if (!powers[i].empty()) {
                factor *= powers[i][m[i]];
                any_bound = true;
            } else {
                passthrough[i] = m[i];
            }
        }
        Poly term = Poly::monomial(c, passthrough);
        if (any_bound) term *= factor;
        result += term;
    }
    return result;
}

Poly Poly::eval(const std::map<Var, Rat>& point) const {
    std::map<Var, Poly> bindings;
    for (const auto& [v, value] : point) bindings.emplace(v, Poly::constant(value));
    return subst(bindings);
}

std::map<unsigned, Poly> Poly::coefficients_in(Var v) const {
    std::map<unsigned, Poly> out;
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [m, c] : terms_) {
        Mono rest = m;
        unsigned e = rest[idx];
        rest[idx] = 0;
        out[e] += Poly::monomial(c, rest);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::optional<Poly> Poly::exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    Poly rem = a;
    Poly quot;
    const auto& [lead_m, lead_c] = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (!mono_divides(lead_m, rm)) return std::nullopt;
        Poly t = Poly::monomial(rc / lead_c, mono_div(rm, lead_m));
        quot += t;
        rem -= t * b;
    }
    return quot;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool first = out.empty();
        bool negative = c.num() < 0;
        Rat abs_c = negative ? -c : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        std::string vars;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += kVarNames[i];
            if (m[i] > 1) {
                vars += '^';
                vars += std::to_string(m[i]);
            }
        }
        if (vars.empty()) {
            out += abs_c.str();
        } else if (abs_c.is_one()) {
            out += vars;
        } else {
            out += abs_c.str();
            out += '*';
            out += vars;
        }
    }
    return out;
}

namespace {

/// Recursive-descent parser for polynomial expressions.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse() {
        Poly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Poly expression() {
        Poly p;
        if (consume('-')) {
            p = -term();
        } else {
            consume('+');
            p = term();
        }
        while (true) {
            if (consume('+')) {
                p += term();
            } else if (consume('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Poly term() {
        Poly p = factor();
        while (true) {
            skip_ws();
            if (consume('*')) {
                p *= factor();
                continue;
            }
            // Implicit multiplication before an atom start.
            if (pos_ < text_.size()) {
                char c = text_[pos_];
                if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                    p *= factor();
                    continue;
                }
            }
            return p;
        }
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            unsigned e = read_uint();
            return base.pow(e);
        }
        return base;
    }

    unsigned read_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected exponent");
        return static_cast<unsigned>(
            std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected polynomial atom");
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (c == '(') {
            ++pos_;
            Poly p = expression();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            // A '/' directly followed by digits is a rational literal.
            if (pos_ < text_.size() && text_[pos_] == '/' &&
                pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            auto r = Rat::parse(text_.substr(start, pos_ - start));
            if (!r) fail("bad rational literal");
            return Poly::constant(*r);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            auto v = var_from_name(name);
            if (!v) fail("unknown variable '" + std::string(name) + "'");
            return Poly::variable(*v);
        }
        fail("unexpected character in polynomial");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace confal
