#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confal/rational.hpp"

namespace confal {

/// Closed variable alphabet. Lam/Mu/Nu are bracket parameters, D is the
/// module derivation, X/Y/Z/W carry the derivation on tensor legs 1..4.
enum class Var : std::uint8_t { Lam = 0, Mu, Nu, D, X, Y, Z, W };

inline constexpr std::size_t kVarCount = 8;

inline constexpr std::array<Var, kVarCount> kVarOrder = {
    Var::Lam, Var::Mu, Var::Nu, Var::D, Var::X, Var::Y, Var::Z, Var::W};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Bitmask of variables, for alphabet restrictions.
using VarSet = std::uint8_t;
inline constexpr VarSet var_bit(Var v) {
    return static_cast<VarSet>(1u << static_cast<unsigned>(v));
}
inline constexpr VarSet kVarsLamD = var_bit(Var::Lam) | var_bit(Var::D);
inline constexpr VarSet kVarsLam = var_bit(Var::Lam);
inline constexpr VarSet kVarsD = var_bit(Var::D);
inline constexpr VarSet kVarsXY = var_bit(Var::X) | var_bit(Var::Y);

/// Exponent vector over the fixed alphabet; compares lexicographically in
/// the Var order, which is the monomial order used everywhere.
using Mono = std::array<std::uint32_t, kVarCount>;

/// Multivariate polynomial with exact rational coefficients in canonical
/// form: no zero coefficients are stored, equality is term-map equality.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(Rat c);
    static Poly variable(Var v);
    static Poly monomial(Rat c, Mono m);

    static Poly lam() { return variable(Var::Lam); }
    static Poly mu() { return variable(Var::Mu); }
    static Poly nu() { return variable(Var::Nu); }
    static Poly d() { return variable(Var::D); }
    static Poly x() { return variable(Var::X); }
    static Poly y() { return variable(Var::Y); }
    static Poly z() { return variable(Var::Z); }
    static Poly w() { return variable(Var::W); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value of a constant polynomial (zero included); nullopt otherwise.
    std::optional<Rat> constant_value() const;

    const std::map<Mono, Rat>& terms() const { return terms_; }

    unsigned degree(Var v) const;
    bool uses_only(VarSet allowed) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;

    /// Simultaneous substitution; unbound variables pass through.
    Poly subst(const std::map<Var, Poly>& bindings) const;

    /// Substitute rational values for the given variables.
    Poly eval(const std::map<Var, Rat>& point) const;

    /// View as a univariate polynomial in `v`: exponent -> coefficient
    /// polynomial in the remaining variables. Zero poly gives an empty map.
    std::map<unsigned, Poly> coefficients_in(Var v) const;

    /// Exact quotient a/b, or nullopt when b does not divide a.
    static std::optional<Poly> exact_div(const Poly& a, const Poly& b);

    /// Canonical text form: terms in descending monomial order, `*` between
    /// factors, `^` for powers, rational coefficients as p/q.
    std::string str() const;

    /// Parses the canonical form plus forgiving extras (whitespace, implicit
    /// multiplication, parentheses, unary minus). Throws ParseError.
    static Poly parse(std::string_view text);

private:
    void add_term(const Mono& m, const Rat& c);

    std::map<Mono, Rat> terms_;
};

}  // namespace confal
