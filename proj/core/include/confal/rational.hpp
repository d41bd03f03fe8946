#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "confal/errors.hpp"

namespace confal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Canonical form: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);  ///< throws InvalidArgument on /0

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rat pow(unsigned e) const;
    Rat inverse() const;  ///< throws InvalidArgument on zero

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Accepts an optional sign, digits, optionally "/digits".
    static std::optional<Rat> parse(std::string_view text);

private:
    BigInt num_;
    BigInt den_;
};

}  // namespace confal
