#include "confal/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace confal {

namespace {

BigInt gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidArgument("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    *this = Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    *this = Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    *this = Rat(num_ * o.num_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw InvalidArgument("division by zero rational");
    *this = Rat(num_ * o.den_, den_ * o.num_);
    return *this;
}

Rat Rat::pow(unsigned e) const {
    Rat result(1);
    Rat base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Rat Rat::inverse() const {
    if (num_ == 0) throw InvalidArgument("inverse of zero rational");
    return Rat(den_, num_);
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::optional<Rat> Rat::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out += text[pos];
            ++pos;
        }
        return pos > start;
    };
    std::string num_digits;
    if (!read_digits(num_digits)) return std::nullopt;
    BigInt num(num_digits);
    if (neg) num = -num;
    if (pos == text.size()) return Rat(std::move(num), 1);
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    std::string den_digits;
    if (!read_digits(den_digits) || pos != text.size()) return std::nullopt;
    BigInt den(den_digits);
    if (den == 0) return std::nullopt;
    return Rat(std::move(num), std::move(den));
}

}  // namespace confal
