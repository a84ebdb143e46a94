#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cohp1 {

/// Arbitrary-precision integer. Every quantity in this library is exact;
/// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Floor division (rounds toward -infinity) for any sign combination.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;  // truncates toward zero
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

/// Exact integer square root: the unique s with s^2 <= x < (s+1)^2.
inline Int isqrt(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt: negative input");
    return boost::multiprecision::sqrt(x);
}

/// floor((a + sqrt(d)) / 2) for integer a (any sign) and d >= 0, computed
/// without floating point. With s = isqrt(d), a case analysis on the parity
/// of a + s shows floor_div(a + s, 2) equals the true floor whether or not
/// d is a perfect square.
inline Int floor_avg_with_sqrt(const Int& a, const Int& d) {
    return floor_div(a + isqrt(d), 2);
}

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Serializes as "p/q", or "p" alone when q = 1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}                // NOLINT(google-explicit-constructor)
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Denominators are positive, so cross-multiplication preserves order.
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const Int lhs = x.num_ * y.den_;
        const Int rhs = y.num_ * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;  // > 0 always
};

/// Parses "p" or "p/q" (q > 0 after normalization). Throws on malformed input.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty()) throw std::invalid_argument("parse_rational: empty integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("parse_rational: sign without digits");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("parse_rational: invalid digit in '" + std::string(s) + "'");
        return Int(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(std::move(num), std::move(den));
}

}  // namespace cohp1
