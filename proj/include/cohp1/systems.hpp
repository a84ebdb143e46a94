#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace cohp1 {

/// Numerical type (n, d, k) of a coherent system on the projective line:
/// rank n >= 1, degree d (any sign), number of sections k >= 0.
struct SystemType {
    Int n;
    Int d;
    Int k;

    friend bool operator==(const SystemType&, const SystemType&) = default;

    std::string str() const { return "(" + n.str() + "," + d.str() + "," + k.str() + ")"; }
};

inline void validate(const SystemType& s) {
    if (s.n < 1) throw std::domain_error("system type: rank must be >= 1, got n=" + s.n.str());
    if (s.k < 0) throw std::domain_error("system type: section count must be >= 0, got k=" + s.k.str());
}

/// Expected dimension of the moduli space:
/// beta(n,d,k) = -n^2 + 1 - k(k - d - n). Nonnegativity is necessary for
/// the space to be nonempty for any alpha.
inline Int beta(const SystemType& s) {
    validate(s);
    return -s.n * s.n + 1 - s.k * (s.k - s.d - s.n);
}

/// Derived coordinates for 0 < k < n:
///   d = n*a - t   with 0 <= t < n   (a is the ceiling slope)
///   k*a = l*(n-k) + t + m   with 0 <= m < n-k
/// l >= 1 is necessary for nonemptiness; the alpha window below is built
/// from these.
struct Coordinates {
    Int a;
    Int t;
    Int l;
    Int m;

    friend bool operator==(const Coordinates&, const Coordinates&) = default;
};

inline Coordinates decompose(const SystemType& s) {
    validate(s);
    if (!(s.k > 0 && s.k < s.n))
        throw std::domain_error("decompose: requires 0 < k < n, got " + s.str());
    Coordinates c;
    c.a = ceil_div(s.d, s.n);
    c.t = s.n * c.a - s.d;
    const Int nk = s.n - s.k;
    c.l = floor_div(s.k * c.a - c.t, nk);
    c.m = s.k * c.a - c.t - c.l * nk;
    return c;
}

/// Open interval of alpha values; upper may be absent (unbounded).
struct AlphaRange {
    Rational lower;
    std::optional<Rational> upper;  // nullopt means +infinity

    bool empty() const { return upper.has_value() && *upper <= lower; }
    bool contains(const Rational& x) const {
        return x > lower && (!upper.has_value() || x < *upper);
    }

    friend bool operator==(const AlphaRange&, const AlphaRange&) = default;

    std::string str() const {
        return "(" + lower.str() + ", " + (upper ? upper->str() : "inf") + ")";
    }
};

/// The necessary open window (t/k, (l*n+t)/k) for 0 < k < n. Empty (upper
/// <= lower) exactly when l <= 0.
inline AlphaRange necessary_range(const SystemType& s) {
    const Coordinates c = decompose(s);
    return AlphaRange{Rational(c.t, s.k), Rational(c.l * s.n + c.t, s.k)};
}

/// Equivalent closed form of the window's upper endpoint:
/// d/(n-k) - m*n/(k(n-k)). Agrees with (l*n+t)/k identically.
inline Rational necessary_upper_alt(const SystemType& s) {
    const Coordinates c = decompose(s);
    const Int nk = s.n - s.k;
    Rational alt = Rational(s.d, nk) - Rational(c.m * s.n, s.k * nk);
    if (alt != *necessary_range(s).upper)
        throw std::logic_error("necessary_upper_alt: closed forms disagree for " + s.str());
    return alt;
}

/// alpha-slope (d + alpha*k)/n used by the stability inequality.
inline Rational mu_alpha(const Int& d, const Int& n, const Int& k, const Rational& alpha) {
    if (n < 1) throw std::domain_error("mu_alpha: rank must be >= 1");
    return (Rational(d) + alpha * Rational(k)) / Rational(n);
}

}  // namespace cohp1
