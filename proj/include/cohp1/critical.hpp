#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "systems.hpp"

namespace cohp1 {

/// A candidate wall for (n,d,k): a two-part decomposition
///   n = n1 + n2, d = d1 + d2, k = k1 + k2   (n1, n2 >= 1; k1, k2 >= 0)
/// together with the derived quantities
///   alpha_c = (d2*n - d*n2) / (n2*k - n*k2)   when the denominator is positive
///   e = d2 - n2*a
///   f = -k2*t + l*(k*n2 - k2*n) - k*e        when 0 < k < n (f >= 1 on
///                                             allowable walls, f == k2*m mod k)
/// The ordering conditions (subsystem of smaller slope but larger section
/// density) are not enforced here; is_allowable reports them.
struct CriticalDataSet {
    SystemType parent;
    Int n1, d1, k1;
    Int n2, d2, k2;
    std::optional<Rational> alpha_c;  // absent when n2*k - n*k2 <= 0
    Int e;
    std::optional<Int> f;  // defined only for 0 < k < n

    std::string str() const {
        return parent.str() + " -> (" + n1.str() + "," + d1.str() + "," + k1.str() + ")+(" +
               n2.str() + "," + d2.str() + "," + k2.str() + ")";
    }
};

inline CriticalDataSet make_critical(const SystemType& parent, const Int& n2, const Int& d2,
                                     const Int& k2) {
    validate(parent);
    CriticalDataSet w;
    w.parent = parent;
    w.n2 = n2;
    w.d2 = d2;
    w.k2 = k2;
    w.n1 = parent.n - n2;
    w.d1 = parent.d - d2;
    w.k1 = parent.k - k2;
    if (w.n1 < 1 || w.n2 < 1) throw std::domain_error("critical data set: both ranks must be >= 1");
    if (w.k1 < 0 || w.k2 < 0)
        throw std::domain_error("critical data set: section counts must be >= 0");

    const Int a = ceil_div(parent.d, parent.n);
    w.e = d2 - n2 * a;
    const Int denom = n2 * parent.k - parent.n * k2;
    if (denom > 0) w.alpha_c = Rational(d2 * parent.n - parent.d * n2, denom);
    if (parent.k > 0 && parent.k < parent.n) {
        const Coordinates c = decompose(parent);
        w.f = -k2 * c.t + c.l * (parent.k * n2 - k2 * parent.n) - parent.k * w.e;
    }
    return w;
}

struct FlipNumbers {
    Int c12;  // codimension count governing the alpha_c^+ side
    Int c21;  // codimension count governing the alpha_c^- side
};

inline FlipNumbers flip_numbers(const CriticalDataSet& w) {
    FlipNumbers fn;
    fn.c12 = -w.n1 * w.n2 - w.d2 * w.n1 + w.d1 * w.n2 + w.k1 * (w.d2 + w.n2 - w.k2);
    fn.c21 = -w.n1 * w.n2 + w.d2 * w.n1 - w.d1 * w.n2 + w.k2 * (w.d1 + w.n1 - w.k1);
    return fn;
}

/// The critical value, computed from both closed forms
///   (d2*n - d*n2) / (n2*k - n*k2)  and  (n*e + n2*t) / (n2*k - n*k2)
/// which must agree. Throws on nonpositive denominator (no critical value).
inline Rational alpha_c_of(const CriticalDataSet& w) {
    const Int denom = w.n2 * w.parent.k - w.parent.n * w.k2;
    if (denom <= 0)
        throw std::domain_error("alpha_c_of: nonpositive denominator for " + w.str());
    const Rational direct(w.d2 * w.parent.n - w.parent.d * w.n2, denom);
    if (w.parent.k > 0 && w.parent.k < w.parent.n) {
        const Coordinates c = decompose(w.parent);
        const Rational via_e(w.parent.n * w.e + w.n2 * c.t, denom);
        if (direct != via_e) throw std::logic_error("alpha_c_of: closed forms disagree");
    }
    return direct;
}

/// Rearranged first flip number, valid when 0 < k < n:
///   k*C12 = (n1-k1)(n*k2*l + k2*t - k*n2) + (n-k1)*f + k1*n2*m - k*k1*k2
/// Exposed separately so the identity can be cross-checked against the
/// direct formula.
inline Int c12_rearranged(const CriticalDataSet& w) {
    if (!w.f.has_value())
        throw std::domain_error("c12_rearranged: requires 0 < k < n for " + w.str());
    const SystemType& p = w.parent;
    const Coordinates c = decompose(p);
    const Int kc12 = (w.n1 - w.k1) * (p.n * w.k2 * c.l + w.k2 * c.t - p.k * w.n2) +
                     (p.n - w.k1) * *w.f + w.k1 * w.n2 * c.m - p.k * w.k1 * w.k2;
    if (kc12 % p.k != 0) throw std::logic_error("c12_rearranged: k does not divide k*C12");
    return kc12 / p.k;
}

/// Allowability of a candidate wall. failed_conditions uses the fixed
/// labels below, in this order:
///   slope-order   d2/n2 > d1/n1 and k1/n1 > k2/n2 (both strict)
///   alpha-window  t/k < alpha_c < (l*n+t)/k  (checked only when alpha_c exists)
///   bn-parent     d  >= (n^2-1)/k   - (n-k)
///   bn-sub1       d1 >= (n1^2-1)/k1 - (n1-k1)          (needs k1 >= 1)
///   bn-sub2       (n2,k2) = (1,0), or k2 >= 1 and d2 >= (n2^2-1)/k2 - (n2-k2)
struct AllowabilityReport {
    bool allowable = false;
    std::vector<std::string> failed_conditions;
};

inline AllowabilityReport is_allowable(const CriticalDataSet& w) {
    const SystemType& p = w.parent;
    if (!(p.k > 0 && p.k < p.n))
        throw std::domain_error("is_allowable: requires 0 < k < n, got " + p.str());
    AllowabilityReport rep;
    auto fail = [&rep](const char* label) { rep.failed_conditions.emplace_back(label); };

    // Rank-1 fractions compared by cross-multiplication; all ranks positive.
    const bool slope_ok = w.d2 * w.n1 > w.d1 * w.n2 && w.k1 * w.n2 > w.k2 * w.n1;
    if (!slope_ok) fail("slope-order");

    if (w.alpha_c.has_value()) {
        if (!necessary_range(p).contains(*w.alpha_c)) fail("alpha-window");
    } else if (slope_ok) {
        // Unreachable: k1*n2 > k2*n1 forces a positive denominator.
        throw std::logic_error("is_allowable: slope order holds but alpha_c undefined");
    }

    // d >= (n^2-1)/k - (n-k), cleared of denominators (k > 0).
    if (!(p.k * p.d >= p.n * p.n - 1 - p.k * (p.n - p.k))) fail("bn-parent");

    if (w.k1 >= 1) {
        if (!(w.k1 * w.d1 >= w.n1 * w.n1 - 1 - w.k1 * (w.n1 - w.k1))) fail("bn-sub1");
    }
    // k1 = 0 already fails slope-order; bn-sub1 is left unjudged there.

    const bool sub2_plain = (w.k2 == 0 && w.n2 == 1);
    const bool sub2_bn =
        w.k2 >= 1 && w.k2 * w.d2 >= w.n2 * w.n2 - 1 - w.k2 * (w.n2 - w.k2);
    if (!(sub2_plain || sub2_bn)) fail("bn-sub2");

    rep.allowable = rep.failed_conditions.empty();
    return rep;
}

/// All allowable walls of (n,d,k), ordered by (n2, k2, d2). For each
/// subsystem shape (n2,k2) with positive critical-value denominator
/// D = n2*k - n*k2, the window condition pins d2 to the open interval
///   ((t*D + k*d*n2)/(k*n), ((l*n+t)*D + k*d*n2)/(k*n)),
/// so only finitely many candidates exist; each is then re-checked in full.
inline std::vector<CriticalDataSet> enumerate_walls(const SystemType& s) {
    validate(s);
    if (!(s.k > 0 && s.k < s.n))
        throw std::domain_error("enumerate_walls: requires 0 < k < n, got " + s.str());
    std::vector<CriticalDataSet> out;
    const AlphaRange window = necessary_range(s);
    if (window.empty()) return out;
    const Coordinates c = decompose(s);
    for (Int n2 = 1; n2 < s.n; ++n2) {
        for (Int k2 = 0; k2 <= s.k; ++k2) {
            const Int D = n2 * s.k - s.n * k2;
            if (D <= 0) continue;
            const Rational lo(c.t * D + s.k * s.d * n2, s.k * s.n);
            const Rational hi((c.l * s.n + c.t) * D + s.k * s.d * n2, s.k * s.n);
            for (Int d2 = lo.floor() + 1; d2 <= hi.ceil() - 1; ++d2) {
                CriticalDataSet w = make_critical(s, n2, d2, k2);
                if (is_allowable(w).allowable) out.push_back(std::move(w));
            }
        }
    }
    // Loop order already yields (n2, k2, d2) lexicographic order.
    return out;
}

/// What happens when alpha crosses a critical value, decided by the minimum
/// flip numbers over the walls at that value. Walls with C12 = C21 = 0 do
/// not move the comparison and are set aside first; if every wall at the
/// value is of that kind the crossing changes nothing.
enum class FlipOutcome {
    Birational,          // both minima positive: the two sides agree in codim >= 1
    NoWall,              // only C12 = C21 = 0 walls at this value
    MinusSideEmpty,      // min C21 = 0 < min C12: the space is empty just below
    PlusSideEmpty,       // min C12 = 0 < min C21: the space is empty just above
    NegativeFlipNumber,  // a negative minimum: the flip loci are empty
};

inline const char* to_string(FlipOutcome o) {
    switch (o) {
        case FlipOutcome::Birational: return "birational";
        case FlipOutcome::NoWall: return "no-wall";
        case FlipOutcome::MinusSideEmpty: return "minus-side-empty";
        case FlipOutcome::PlusSideEmpty: return "plus-side-empty";
        case FlipOutcome::NegativeFlipNumber: return "negative-flip-number";
    }
    return "?";
}

inline FlipOutcome outcome_of(const std::vector<const CriticalDataSet*>& walls_at_value) {
    if (walls_at_value.empty()) throw std::domain_error("outcome_of: no walls supplied");
    std::optional<Int> min12;
    std::optional<Int> min21;
    for (const CriticalDataSet* w : walls_at_value) {
        const FlipNumbers fn = flip_numbers(*w);
        if (fn.c12 == 0 && fn.c21 == 0) continue;
        if (!min12 || fn.c12 < *min12) min12 = fn.c12;
        if (!min21 || fn.c21 < *min21) min21 = fn.c21;
    }
    if (!min12) return FlipOutcome::NoWall;
    if (*min12 < 0 || *min21 < 0) return FlipOutcome::NegativeFlipNumber;
    if (*min12 > 0 && *min21 > 0) return FlipOutcome::Birational;
    if (*min21 == 0 && *min12 > 0) return FlipOutcome::MinusSideEmpty;
    if (*min12 == 0 && *min21 > 0) return FlipOutcome::PlusSideEmpty;
    // min C12 = min C21 = 0 would force a wall with C12 = C21 = 0, already
    // set aside, alongside walls contributing 0 to both minima separately;
    // that combination cannot produce a consistent crossing.
    throw std::logic_error("outcome_of: both flip-number minima vanish");
}

/// All critical values in a wall list with their outcomes, ascending in alpha.
inline std::vector<std::pair<Rational, FlipOutcome>> outcomes_by_alpha(
    const std::vector<CriticalDataSet>& walls) {
    std::vector<Rational> values;
    for (const CriticalDataSet& w : walls) values.push_back(*w.alpha_c);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::pair<Rational, FlipOutcome>> out;
    for (const Rational& a : values) {
        std::vector<const CriticalDataSet*> group;
        for (const CriticalDataSet& w : walls)
            if (*w.alpha_c == a) group.push_back(&w);
        out.emplace_back(a, outcome_of(group));
    }
    return out;
}

inline std::vector<std::pair<Rational, FlipOutcome>> outcomes_by_alpha(const SystemType& s) {
    return outcomes_by_alpha(enumerate_walls(s));
}

/// Outcome at one prescribed critical value. Throws if no allowable wall
/// lives there.
inline FlipOutcome flip_outcome(const SystemType& s, const Rational& alpha) {
    const std::vector<CriticalDataSet> walls = enumerate_walls(s);
    std::vector<const CriticalDataSet*> group;
    for (const CriticalDataSet& w : walls)
        if (*w.alpha_c == alpha) group.push_back(&w);
    if (group.empty())
        throw std::domain_error("flip_outcome: no allowable wall of " + s.str() + " at alpha=" +
                                alpha.str());
    return outcome_of(group);
}

}  // namespace cohp1
