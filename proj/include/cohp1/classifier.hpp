#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "critical.hpp"
#include "rational.hpp"
#include "segre.hpp"
#include "systems.hpp"

namespace cohp1 {

enum class Status {
    EmptyAllAlpha,  // no alpha admits a stable system
    NonEmpty,       // the exact set of good alpha is known (an open interval)
    NecessaryOnly,  // only the necessary window is known at this time
};

inline const char* to_string(Status s) {
    switch (s) {
        case Status::EmptyAllAlpha: return "EMPTY_ALL_ALPHA";
        case Status::NonEmpty: return "NONEMPTY";
        case Status::NecessaryOnly: return "NECESSARY_ONLY";
    }
    return "?";
}

/// One line of justification: which criterion decided the verdict, and for
/// wall-driven steps the critical value with its crossing outcome.
struct EvidenceItem {
    std::string label;
    std::optional<Rational> alpha;
    std::optional<FlipOutcome> outcome;
};

struct ExistenceVerdict {
    Status status = Status::NecessaryOnly;
    std::optional<AlphaRange> range;  // present exactly when status == NonEmpty
    AlphaRange necessary;
    std::vector<EvidenceItem> evidence;
};

namespace detail {

inline ExistenceVerdict verdict_nonempty(AlphaRange range, AlphaRange necessary,
                                         std::vector<EvidenceItem> ev) {
    return ExistenceVerdict{Status::NonEmpty, std::move(range), std::move(necessary),
                            std::move(ev)};
}

inline ExistenceVerdict verdict_empty(AlphaRange necessary, std::vector<EvidenceItem> ev) {
    return ExistenceVerdict{Status::EmptyAllAlpha, std::nullopt, std::move(necessary),
                            std::move(ev)};
}

inline ExistenceVerdict verdict_open(AlphaRange necessary, std::vector<EvidenceItem> ev) {
    return ExistenceVerdict{Status::NecessaryOnly, std::nullopt, std::move(necessary),
                            std::move(ev)};
}

/// Small-rank table for k = 3, n <= 3: settled for every degree.
inline ExistenceVerdict classify_k3_small_rank(const SystemType& s) {
    const Int a = ceil_div(s.d, s.n);
    const Int t = s.n * a - s.d;
    const AlphaRange necessary{Rational(t, 3), std::nullopt};
    const Int min_d = s.n == 1 ? 2 : (s.n == 2 ? 2 : 4);
    if (s.d < min_d) return verdict_empty(necessary, {{"small-rank-table", {}, {}}});
    if ((s.n == 2 && s.d == 3) || (s.n == 3 && s.d == 5)) {
        // The one raised lower endpoint per rank: (2,3,3) needs alpha > 1,
        // (3,5,3) needs alpha > 2/3.
        const Rational lower = s.n == 2 ? Rational(1) : Rational(2, 3);
        return verdict_nonempty(AlphaRange{lower, std::nullopt}, necessary,
                                {{"small-rank-exception", {}, {}}});
    }
    return verdict_nonempty(necessary, necessary, {{"small-rank-table", {}, {}}});
}

/// The k = 3 pairs whose nonempty range starts strictly above the necessary
/// window's lower endpoint. Values are the walls' critical values; classify
/// re-derives each crossing outcome as evidence.
inline std::optional<Rational> k3_raised_lower(const Int& n, const Int& d) {
    if (n == 4 && d == 7) return Rational(3, 5);
    if (n == 5 && d == 9) return Rational(3, 4);
    if (n == 6 && d == 11) return Rational(1);
    if (n == 7 && d == 13) return Rational(3, 2);
    return std::nullopt;
}

}  // namespace detail

/// Decides for which alpha the moduli space of alpha-stable coherent systems
/// of type (n,d,k) on the projective line is nonempty. Ranges are open
/// intervals; NECESSARY_ONLY marks the regimes where only the necessary
/// window is currently known.
inline ExistenceVerdict classify(const SystemType& s) {
    using detail::verdict_empty;
    using detail::verdict_nonempty;
    using detail::verdict_open;
    validate(s);
    const Int n = s.n, d = s.d, k = s.k;
    const Int a = ceil_div(d, n);
    const Int t = n * a - d;
    const AlphaRange all_alpha{Rational(0), std::nullopt};

    if (k == 0) {
        // No sections: stability is plain bundle stability, which on the
        // projective line holds only in rank 1.
        if (n == 1) return verdict_nonempty(all_alpha, all_alpha, {{"line-bundle", {}, {}}});
        return verdict_empty(all_alpha, {{"split-bundle", {}, {}}});
    }

    if (k == 3 && n <= 3) return detail::classify_k3_small_rank(s);

    if (n == 1) return verdict_open(all_alpha, {{"unsettled", {}, {}}});

    if (k == n) {
        if (t == 0) {
            // Balanced full-section case: nonempty for every alpha exactly
            // when the slope is at least 2.
            if (a >= 2)
                return verdict_nonempty(all_alpha, all_alpha, {{"balanced-full-sections", {}, {}}});
            return verdict_empty(all_alpha, {{"balanced-full-sections", {}, {}}});
        }
        return verdict_open(AlphaRange{Rational(t, k), std::nullopt}, {{"unsettled", {}, {}}});
    }

    if (k > n)
        return verdict_open(AlphaRange{Rational(t, k), std::nullopt}, {{"unsettled", {}, {}}});

    // From here 0 < k < n.
    const Coordinates c = decompose(s);
    const AlphaRange necessary = necessary_range(s);

    if (k == 1) {
        if (c.l >= 1) return verdict_nonempty(necessary, necessary, {{"k1-window", {}, {}}});
        return verdict_empty(necessary, {{"empty-necessary-window", {}, {}}});
    }

    if (k == 2) {
        if (c.l < 1) return verdict_empty(necessary, {{"empty-necessary-window", {}, {}}});
        if (2 * d < n * (n - 2) + 3)
            return verdict_empty(necessary, {{"negative-expected-dimension", {}, {}}});
        if (n == 4 && d == 6)
            return verdict_empty(necessary, {{"k2-exceptional-pair", {}, {}}});
        return verdict_nonempty(necessary, necessary, {{"k2-window", {}, {}}});
    }

    if (k == 3) {
        if (c.l < 1) return verdict_empty(necessary, {{"empty-necessary-window", {}, {}}});
        if (3 * d < n * (n - 3) + 8)
            return verdict_empty(necessary, {{"negative-expected-dimension", {}, {}}});
        if (n == 6 && d == 9)
            return verdict_empty(necessary, {{"k3-exceptional-pair", {}, {}}});
        if (const auto raised = detail::k3_raised_lower(n, d)) {
            std::vector<EvidenceItem> ev{{"k3-exceptional-pair", {}, {}}};
            ev.push_back({"wall", *raised, flip_outcome(s, *raised)});
            return verdict_nonempty(AlphaRange{*raised, necessary.upper}, necessary,
                                    std::move(ev));
        }
        return verdict_nonempty(necessary, necessary, {{"k3-window", {}, {}}});
    }

    if (n == 6 && d == 7 && k == 4) {
        // Fully settled example beyond k = 3: nonempty exactly on (5/4, 2);
        // the wall at 2 kills the plus side and nothing below obstructs.
        std::vector<EvidenceItem> ev{{"case-6-7-4", {}, {}}};
        ev.push_back({"wall", Rational(2), flip_outcome(s, Rational(2))});
        return verdict_nonempty(AlphaRange{Rational(5, 4), Rational(2)}, necessary,
                                std::move(ev));
    }

    if (t == 0) {
        // Balanced degree, k >= 4: existence just above 0 plus a sweep of
        // every wall in the window decides the full range.
        if (c.l < 1) return verdict_empty(necessary, {{"empty-necessary-window", {}, {}}});
        if (!zero_plus_exists(n, a, k))
            return verdict_empty(necessary, {{"negative-expected-dimension", {}, {}}});
        std::vector<EvidenceItem> ev{{"balanced-zero-plus", {}, {}}};
        std::optional<Rational> cap;
        for (const auto& [alpha, outcome] : outcomes_by_alpha(s)) {
            ev.push_back({"wall", alpha, outcome});
            if (outcome == FlipOutcome::PlusSideEmpty) {
                cap = alpha;
                break;
            }
            if (outcome == FlipOutcome::MinusSideEmpty)
                throw std::logic_error(
                    "classify: minus-side-empty wall above an occupied 0+ region for " + s.str());
        }
        return verdict_nonempty(AlphaRange{Rational(0), cap ? *cap : *necessary.upper},
                                necessary, std::move(ev));
    }

    if (c.l < 1) return verdict_empty(necessary, {{"empty-necessary-window", {}, {}}});
    if (beta(s) < 0) return verdict_empty(necessary, {{"negative-expected-dimension", {}, {}}});
    return verdict_open(necessary, {{"unsettled", {}, {}}});
}

/// Which of the catalogued construction patterns produces a stable system
/// of type (n,d,k) just above the window's lower endpoint.
enum class Route {
    BalancedZeroPlus,  // t = 0, settled by the balanced existence criterion
    TOne,              // t = 1, a >= k
    TKMinusOne,        // t = k-1, a >= 2
    TK,                // t = k, a >= 3
    SpecialExtension,  // t = k, a = 2, 2t > n: one extension step with
                       // pairwise independent section images
    TAboveK,           // t > k, descending to the balanced type (t, t(a-1), k)
    None,
};

inline const char* to_string(Route r) {
    switch (r) {
        case Route::BalancedZeroPlus: return "t=0";
        case Route::TOne: return "t=1";
        case Route::TKMinusOne: return "t=k-1";
        case Route::TK: return "t=k";
        case Route::SpecialExtension: return "special-extension";
        case Route::TAboveK: return "t>k";
        case Route::None: return "none";
    }
    return "?";
}

inline Route construction_route(const SystemType& s) {
    validate(s);
    if (!(s.k >= 2 && s.k < s.n))
        throw std::domain_error("construction_route: requires 2 <= k < n, got " + s.str());
    const Coordinates c = decompose(s);
    if (c.l < 1)
        throw std::domain_error("construction_route: necessary window of " + s.str() +
                                " is empty");
    const Int &n = s.n, &k = s.k, &a = c.a, &t = c.t;

    if (t == 0) return zero_plus_exists(n, a, k) ? Route::BalancedZeroPlus : Route::None;
    if (t == 1 && a >= k) return Route::TOne;
    if (t == k - 1 && a >= 2) return Route::TKMinusOne;
    if (t == k && a >= 3) return Route::TK;
    if (t == k && a == 2 && t >= 2 && 2 * t > n) return Route::SpecialExtension;
    if (t > k && zero_plus_exists(t, a - 1, k)) {
        // Descent: the balanced type (t, t(a-1), k) must exist at 0+ and
        // cross all of its walls birationally upward.
        bool all_positive = true;
        for (const CriticalDataSet& w : enumerate_walls(SystemType{t, t * (a - 1), k})) {
            if (flip_numbers(w).c12 <= 0) {
                all_positive = false;
                break;
            }
        }
        if (all_positive) return Route::TAboveK;
    }
    return Route::None;
}

}  // namespace cohp1
