#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "classifier.hpp"
#include "critical.hpp"
#include "rational.hpp"
#include "systems.hpp"

namespace cohp1 {

/// Sweep window over parent types: fixed k, ranks n_min..n_max, and degrees
/// cut off either at a fixed d_max or by the coordinate bound l <= l_max
/// (the default cutoff is l <= 6).
struct SearchWindow {
    Int k;
    Int n_min;
    Int n_max;
    std::optional<Int> d_max;
    std::optional<Int> l_max;
};

inline void validate(const SearchWindow& w) {
    if (!(w.k >= 1 && w.k < w.n_min && w.n_min <= w.n_max))
        throw std::domain_error("search: requires 1 <= k < n_min <= n_max");
    if (w.d_max && w.l_max) throw std::domain_error("search: d_max and l_max are exclusive");
    if (w.d_max && *w.d_max < 0) throw std::domain_error("search: d_max must be >= 0");
    if (w.l_max && *w.l_max < 0) throw std::domain_error("search: l_max must be >= 0");
}

/// Degrees swept for one rank. In l-cutoff mode every degree with l <= L is
/// included; l = (k*a - t - m)/(n-k) grows roughly like k*d/(n(n-k)), so
/// d <= n*floor((L(n-k) + 2n - k - 2)/k) covers all of them, and the exact
/// condition is re-checked per degree.
inline std::vector<Int> sweep_degrees(const Int& n, const SearchWindow& w) {
    std::vector<Int> out;
    if (w.d_max) {
        for (Int d = 0; d <= *w.d_max; ++d) out.push_back(d);
        return out;
    }
    const Int L = w.l_max ? *w.l_max : Int(6);
    const Int cap = n * floor_div(L * (n - w.k) + 2 * n - w.k - 2, w.k);
    for (Int d = 0; d <= cap; ++d) {
        if (decompose(SystemType{n, d, w.k}).l <= L) out.push_back(d);
    }
    return out;
}

/// An allowable wall whose flip numbers are not both positive, found by the
/// window sweep. These are the obstructions to the generic dichotomy.
struct NonpositiveHit {
    CriticalDataSet wall;
    FlipNumbers fn;
};

inline std::vector<NonpositiveHit> search_nonpositive(const SearchWindow& w) {
    validate(w);
    std::vector<NonpositiveHit> out;
    for (Int n = w.n_min; n <= w.n_max; ++n) {
        for (const Int& d : sweep_degrees(n, w)) {
            for (CriticalDataSet& wall : enumerate_walls(SystemType{n, d, w.k})) {
                const FlipNumbers fn = flip_numbers(wall);
                if (fn.c12 <= 0 || fn.c21 <= 0) out.push_back({std::move(wall), fn});
            }
        }
    }
    return out;  // ordered by (n, d, n2, k2, d2) by construction
}

/// Per-parent summary of the window sweep: verdict, wall outcomes, and a
/// flag marking departures from the generic expectation that l >= 1 plus
/// nonnegative expected dimension give the full necessary window.
struct ReportRow {
    SystemType sys;
    AlphaRange necessary;
    ExistenceVerdict verdict;
    std::vector<std::pair<Rational, FlipOutcome>> walls;
    bool flagged = false;
};

inline std::vector<ReportRow> stability_window_report(const SearchWindow& w) {
    validate(w);
    std::vector<ReportRow> out;
    for (Int n = w.n_min; n <= w.n_max; ++n) {
        for (const Int& d : sweep_degrees(n, w)) {
            ReportRow row;
            row.sys = SystemType{n, d, w.k};
            row.necessary = necessary_range(row.sys);
            row.verdict = classify(row.sys);
            row.walls = outcomes_by_alpha(row.sys);
            const Coordinates c = decompose(row.sys);
            const bool expected_nonempty = c.l >= 1 && beta(row.sys) >= 0;
            switch (row.verdict.status) {
                case Status::NonEmpty:
                    row.flagged = !expected_nonempty || !(*row.verdict.range == row.necessary);
                    break;
                case Status::EmptyAllAlpha:
                    row.flagged = expected_nonempty;
                    break;
                case Status::NecessaryOnly:
                    row.flagged = false;  // nothing settled to deviate from
                    break;
            }
            out.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace cohp1
