#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "systems.hpp"

namespace cohp1 {

/// Parameters for the section-subspace bound: rank n, normalized slope a
/// (degree n*a), k global sections, subspace dimension q with 1 <= q <= k < n.
struct SegreParams {
    Int n;
    Int a;
    Int k;
    Int q;
};

inline void validate(const SegreParams& p) {
    if (!(p.q >= 1 && p.q <= p.k && p.k < p.n))
        throw std::domain_error("segre: requires 1 <= q <= k < n");
    if (p.a < 0) throw std::domain_error("segre: requires a >= 0");
}

/// Upper bound for the maximal degree gain a rank-q subsheaf can extract
/// from a q-dimensional space of sections of a balanced bundle of slope a:
///   R(n,a,k,q) <= floor((A + sqrt(A^2 + 4q(k-q))) / 2),  A = n - q(a+1).
/// For q = k the radicand is A^2 and the bound collapses to max(A, 0).
inline Int r_upper_bound(const SegreParams& p) {
    validate(p);
    const Int A = p.n - p.q * (p.a + 1);
    return floor_avg_with_sqrt(A, A * A + 4 * p.q * (p.k - p.q));
}

/// Whether a stable coherent system of type (n, n*a, k) exists for small
/// alpha > 0. Equivalent to beta(n, n*a, k) >= 0, cleared of denominators.
inline bool zero_plus_exists(const Int& n, const Int& a, const Int& k) {
    if (!(k > 0 && k < n)) throw std::domain_error("zero_plus_exists: requires 0 < k < n");
    if (a < 0) throw std::domain_error("zero_plus_exists: requires a >= 0");
    return k * a * n >= n * n - k * n + k * k - 1;
}

/// Per-q certificate that the bound R is small enough for the stability
/// criterion: a generic choice is stable as soon as every proper section
/// subspace satisfies delta_q > q*n/k, and delta_q >= n - R always, so
///   q < k:  R < n(k-q)/k      (threshold strict)
///   q = k:  R == 0            (the full space must move maximally)
struct QWitness {
    Int q;
    Int bound;           // R(n,a,k,q)
    Rational threshold;  // n(k-q)/k, which is 0 at q = k
    bool ok;
};

struct StabilityCheck {
    bool ok = true;
    std::vector<QWitness> witnesses;
};

inline StabilityCheck stability_bound_check(const Int& n, const Int& a, const Int& k) {
    if (!(k > 0 && k < n)) throw std::domain_error("stability_bound_check: requires 0 < k < n");
    if (a < 0) throw std::domain_error("stability_bound_check: requires a >= 0");
    StabilityCheck out;
    for (Int q = 1; q <= k; ++q) {
        QWitness w;
        w.q = q;
        w.bound = r_upper_bound(SegreParams{n, a, k, q});
        w.threshold = Rational(n * (k - q), k);
        w.ok = (q < k) ? Rational(w.bound) < w.threshold : w.bound == 0;
        out.ok = out.ok && w.ok;
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite-field sampling oracle for delta_q.
//
// Model a k-dimensional space of sections of a balanced bundle of slope a
// over F_p by a random n x k matrix M of polynomials of degree <= a. For a
// q-dimensional subspace with basis matrix N (k x q), the composite M*N has
// coefficient matrix of shape n x q(a+1), and
//   delta_q = min over subspaces of rank_Fp(coef(M*N)).
// Right multiplication of N by GL(q) multiplies the coefficient matrix by an
// invertible block matrix, so ranging over column-space representatives
// (reduced echelon bases) is enough.
// ---------------------------------------------------------------------------

namespace fp {

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs below 3.3e24
/// with this base set; we only use it for p < 2^31.
inline bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (x == sp) return true;
        if (x % sp == 0) return false;
    }
    std::int64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::int64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t v = pow_mod(base, d, x);
        if (v == 1 || v == x - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            v = v * v % x;
            if (v == x - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

using Matrix = std::vector<std::vector<std::int64_t>>;  // row major, entries in [0, p)

inline int rank(Matrix m, std::int64_t p) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        const std::int64_t inv = pow_mod(m[r][c], p - 2, p);
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::int64_t factor = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] = (m[i][j] - factor * m[r][j] % p + p * p) % p;
        }
        ++r;
    }
    return r;
}

/// Number of q-dimensional subspaces of F_p^k (Gaussian binomial coefficient).
inline Int subspace_count(int k, int q, std::int64_t p) {
    Int num = 1, den = 1;
    for (int i = 0; i < q; ++i) {
        num *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(k - i)) - 1;
        den *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;  // exact: the quotient is an integer
}

/// Visits one basis matrix N (k x q, columns = basis vectors) per
/// q-dimensional subspace of F_p^k: the reduced echelon bases, transposed.
template <typename Fn>
void for_each_subspace_rep(int k, int q, std::int64_t p, Fn&& fn) {
    std::vector<int> pivots(q);
    for (int i = 0; i < q; ++i) pivots[i] = i;
    Matrix n_mat(k, std::vector<std::int64_t>(q, 0));
    while (true) {
        std::vector<bool> is_pivot(k, false);
        for (int c : pivots) is_pivot[c] = true;
        // Free entries of the echelon basis: row i may be nonzero at
        // non-pivot columns right of its pivot.
        std::vector<std::pair<int, int>> free_pos;  // (basis row i, column j)
        for (int i = 0; i < q; ++i)
            for (int j = pivots[i] + 1; j < k; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        std::vector<std::int64_t> digits(free_pos.size(), 0);
        while (true) {
            for (auto& col : n_mat) std::fill(col.begin(), col.end(), 0);
            for (int i = 0; i < q; ++i) n_mat[pivots[i]][i] = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                n_mat[free_pos[t].second][free_pos[t].first] = digits[t];
            fn(n_mat);
            std::size_t t = 0;
            while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
            if (t == digits.size()) break;
        }
        // Next pivot combination in lexicographic order.
        int i = q - 1;
        while (i >= 0 && pivots[i] == k - q + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < q; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace fp

struct OracleParams {
    std::int64_t prime = 101;
    std::uint64_t seed = 0;
    int trials = 1;
};

struct OracleRun {
    bool exhaustive = true;  // false: subspaces sampled, lower-confidence observation
    std::int64_t reps_per_trial = 0;
    std::vector<int> delta;  // one delta_q value per trial
};

/// Exhaustive mode is feasible while prime^(k*q), the raw size of the
/// subspace search, stays within this cap; enumeration then visits one
/// echelon representative per subspace, far fewer than the cap suggests.
inline constexpr std::int64_t kOracleExhaustiveCap = 1'000'000;
/// Representatives drawn per trial in sampled mode.
inline constexpr std::int64_t kOracleSampleReps = 1024;

inline OracleRun sample_delta_q(const SegreParams& sp, const OracleParams& op) {
    validate(sp);
    if (sp.n > 8 || sp.a > 6)
        throw std::domain_error("sample_delta_q: supported region is n <= 8, a <= 6");
    if (op.trials < 1) throw std::domain_error("sample_delta_q: trials must be >= 1");
    if (op.prime < 101 || op.prime > 2147483647 || !fp::is_prime(op.prime))
        throw std::domain_error("sample_delta_q: prime must be a prime in [101, 2^31)");

    const int n = static_cast<int>(sp.n);
    const int a = static_cast<int>(sp.a);
    const int k = static_cast<int>(sp.k);
    const int q = static_cast<int>(sp.q);
    const std::int64_t p = op.prime;
    const int cols = q * (a + 1);

    OracleRun run;
    run.exhaustive =
        boost::multiprecision::pow(Int(p), static_cast<unsigned>(k * q)) <= kOracleExhaustiveCap;

    std::vector<fp::Matrix> reps;
    if (run.exhaustive) {
        fp::for_each_subspace_rep(k, q, p, [&reps](const fp::Matrix& m) { reps.push_back(m); });
        run.reps_per_trial = static_cast<std::int64_t>(reps.size());
    } else {
        run.reps_per_trial = kOracleSampleReps;
    }

    // coef(M*N): rows are the n sheaf coordinates, columns are (subspace
    // column, coefficient degree) pairs.
    std::vector<std::vector<std::vector<std::int64_t>>> m_poly(
        n, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(a + 1)));
    fp::Matrix coef(n, std::vector<std::int64_t>(cols));
    auto rank_of = [&](const fp::Matrix& n_mat) {
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < q; ++c)
                for (int deg = 0; deg <= a; ++deg) {
                    std::int64_t acc = 0;
                    for (int j = 0; j < k; ++j) acc += m_poly[i][j][deg] * n_mat[j][c] % p;
                    coef[i][c * (a + 1) + deg] = acc % p;
                }
        return fp::rank(coef, p);
    };

    for (int trial = 0; trial < op.trials; ++trial) {
        // Deterministic per-trial stream; the modulo draw keeps the output
        // identical across standard libraries (bias ~ p / 2^64, irrelevant).
        std::mt19937_64 rng(
            fp::splitmix64(op.seed ^ (0x9E3779B97F4A7C15ULL * (std::uint64_t(trial) + 1))));
        auto draw = [&rng, p]() { return static_cast<std::int64_t>(rng() % std::uint64_t(p)); };
        for (auto& row : m_poly)
            for (auto& entry : row)
                for (auto& c : entry) c = draw();

        int best = n + 1;
        if (run.exhaustive) {
            for (const fp::Matrix& n_mat : reps) {
                const int r = rank_of(n_mat);
                if (r < best) best = r;
                if (best == 0) break;
            }
        } else {
            fp::Matrix n_mat(k, std::vector<std::int64_t>(q));
            for (std::int64_t s = 0; s < kOracleSampleReps; ++s) {
                do {
                    for (auto& row : n_mat)
                        for (auto& v : row) v = draw();
                } while (fp::rank(n_mat, p) < q);
                const int r = rank_of(n_mat);
                if (r < best) best = r;
                if (best == 0) break;
            }
        }
        run.delta.push_back(best);
    }
    return run;
}

}  // namespace cohp1
