#pragma once

/**
 * @file gitwalls.hpp
 * @brief Hilbert-Mumford wall search for pairs (hypersurface of degree d,
 *        hyperplane) in P^n under PGL(n+1), polarized by slope t.
 *
 * Convention. For a normalized weight vector r (descending, zero sum) the
 * Hilbert-Mumford function of a pair (f, h) is
 *
 *     mu_t(f, h, r) = min_{m in supp f} <m, r> + t * min_{x_i in supp h} r_i,
 *
 * and the pair is t-unstable iff mu_t > 0 for some r in some coordinates.
 * For fixed r and a threshold index j, the largest cubic support that is
 * destabilized together with any h supported on {x_i : r_i >= r_j} is
 *
 *     M+(r, t, j) = { m : <m, r> + t r_j > 0 }.
 *
 * The t-unstable locus is therefore fingerprinted by the inclusion-maximal
 * pairs (M+(r, t, j), j) over a finite set R of weight vectors, and the walls
 * are the slopes where this family changes.
 *
 * R holds the primitive normalized solutions of maximal-rank systems built
 * from monomial-difference hyperplanes <m - m', r> = 0 and ties r_i = r_{i+1},
 * optionally enlarged by all normalized vectors with |r_i| <= B. Enlarging R
 * can only refine the fingerprint, so a superset is always safe.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kwall/rational.hpp"
#include "kwall/wallsets.hpp"

namespace kwall::git {

struct Monomial {
    std::vector<unsigned> exponents;

    unsigned degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += "x" + std::to_string(i);
            if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
        }
        return out.empty() ? "1" : out;
    }
};

/// Normalized one-parameter subgroup: r_0 >= ... >= r_n, sum zero, nonzero, primitive.
class WeightVector {
public:
    explicit WeightVector(std::vector<Integer> r) : r_(std::move(r)) {
        if (r_.empty()) throw Error(ErrorCode::invalid_argument, "empty weight vector");
        Integer sum = 0;
        Integer g = 0;
        for (std::size_t i = 0; i < r_.size(); ++i) {
            sum += r_[i];
            g = boost::multiprecision::gcd(g, r_[i]);
            if (i > 0 && r_[i - 1] < r_[i]) throw Error(ErrorCode::invalid_argument, "weights not descending: " + str());
        }
        if (sum != 0) throw Error(ErrorCode::invalid_argument, "weights do not sum to zero: " + str());
        if (g == 0) throw Error(ErrorCode::invalid_argument, "zero weight vector");
        if (g != 1 && g != -1) throw Error(ErrorCode::invalid_argument, "weights not primitive: " + str());
    }

    WeightVector(std::initializer_list<long long> r) : WeightVector(std::vector<Integer>(r.begin(), r.end())) {}

    /// Scales `v` to a primitive vector and picks the sign that makes it
    /// descending; nullopt when neither sign works or v is not a valid direction.
    static std::optional<WeightVector> normalized(std::vector<Integer> v) {
        Integer g = 0;
        Integer sum = 0;
        for (const auto& x : v) {
            g = boost::multiprecision::gcd(g, x);
            sum += x;
        }
        if (g == 0 || sum != 0) return std::nullopt;
        if (g < 0) g = -g;
        for (auto& x : v) x /= g;
        if (std::is_sorted(v.begin(), v.end(), std::greater<>())) return WeightVector(std::move(v));
        for (auto& x : v) x = -x;
        if (std::is_sorted(v.begin(), v.end(), std::greater<>())) return WeightVector(std::move(v));
        return std::nullopt;
    }

    const std::vector<Integer>& values() const { return r_; }
    std::size_t size() const { return r_.size(); }
    const Integer& operator[](std::size_t i) const { return r_[i]; }

    /// Largest index sharing the weight of position j.
    std::size_t tie_end(std::size_t j) const {
        while (j + 1 < r_.size() && r_[j + 1] == r_[j]) ++j;
        return j;
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.r_ < b.r_; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < r_.size(); ++i) out += (i ? "," : "") + r_[i].str();
        return out + ")";
    }

private:
    std::vector<Integer> r_;
};

inline Integer monomial_weight(const Monomial& m, const WeightVector& r) {
    if (m.exponents.size() != r.size())
        throw Error(ErrorCode::dimension_mismatch, "monomial in " + std::to_string(m.exponents.size()) +
                                                       " variables, weights in " + std::to_string(r.size()));
    Integer w = 0;
    for (std::size_t i = 0; i < r.size(); ++i) w += r[i] * m.exponents[i];
    return w;
}

/// All degree-d monomials in x_0..x_n, lexicographically descending (x_0^d first).
inline std::vector<Monomial> monomials(unsigned n, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(n + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == n) {
            e[i] = left;
            out.push_back({e});
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

struct Config {
    unsigned max_n = 4;
    unsigned max_degree = 4;
    std::size_t max_systems = 5'000'000;
    /// When positive, R also receives every normalized vector with |r_i| <= bound.
    unsigned exhaustive_bound = 0;
    /// Permit targets other than cubic surfaces (no reference table exists for them).
    bool exploratory = false;
    unsigned jobs = 1;
};

struct SupportPair {
    std::vector<Monomial> support;  // sorted
    std::size_t threshold = 0;      // h supported on x_0..x_threshold

    friend bool operator==(const SupportPair&, const SupportPair&) = default;
};

struct Witness {
    WeightVector r;
    Monomial m;
    std::size_t j = 0;
};

struct WallReport {
    unsigned n = 0;
    unsigned d = 0;
    bool exploratory = false;
    std::size_t weight_count = 0;
    WallSet walls;
    std::vector<Rational> candidates;
    std::map<Rational, std::vector<Witness>> witnesses;  // keyed by wall
};

namespace detail {

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Kernel generator of an n x (n+1) integer matrix via signed maximal
/// minors; the zero vector when the rank is below n.
inline std::vector<Integer> kernel_vector(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t cols = rows.empty() ? 1 : rows.front().size();
    std::vector<Integer> v(cols);
    for (std::size_t skip = 0; skip < cols; ++skip) {
        std::vector<std::vector<Integer>> minor;
        for (const auto& row : rows) {
            std::vector<Integer> r;
            for (std::size_t c = 0; c < cols; ++c)
                if (c != skip) r.push_back(row[c]);
            minor.push_back(std::move(r));
        }
        Integer det = determinant(std::move(minor));
        v[skip] = skip % 2 == 0 ? det : Integer(-det);
    }
    return v;
}

inline std::vector<Integer> primitive_up_to_sign(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return v;
    if (g < 0) g = -g;
    for (auto& x : v) x /= g;
    const auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0)
        for (auto& x : v) x = -x;
    return v;
}

inline void check_supported(unsigned n, unsigned d, const Config& cfg) {
    if (n < 1 || d < 1 || n > cfg.max_n || d > cfg.max_degree)
        throw Error(ErrorCode::unsupported, "(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) +
                                                ") outside the configured bounds n <= " + std::to_string(cfg.max_n) +
                                                ", d <= " + std::to_string(cfg.max_degree));
}

inline void exhaustive_weights(unsigned n, unsigned bound, std::set<WeightVector>& out) {
    const long long b = bound;
    std::vector<long long> r(n + 1);
    auto rec = [&](auto&& self, std::size_t i, long long hi, long long sum) -> void {
        if (i == n + 1) {
            if (sum != 0) return;
            std::vector<Integer> v(r.begin(), r.end());
            if (auto w = WeightVector::normalized(std::move(v)); w && w->values() == std::vector<Integer>(r.begin(), r.end()))
                out.insert(*w);
            return;
        }
        for (long long x = hi; x >= -b; --x) {
            r[i] = x;
            self(self, i + 1, x, sum + x);
        }
    };
    rec(rec, 0, b, 0);
}

}  // namespace detail

/// Finite candidate set R of normalized weight vectors for degree-d
/// hypersurfaces in P^n.
inline std::vector<WeightVector> candidate_weights(unsigned n, unsigned d, const Config& cfg = {}) {
    detail::check_supported(n, d, cfg);
    const auto mons = monomials(n, d);
    const std::size_t vars = n + 1;

    std::set<std::vector<Integer>> equations;
    for (std::size_t a = 0; a < mons.size(); ++a)
        for (std::size_t b = a + 1; b < mons.size(); ++b) {
            std::vector<Integer> diff(vars);
            for (std::size_t i = 0; i < vars; ++i)
                diff[i] = Integer(mons[a].exponents[i]) - Integer(mons[b].exponents[i]);
            equations.insert(detail::primitive_up_to_sign(std::move(diff)));
        }
    for (std::size_t i = 0; i + 1 < vars; ++i) {
        std::vector<Integer> tie(vars, 0);
        tie[i] = 1;
        tie[i + 1] = -1;
        equations.insert(std::move(tie));
    }
    const std::vector<std::vector<Integer>> eqs(equations.begin(), equations.end());

    // n - 1 equations plus the zero-sum row determine a ray in Q^{n+1}.
    const std::size_t pick = n - 1;
    const Integer systems = binomial(static_cast<unsigned>(eqs.size()), static_cast<unsigned>(pick));
    if (systems > cfg.max_systems)
        throw Error(ErrorCode::unsupported, systems.str() + " candidate systems exceed the configured limit");

    std::set<WeightVector> found;
    std::vector<std::size_t> idx(pick);
    std::iota(idx.begin(), idx.end(), 0);
    const std::vector<Integer> ones(vars, 1);
    while (true) {
        std::vector<std::vector<Integer>> rows{ones};
        for (auto i : idx) rows.push_back(eqs[i]);
        if (auto w = WeightVector::normalized(detail::kernel_vector(rows))) found.insert(*w);
        // Next combination.
        std::size_t i = pick;
        while (i > 0 && idx[i - 1] == eqs.size() - pick + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t k = i; k < pick; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (cfg.exhaustive_bound > 0) detail::exhaustive_weights(n, cfg.exhaustive_bound, found);
    return {found.begin(), found.end()};
}

/// M+(r, t, j): degree-d monomials m with <m, r> + t r_j > 0, sorted.
inline std::vector<Monomial> max_destabilized_support(unsigned d, const WeightVector& r, const Rational& t,
                                                      std::size_t j) {
    if (t < Rational(0) || t > Rational(1)) throw Error(ErrorCode::out_of_range, "slope " + t.str() + " outside [0,1]");
    if (j >= r.size()) throw Error(ErrorCode::out_of_range, "threshold index " + std::to_string(j));
    std::vector<Monomial> out;
    for (auto& m : monomials(static_cast<unsigned>(r.size() - 1), d)) {
        // <m,r> + (p/q) r_j > 0  <=>  q <m,r> + p r_j > 0
        if (t.denominator() * monomial_weight(m, r) + t.numerator() * r[j] > 0) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Precomputed search state for one (n, d).
class WallSearch {
public:
    WallSearch(unsigned n, unsigned d, const Config& cfg = {})
        : n_(n), d_(d), cfg_(cfg), monomials_(monomials(n, d)), weights_(candidate_weights(n, d, cfg)) {
        table_.reserve(weights_.size());
        for (const auto& r : weights_) {
            std::vector<Integer> row;
            row.reserve(monomials_.size());
            for (const auto& m : monomials_) row.push_back(monomial_weight(m, r));
            table_.push_back(std::move(row));
        }
    }

    unsigned n() const { return n_; }
    unsigned d() const { return d_; }
    const std::vector<Monomial>& monomial_basis() const { return monomials_; }
    const std::vector<WeightVector>& weights() const { return weights_; }

    /// { -<m,r>/r_j } intersected with (0, 1), sorted, with the triples that produce each value.
    std::map<Rational, std::vector<Witness>> candidate_slopes() const {
        std::map<Rational, std::vector<Witness>> out;
        for (std::size_t ri = 0; ri < weights_.size(); ++ri) {
            const auto& r = weights_[ri];
            for (std::size_t mi = 0; mi < monomials_.size(); ++mi)
                for (std::size_t j = 0; j <= n_; ++j) {
                    if (r[j] == 0) continue;
                    Rational t(Integer(-table_[ri][mi]), r[j]);
                    if (t > Rational(0) && t < Rational(1)) out[t].push_back({r, monomials_[mi], j});
                }
        }
        return out;
    }

    /// Compact form of a support family: (monomial bitset, threshold), sorted.
    using Fingerprint = std::vector<std::pair<boost::dynamic_bitset<>, std::size_t>>;

    Fingerprint fingerprint(const Rational& t) const {
        std::set<std::pair<boost::dynamic_bitset<>, std::size_t>> pairs;
        for (std::size_t ri = 0; ri < weights_.size(); ++ri) {
            const auto& r = weights_[ri];
            for (std::size_t j = 0; j <= n_; ++j) {
                boost::dynamic_bitset<> bits(monomials_.size());
                const Integer shift = t.numerator() * r[j];
                for (std::size_t mi = 0; mi < monomials_.size(); ++mi)
                    if (t.denominator() * table_[ri][mi] + shift > 0) bits.set(mi);
                if (bits.any()) pairs.emplace(std::move(bits), r.tie_end(j));
            }
        }
        // Drop pairs dominated by another (superset of monomials, threshold at
        // least as large). Dominators sort first under (size desc, threshold desc).
        std::vector<std::pair<boost::dynamic_bitset<>, std::size_t>> order(pairs.begin(), pairs.end());
        std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (a.first.count() != b.first.count()) return a.first.count() > b.first.count();
            return a.second > b.second;
        });
        Fingerprint kept;
        for (auto& p : order) {
            const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const auto& q) {
                return q.second >= p.second && p.first.is_subset_of(q.first);
            });
            if (!dominated) kept.push_back(std::move(p));
        }
        std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second < b.second;
            return a.first < b.first;
        });
        return kept;
    }

    std::vector<SupportPair> support_families(const Rational& t) const {
        std::vector<SupportPair> out;
        for (const auto& [bits, j] : fingerprint(t)) {
            SupportPair sp;
            sp.threshold = j;
            for (std::size_t mi = 0; mi < monomials_.size(); ++mi)
                if (bits.test(mi)) sp.support.push_back(monomials_[mi]);
            std::sort(sp.support.begin(), sp.support.end());
            out.push_back(std::move(sp));
        }
        std::sort(out.begin(), out.end(), [](const SupportPair& a, const SupportPair& b) {
            if (a.threshold != b.threshold) return a.threshold < b.threshold;
            return a.support < b.support;
        });
        return out;
    }

    WallReport compute() const {
        WallReport rep;
        rep.n = n_;
        rep.d = d_;
        rep.exploratory = !(n_ == 3 && d_ == 3);
        rep.weight_count = weights_.size();
        auto slopes = candidate_slopes();
        for (const auto& [t, w] : slopes) rep.candidates.push_back(t);

        std::vector<Rational> grid{Rational(0)};
        grid.insert(grid.end(), rep.candidates.begin(), rep.candidates.end());
        grid.push_back(Rational(1));
        Rational gap = 1;
        for (std::size_t i = 1; i < grid.size(); ++i) gap = std::min(gap, grid[i] - grid[i - 1]);
        const Rational eps = gap / Rational(2);

        const std::size_t count = rep.candidates.size();
        std::vector<char> is_wall(count, 0);
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const auto& t = rep.candidates[i];
                is_wall[i] = fingerprint(t - eps) != fingerprint(t + eps);
            }
        };
        const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(cfg_.jobs, count));
        if (jobs == 1) {
            work(0, count);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (count + jobs - 1) / jobs;
            for (std::size_t b = 0; b < count; b += chunk) pool.emplace_back(work, b, std::min(count, b + chunk));
            for (auto& th : pool) th.join();
        }

        std::vector<Rational> walls;
        for (std::size_t i = 0; i < count; ++i)
            if (is_wall[i]) {
                walls.push_back(rep.candidates[i]);
                rep.witnesses[rep.candidates[i]] = std::move(slopes[rep.candidates[i]]);
            }
        rep.walls = WallSet(std::move(walls));
        return rep;
    }

private:
    unsigned n_;
    unsigned d_;
    Config cfg_;
    std::vector<Monomial> monomials_;
    std::vector<WeightVector> weights_;
    std::vector<std::vector<Integer>> table_;
};

inline std::vector<Rational> candidate_twalls(unsigned n, unsigned d, const Config& cfg = {}) {
    std::vector<Rational> out;
    for (const auto& [t, w] : WallSearch(n, d, cfg).candidate_slopes()) out.push_back(t);
    return out;
}

inline std::vector<SupportPair> semistable_support_families(unsigned n, unsigned d, const Rational& t,
                                                            const Config& cfg = {}) {
    if (t <= Rational(0) || t >= Rational(1)) throw Error(ErrorCode::out_of_range, "slope " + t.str() + " outside (0,1)");
    return WallSearch(n, d, cfg).support_families(t);
}

/// Walls of the VGIT of (degree-d hypersurface, hyperplane) pairs in P^n.
/// Only cubic surfaces are a supported target unless cfg.exploratory is set.
inline WallReport compute_walls(unsigned n = 3, unsigned d = 3, const Config& cfg = {}) {
    if (!(n == 3 && d == 3) && !cfg.exploratory)
        throw Error(ErrorCode::unsupported, "(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) +
                                                ") is exploratory only; cubic surfaces (3, 3) are the supported target");
    return WallSearch(n, d, cfg).compute();
}

}  // namespace kwall::git
