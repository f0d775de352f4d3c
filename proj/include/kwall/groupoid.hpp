#pragma once

/**
 * @file groupoid.hpp
 * @brief Finite action groupoids [X/G] used as exactly checkable models of
 *        quotient stacks.
 *
 * G is a permutation group on X = {0, ..., N-1} given by generators in
 * one-line notation. The full group is materialized by closure, subject to
 * an order bound, so every statement below is checked by exhaustion.
 */

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "kwall/rational.hpp"

namespace kwall {

/// perm[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t default_group_order_bound = 100'000;

inline Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
    return p;
}

/// (p * q)(x) = p(q(x)).
inline Permutation multiply(const Permutation& p, const Permutation& q) {
    Permutation out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
    return out;
}

class FiniteGroupoidModel {
public:
    FiniteGroupoidModel(std::size_t carrier, std::vector<Permutation> generators)
        : carrier_(carrier), generators_(std::move(generators)) {
        for (const auto& g : generators_) {
            if (g.size() != carrier_)
                throw Error(ErrorCode::invalid_argument, "generator length " + std::to_string(g.size()) +
                                                             " != carrier size " + std::to_string(carrier_));
            std::vector<bool> hit(carrier_, false);
            for (auto x : g) {
                if (x >= carrier_ || hit[x]) throw Error(ErrorCode::invalid_argument, "generator is not a bijection");
                hit[x] = true;
            }
        }
    }

    static FiniteGroupoidModel trivial(std::size_t n) { return FiniteGroupoidModel(n, {}); }

    std::size_t carrier() const { return carrier_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    /// All group elements, sorted, identity included.
    std::vector<Permutation> elements(std::size_t bound = default_group_order_bound) const {
        std::set<Permutation> seen{identity_permutation(carrier_)};
        std::queue<Permutation> todo;
        todo.push(identity_permutation(carrier_));
        while (!todo.empty()) {
            const Permutation cur = todo.front();
            todo.pop();
            for (const auto& g : generators_) {
                Permutation next = multiply(g, cur);
                if (seen.insert(next).second) {
                    if (seen.size() > bound)
                        throw Error(ErrorCode::group_too_large, "group order exceeds " + std::to_string(bound));
                    todo.push(std::move(next));
                }
            }
        }
        return {seen.begin(), seen.end()};
    }

    std::size_t order(std::size_t bound = default_group_order_bound) const { return elements(bound).size(); }

private:
    std::size_t carrier_;
    std::vector<Permutation> generators_;
};

struct GroupOrbit {
    std::uint32_t representative = 0;  // smallest point of the orbit
    std::vector<std::uint32_t> points;  // sorted
    std::size_t stabilizer_order = 0;
};

struct OrbitSpace {
    std::size_t group_order = 0;
    std::vector<GroupOrbit> orbits;  // ordered by representative

    std::size_t orbit_index(std::uint32_t x) const {
        for (std::size_t i = 0; i < orbits.size(); ++i)
            if (std::binary_search(orbits[i].points.begin(), orbits[i].points.end(), x)) return i;
        throw Error(ErrorCode::invalid_argument, "point " + std::to_string(x) + " not in carrier");
    }
};

/// Orbits with stabilizer orders. Stabilizers are counted directly over the
/// group elements, and |orbit| * |stab| = |G| is checked for every orbit.
inline OrbitSpace orbit_space(const FiniteGroupoidModel& m, std::size_t bound = default_group_order_bound) {
    const auto group = m.elements(bound);
    OrbitSpace out;
    out.group_order = group.size();
    std::vector<bool> done(m.carrier(), false);
    for (std::uint32_t x = 0; x < m.carrier(); ++x) {
        if (done[x]) continue;
        GroupOrbit orbit;
        orbit.representative = x;
        std::set<std::uint32_t> pts;
        for (const auto& g : group) {
            pts.insert(g[x]);
            if (g[x] == x) ++orbit.stabilizer_order;
        }
        orbit.points.assign(pts.begin(), pts.end());
        for (auto p : orbit.points) done[p] = true;
        if (orbit.points.size() * orbit.stabilizer_order != out.group_order)
            throw Error(ErrorCode::inconsistent, "orbit-stabilizer identity fails at point " + std::to_string(x));
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

/// [X/G] x [Y/H] as [X x Y / G x H]; the pair (x, y) is encoded as x * |Y| + y.
inline FiniteGroupoidModel product_model(const FiniteGroupoidModel& a, const FiniteGroupoidModel& b,
                                         std::size_t bound = default_group_order_bound) {
    const std::size_t order = a.order(bound) * b.order(bound);
    if (order > bound) throw Error(ErrorCode::group_too_large, "product group order " + std::to_string(order));
    const std::size_t na = a.carrier();
    const std::size_t nb = b.carrier();
    std::vector<Permutation> gens;
    for (const auto& g : a.generators()) {
        Permutation p(na * nb);
        for (std::size_t x = 0; x < na; ++x)
            for (std::size_t y = 0; y < nb; ++y) p[x * nb + y] = static_cast<std::uint32_t>(g[x] * nb + y);
        gens.push_back(std::move(p));
    }
    for (const auto& h : b.generators()) {
        Permutation p(na * nb);
        for (std::size_t x = 0; x < na; ++x)
            for (std::size_t y = 0; y < nb; ++y) p[x * nb + y] = static_cast<std::uint32_t>(x * nb + h[y]);
        gens.push_back(std::move(p));
    }
    return FiniteGroupoidModel(na * nb, std::move(gens));
}

struct SymQuotientCount {
    std::size_t base_orbits = 0;          // N
    unsigned power = 0;                   // k
    Integer enumerated;                   // S_k-orbits on k-tuples, counted by brute force
    Integer multiset_formula;             // C(N + k - 1, k)
};

inline constexpr std::size_t default_tuple_bound = 2'000'000;

/// Number of points of [(X/G)^k / S_k], counted by explicit orbit enumeration
/// on k-tuples of G-orbits and compared with the multiset count.
inline SymQuotientCount sym_quotient_model(const FiniteGroupoidModel& m, unsigned k,
                                           std::size_t tuple_bound = default_tuple_bound) {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "power must be at least 1");
    const std::size_t n = orbit_space(m).orbits.size();
    std::size_t tuples = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (n != 0 && tuples > tuple_bound / n)
            throw Error(ErrorCode::bound_exceeded, std::to_string(n) + "^" + std::to_string(k) + " tuples");
        tuples *= n;
    }
    SymQuotientCount out;
    out.base_orbits = n;
    out.power = k;
    out.multiset_formula = binomial(static_cast<unsigned>(n + k - 1), k);
    if (n == 0) {
        out.enumerated = 0;
        return out;
    }
    // Flood-fill k-tuples under adjacent transpositions of coordinates.
    std::vector<bool> seen(tuples, false);
    std::vector<std::size_t> digits(k);
    auto decode = [&](std::size_t code) {
        for (unsigned i = k; i-- > 0;) {
            digits[i] = code % n;
            code /= n;
        }
    };
    auto encode = [&](const std::vector<std::size_t>& d) {
        std::size_t code = 0;
        for (auto x : d) code = code * n + x;
        return code;
    };
    std::size_t orbits = 0;
    for (std::size_t s = 0; s < tuples; ++s) {
        if (seen[s]) continue;
        ++orbits;
        std::queue<std::size_t> todo;
        todo.push(s);
        seen[s] = true;
        while (!todo.empty()) {
            decode(todo.front());
            todo.pop();
            for (unsigned i = 0; i + 1 < k; ++i) {
                std::swap(digits[i], digits[i + 1]);
                const auto code = encode(digits);
                if (!seen[code]) {
                    seen[code] = true;
                    todo.push(code);
                }
                std::swap(digits[i], digits[i + 1]);
            }
        }
    }
    out.enumerated = orbits;
    return out;
}

/// Sum over orbits of 1/|stab|, which equals |X| / |G|.
inline Rational groupoid_cardinality(const FiniteGroupoidModel& m, std::size_t bound = default_group_order_bound) {
    const auto space = orbit_space(m, bound);
    Rational total;
    for (const auto& o : space.orbits) total += Rational(1LL, static_cast<long long>(o.stabilizer_order));
    return total;
}

}  // namespace kwall
