#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kwall/groupoid.hpp"

namespace kwall::testing {

/// Random model on at most `max_carrier` points. Generators either permute
/// inside the blocks of a random partition or are arbitrary permutations.
inline FiniteGroupoidModel random_model(std::mt19937_64& rng, std::size_t max_carrier = 8) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_carrier);
    std::uniform_int_distribution<int> gen_count(0, 3);
    const std::size_t n = size_dist(rng);
    const bool blocky = std::bernoulli_distribution(0.7)(rng);
    std::vector<std::size_t> block(n);
    std::uniform_int_distribution<std::size_t> block_dist(0, n / 2);
    for (auto& b : block) b = block_dist(rng);
    std::vector<Permutation> gens;
    for (int g = gen_count(rng); g > 0; --g) {
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0);
        if (blocky) {
            std::map<std::size_t, std::vector<std::uint32_t>> members;
            for (std::uint32_t x = 0; x < n; ++x) members[block[x]].push_back(x);
            for (auto& [b, pts] : members) {
                auto image = pts;
                std::shuffle(image.begin(), image.end(), rng);
                for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = image[i];
            }
        } else {
            std::shuffle(p.begin(), p.end(), rng);
        }
        gens.push_back(std::move(p));
    }
    return FiniteGroupoidModel(n, std::move(gens));
}

/// Orbits by union-find over generator edges, independent of group closure.
inline std::vector<std::set<std::uint32_t>> union_find_orbits(const FiniteGroupoidModel& m) {
    std::vector<std::uint32_t> parent(m.carrier());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& g : m.generators())
        for (std::uint32_t x = 0; x < m.carrier(); ++x) {
            const auto a = find(x), b = find(g[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::uint32_t, std::set<std::uint32_t>> by_root;
    for (std::uint32_t x = 0; x < m.carrier(); ++x) by_root[find(x)].insert(x);
    std::vector<std::set<std::uint32_t>> out;
    for (auto& [r, pts] : by_root) out.push_back(std::move(pts));
    return out;
}

/// Checks that orbits of a x b biject with pairs of orbits (matching
/// representatives and point sets) and that stabilizer orders multiply.
/// Returns a description of the first failure.
inline std::optional<std::string> check_product_pair(const FiniteGroupoidModel& a, const FiniteGroupoidModel& b) {
    const auto oa = orbit_space(a);
    const auto ob = orbit_space(b);
    const auto prod = product_model(a, b);
    const auto op = orbit_space(prod);
    const std::size_t nb = b.carrier();
    if (op.group_order != oa.group_order * ob.group_order) return "group orders do not multiply";
    if (op.orbits.size() != oa.orbits.size() * ob.orbits.size())
        return "orbit count " + std::to_string(op.orbits.size()) + " != " + std::to_string(oa.orbits.size()) + " x " +
               std::to_string(ob.orbits.size());
    std::set<std::size_t> hit;
    for (const auto& x : oa.orbits)
        for (const auto& y : ob.orbits) {
            const auto code = static_cast<std::uint32_t>(x.representative * nb + y.representative);
            const std::size_t idx = op.orbit_index(code);
            if (!hit.insert(idx).second) return "two orbit pairs land in one product orbit";
            const auto& o = op.orbits[idx];
            std::vector<std::uint32_t> expected;
            for (auto p : x.points)
                for (auto q : y.points) expected.push_back(static_cast<std::uint32_t>(p * nb + q));
            std::sort(expected.begin(), expected.end());
            if (o.points != expected) return "product orbit is not the product of orbits";
            if (o.representative != code) return "product representative is not the pair of representatives";
            if (o.stabilizer_order != x.stabilizer_order * y.stabilizer_order) return "stabilizer orders do not multiply";
        }
    return std::nullopt;
}

}  // namespace kwall::testing
