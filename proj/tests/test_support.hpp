#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "kwall/rational.hpp"
#include "kwall/wallsets.hpp"

namespace kwall::testing {

inline Rational Q(long long p, long long q = 1) { return Rational(p, q); }

inline std::vector<Rational> Qs(std::initializer_list<std::pair<long long, long long>> list) {
    std::vector<Rational> out;
    for (const auto& [p, q] : list) out.emplace_back(p, q);
    return out;
}

/// Random strictly increasing wall set with `count` walls in (0,1).
inline WallSet random_walls(std::mt19937_64& rng, std::size_t count) {
    std::uniform_int_distribution<long long> num(1, 96);
    std::vector<Rational> walls;
    while (walls.size() < count) {
        Rational x(num(rng), 97);
        if (std::find(walls.begin(), walls.end(), x) == walls.end()) walls.push_back(x);
    }
    std::sort(walls.begin(), walls.end());
    return WallSet(std::move(walls));
}

}  // namespace kwall::testing

#include "kwall/invariants.hpp"

namespace kwall::testing {

/// Random numerics satisfying the invariants: chi(0) = 1 and n! lead = V.
inline FanoNumerics random_numerics(std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> dim(0, 4);
    std::uniform_int_distribution<long long> num(1, 40), den(1, 6), coef(-9, 9);
    FanoNumerics x;
    x.dimension = dim(rng);
    if (x.dimension == 0) return x;
    x.volume = Rational(num(rng), den(rng));
    std::vector<Rational> c{Rational(1)};
    for (unsigned i = 1; i < x.dimension; ++i) c.emplace_back(coef(rng), den(rng));
    c.push_back(x.volume / Rational(factorial(x.dimension)));
    x.hilbert = Polynomial(std::move(c));
    return x;
}

}  // namespace kwall::testing
