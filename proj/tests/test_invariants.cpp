#include <gtest/gtest.h>

#include <random>

#include "kwall/invariants.hpp"
#include "kwall/wallsets.hpp"
#include "test_support.hpp"

using kwall::FanoNumerics;
using kwall::Polynomial;
using kwall::Rational;
using kwall::testing::Q;

namespace {

const kwall::Registry& registry() {
    static const kwall::Registry reg = kwall::load_registry();
    return reg;
}

FanoNumerics of(const std::string& id) { return FanoNumerics::of(registry()[id]); }

// Top self-intersection of p1*A + p2*B on X1 x X2: expand the n-th power and
// keep only A^{n1} B^{n2}, the single monomial that does not vanish.
Rational intersection_oracle(const FanoNumerics& a, const FanoNumerics& b) {
    const unsigned n = a.dimension + b.dimension;
    Rational total;
    for (unsigned k = 0; k <= n; ++k) {
        const bool survives = k == a.dimension && n - k == b.dimension;
        if (survives) total += Rational(kwall::binomial(n, k)) * a.volume * b.volume;
    }
    return total;
}

// n! lead(chi_1 chi_2) computed from the factor leads directly.
Rational lead_oracle(const FanoNumerics& a, const FanoNumerics& b) {
    const unsigned n = a.dimension + b.dimension;
    return Rational(kwall::factorial(n)) * (a.volume / Rational(kwall::factorial(a.dimension))) *
           (b.volume / Rational(kwall::factorial(b.dimension)));
}

}  // namespace

TEST(ProductVolume, Examples) {
    EXPECT_EQ(kwall::product_volume(of("p1"), of("dp3")), (kwall::DimensionVolume{3, Q(18)}));
    EXPECT_EQ(kwall::product_volume(of("p1"), of("p1")), (kwall::DimensionVolume{2, Q(8)}));
    EXPECT_EQ(kwall::product_volume(of("dp4"), FanoNumerics::point()), (kwall::DimensionVolume{2, Q(4)}));
    EXPECT_EQ(kwall::product_volume(of("dp3"), of("dp4")), (kwall::DimensionVolume{4, Q(72)}));
}

TEST(ProductVolume, MatchesIntersectionOracle) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const auto a = kwall::testing::random_numerics(rng);
        const auto b = kwall::testing::random_numerics(rng);
        EXPECT_EQ(kwall::product_volume(a, b).volume, intersection_oracle(a, b));
        EXPECT_EQ(kwall::product_volume(a, b), kwall::product_volume(b, a));
    }
}

TEST(ProductVolume, MultinomialRegardlessOfAssociation) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto a = kwall::testing::random_numerics(rng);
        const auto b = kwall::testing::random_numerics(rng);
        const auto c = kwall::testing::random_numerics(rng);
        const auto left = kwall::product_numerics(kwall::product_numerics(a, b), c);
        const auto right = kwall::product_numerics(a, kwall::product_numerics(b, c));
        const unsigned n = a.dimension + b.dimension + c.dimension;
        const Rational multinomial = Rational(kwall::factorial(n)) /
                                     Rational(kwall::factorial(a.dimension) * kwall::factorial(b.dimension) *
                                              kwall::factorial(c.dimension));
        EXPECT_EQ(left.volume, multinomial * a.volume * b.volume * c.volume);
        EXPECT_EQ(right.volume, left.volume);
        EXPECT_EQ(left.dimension, n);
        EXPECT_EQ(left.hilbert, right.hilbert);
    }
}

TEST(ProductHilbert, Examples) {
    EXPECT_EQ(kwall::product_hilbert(of("p1"), of("p1")), Polynomial({Q(1), Q(4), Q(4)}));
    EXPECT_EQ(kwall::product_hilbert(of("p1"), of("p1")).leading(), Q(8) / Q(2));
    EXPECT_EQ(kwall::product_hilbert(of("dp3"), FanoNumerics::point()), of("dp3").hilbert);
    const auto p1_dp3 = kwall::product_hilbert(of("p1"), of("dp3"));
    EXPECT_EQ(p1_dp3, Polynomial({Q(1), Q(7, 2), Q(9, 2), Q(3)}));
    EXPECT_EQ(p1_dp3.leading(), Q(18) / Q(6));
}

TEST(ProductHilbert, PointwiseProduct) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const auto a = kwall::testing::random_numerics(rng);
        const auto b = kwall::testing::random_numerics(rng);
        const auto p = kwall::product_hilbert(a, b);
        for (long long m = -3; m <= 5; ++m) EXPECT_EQ(p(Q(m)), a.hilbert(Q(m)) * b.hilbert(Q(m)));
    }
}

TEST(ConsistencyCheck, Examples) {
    EXPECT_TRUE(kwall::consistency_check(of("dp3")).empty());
    EXPECT_TRUE(kwall::consistency_check(of("p1")).empty());
    const FanoNumerics bad{1, Q(2), Polynomial({Q(2), Q(2)})};
    const auto problems = kwall::consistency_check(bad);
    ASSERT_EQ(problems.size(), 1u);
    EXPECT_NE(problems[0].find("chi(0)"), std::string::npos);
    const FanoNumerics wrong_volume{2, Q(5), Polynomial({Q(1), Q(3, 2), Q(3, 2)})};
    EXPECT_EQ(kwall::consistency_check(wrong_volume).size(), 1u);
}

TEST(ConsistencyCheck, ProductsOfRegistryAndRandomInputs) {
    for (const auto& [ida, a] : registry())
        for (const auto& [idb, b] : registry()) {
            const auto prod = kwall::product_numerics(FanoNumerics::of(a), FanoNumerics::of(b));
            EXPECT_TRUE(kwall::consistency_check(prod).empty()) << ida << " x " << idb;
            EXPECT_EQ(Rational(kwall::factorial(prod.dimension)) * prod.hilbert.leading(),
                      lead_oracle(FanoNumerics::of(a), FanoNumerics::of(b)));
        }
    std::mt19937_64 rng(100);
    for (int i = 0; i < 100; ++i) {
        const auto a = kwall::testing::random_numerics(rng);
        const auto b = kwall::testing::random_numerics(rng);
        ASSERT_TRUE(kwall::consistency_check(a).empty());
        const auto prod = kwall::product_numerics(a, b);
        EXPECT_TRUE(kwall::consistency_check(prod).empty());
        EXPECT_EQ(Rational(kwall::factorial(prod.dimension)) * prod.hilbert.coefficient(prod.dimension),
                  Rational(kwall::binomial(prod.dimension, a.dimension)) * a.volume * b.volume);
    }
}
