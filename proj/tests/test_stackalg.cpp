#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kwall/serialize.hpp"
#include "kwall/stackalg.hpp"

using kwall::Error;
using kwall::ErrorCode;
using kwall::FactorMultiset;
using kwall::IsoRelation;
using kwall::ModuliDescriptor;
using kwall::ProductMapKind;

namespace kwall {
inline void PrintTo(const ModuliDescriptor& d, std::ostream* os) { *os << d.str(); }
}  // namespace kwall

namespace {

const kwall::Registry& registry() {
    static const kwall::Registry reg = kwall::load_registry();
    return reg;
}

bool registry_point(const std::string& id) { return registry().is_point(id); }

ModuliDescriptor A(const std::string& id) { return ModuliDescriptor::atom(id); }

}  // namespace

TEST(Canonicalize, Examples) {
    EXPECT_EQ(kwall::canonicalize({{"dp3", 1}, {"dp4", 1}}), ModuliDescriptor::product({A("dp3"), A("dp4")}));
    EXPECT_EQ(kwall::canonicalize({{"dp3", 2}}), ModuliDescriptor::sym(A("dp3"), 2));
    EXPECT_EQ(kwall::canonicalize({{"p1", 1}, {"dp3", 1}}, registry_point), A("dp3"));
    EXPECT_EQ(kwall::canonicalize({{"p1", 3}}, registry_point), ModuliDescriptor::point());
    EXPECT_EQ(kwall::canonicalize(FactorMultiset{}), ModuliDescriptor::point());
}

TEST(Canonicalize, TextForms) {
    EXPECT_EQ(kwall::canonicalize({{"dp3", 1}, {"dp4", 1}}).str(), "M(dp3) x M(dp4)");
    EXPECT_EQ(kwall::canonicalize({{"dp3", 2}}).str(), "[M(dp3)^2 / S_2]");
    EXPECT_EQ(kwall::canonicalize({{"dp4", 2}, {"dp3", 1}}).str(), "M(dp3) x [M(dp4)^2 / S_2]");
    EXPECT_EQ(ModuliDescriptor::point().str(), "pt");
}

TEST(Canonicalize, MergesRepeatedEntries) {
    EXPECT_EQ(kwall::canonicalize(FactorMultiset::from_list({"dp3", "dp4", "dp3"})),
              ModuliDescriptor::product({A("dp4"), ModuliDescriptor::sym(A("dp3"), 2)}));
    EXPECT_EQ(kwall::canonicalize({{"dp3", 1}, {"dp3", 2}}), ModuliDescriptor::sym(A("dp3"), 3));
}

TEST(Canonicalize, IdempotentAndPermutationInvariant) {
    std::mt19937_64 rng(8);
    const std::vector<std::string> ids{"dp1", "dp2", "dp3", "dp4", "p1", "q"};
    std::uniform_int_distribution<std::size_t> len(0, 7), pick(0, ids.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::string> list;
        for (std::size_t n = len(rng); n > 0; --n) list.push_back(ids[pick(rng)]);
        IsoRelation iso;
        if (trial % 3 == 0) iso.declare("q", "dp1");
        auto f = FactorMultiset::from_list(list);
        f.iso = iso;
        const auto d = kwall::canonicalize(f, registry_point);
        EXPECT_EQ(kwall::normalize(d, iso, registry_point), d) << d.str();
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(list.begin(), list.end(), rng);
            auto g = FactorMultiset::from_list(list);
            g.iso = iso;
            EXPECT_EQ(kwall::canonicalize(g, registry_point), d);
        }
    }
}

TEST(Canonicalize, NestedTreesFlatten) {
    const auto nested = ModuliDescriptor::product(
        {A("dp4"), ModuliDescriptor::product({A("dp3"), A("dp4")}), ModuliDescriptor::sym(A("dp3"), 2)});
    EXPECT_EQ(kwall::normalize(nested),
              ModuliDescriptor::product({ModuliDescriptor::sym(A("dp4"), 2), ModuliDescriptor::sym(A("dp3"), 3)}));
}

TEST(Canonicalize, IsoRelationMergesClasses) {
    IsoRelation iso;
    iso.declare("dp4", "x4");
    FactorMultiset f{{"dp4", 1}, {"x4", 1}};
    f.iso = iso;
    EXPECT_EQ(kwall::canonicalize(f), ModuliDescriptor::sym(A("dp4"), 2));
    EXPECT_EQ(iso.representative("x4"), "dp4");
    EXPECT_TRUE(iso.isomorphic("x4", "dp4"));
    EXPECT_FALSE(iso.isomorphic("x4", "dp3"));
}

TEST(Canonicalize, ZeroMultiplicityRejected) {
    EXPECT_THROW(kwall::canonicalize({{"dp3", 0}}), Error);
    EXPECT_THROW(ModuliDescriptor::sym(A("dp3"), 1), Error);
    EXPECT_THROW(ModuliDescriptor::product({A("dp3")}), Error);
}

TEST(ProductMap, Classification) {
    EXPECT_EQ(kwall::classify_product_map("dp3", "dp4"), ProductMapKind::isomorphism);
    EXPECT_EQ(kwall::classify_product_map("dp3", "dp3"), ProductMapKind::s2_gerbe);
    EXPECT_EQ(kwall::classify_product_map("p1", "p1"), ProductMapKind::s2_gerbe);
    EXPECT_EQ(kwall::classify_product_map({{"dp3", 2}}), ProductMapKind::s2_gerbe);
    EXPECT_STREQ(kwall::to_string(ProductMapKind::isomorphism), "Isomorphism");
    EXPECT_STREQ(kwall::to_string(ProductMapKind::s2_gerbe), "S2Gerbe");
    IsoRelation iso;
    iso.declare("dp4", "x4");
    EXPECT_EQ(kwall::classify_product_map("x4", "dp4", iso), ProductMapKind::s2_gerbe);
}

TEST(ProductMap, Symmetric) {
    const std::vector<std::string> ids{"dp1", "dp2", "dp3", "dp4", "p1"};
    for (const auto& a : ids)
        for (const auto& b : ids) EXPECT_EQ(kwall::classify_product_map(a, b), kwall::classify_product_map(b, a));
}

TEST(ProductMap, ArityError) {
    for (const FactorMultiset& f : {FactorMultiset{{"dp3", 1}}, FactorMultiset{{"dp3", 3}},
                                    FactorMultiset{{"dp3", 1}, {"dp4", 1}, {"p1", 1}}}) {
        try {
            kwall::classify_product_map(f);
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::arity);
        }
    }
}

TEST(Descriptor, SubstituteNamedUsesGoodModuli) {
    const auto d = kwall::canonicalize({{"dp3", 1}, {"dp4", 1}});
    const auto named = kwall::substitute_named(d, [](const std::string& id) { return registry()[id].good_moduli; });
    EXPECT_EQ(named.str(), "P(1,2,3,4,5) x P(1,2,3)");
    const auto untouched = kwall::substitute_named(A("mystery"), [](const std::string&) { return std::nullopt; });
    EXPECT_EQ(untouched, A("mystery"));
}

TEST(Descriptor, JsonRoundTrip) {
    const std::vector<ModuliDescriptor> samples{
        ModuliDescriptor::point(),
        A("dp3"),
        ModuliDescriptor::named("P(1,2,3)"),
        ModuliDescriptor::sym(A("dp3"), 2),
        ModuliDescriptor::product({A("dp3"), ModuliDescriptor::sym(A("dp4"), 3)}),
    };
    for (const auto& d : samples) {
        const auto j = kwall::to_json(d);
        EXPECT_EQ(kwall::descriptor_from_json(kwall::json::parse(j.dump())), d) << j.dump();
    }
    EXPECT_EQ(kwall::to_json(ModuliDescriptor::sym(A("dp3"), 2)).dump(),
              R"({"kind":"sym","m":2,"children":[{"kind":"atom","id":"dp3"}]})");
    EXPECT_THROW(kwall::descriptor_from_json(kwall::json::parse(R"({"kind":"torus"})")), Error);
}
