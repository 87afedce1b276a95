#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "ea/algebras.hpp"
#include "ea/error.hpp"

using namespace ea;

namespace {

std::unique_ptr<Arrangement> build(const std::string& spec) {
    return std::make_unique<Arrangement>(std::make_shared<ReflectionGroup>(GroupDescriptor::parse(spec)));
}

GroupAlgElt random_group_elt(const ReflectionGroup& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
    std::uniform_int_distribution<long> c(-3, 3);
    GroupAlgElt a;
    for (int i = 0; i < 5; ++i) a.add(pick(rng), Rational(c(rng), 2));
    return a;
}

FaceAlgElt random_face_elt(const Arrangement& arr, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, arr.num_faces() - 1);
    std::uniform_int_distribution<long> c(-3, 3);
    FaceAlgElt a;
    for (int i = 0; i < 6; ++i) a.add(pick(rng), Rational(c(rng)));
    return a;
}

// Coefficients depend only on the descent set.
bool constant_on_descent_classes(const ReflectionGroup& g, const GroupAlgElt& a) {
    std::map<std::uint32_t, Rational> seen;
    for (std::uint32_t w = 0; w < g.order(); ++w) {
        auto [it, fresh] = seen.emplace(g.descent_mask(w), a.coeff(w));
        if (!fresh && it->second != a.coeff(w)) return false;
    }
    return true;
}

const std::vector<std::string> kGroups{"A2", "A3", "B2", "B3", "D4", "I2(5)", "H3"};

}  // namespace

TEST(Combination, ZeroCoefficientsAreDropped) {
    GroupAlgElt a = GroupAlgElt::basis(3, Rational(2));
    a.add(3, Rational(-2));
    EXPECT_TRUE(a.is_zero());
    a.set(1, Rational(5));
    a.set(2, Rational(0));
    EXPECT_EQ(a.size(), 1u);
    EXPECT_EQ(a.mass(), Rational(5));
    EXPECT_EQ((a - a).size(), 0u);
    EXPECT_TRUE((a * Rational(0)).is_zero());
}

TEST(GroupAlgebra, RingLaws) {
    std::mt19937_64 rng(3);
    for (const auto& s : {"A3", "B3", "H3"}) {
        ReflectionGroup g(GroupDescriptor::parse(s));
        GroupAlgElt one = group_one(g);
        for (int i = 0; i < 10; ++i) {
            GroupAlgElt a = random_group_elt(g, rng), b = random_group_elt(g, rng), c = random_group_elt(g, rng);
            EXPECT_EQ(gw_mul(g, gw_mul(g, a, b), c), gw_mul(g, a, gw_mul(g, b, c)));
            EXPECT_EQ(gw_mul(g, a, b + c), gw_mul(g, a, b) + gw_mul(g, a, c));
            EXPECT_EQ(gw_mul(g, one, a), a);
            EXPECT_EQ(gw_mul(g, a, one), a);
            EXPECT_EQ(gw_mul(g, a, b).mass(), a.mass() * b.mass());
        }
    }
}

TEST(FaceAlgebra, RingLawsAndAction) {
    std::mt19937_64 rng(5);
    for (const auto& s : {"A3", "B3", "I2(7)"}) {
        auto arr = build(s);
        FaceAlgElt one = face_one(*arr);
        for (int i = 0; i < 10; ++i) {
            FaceAlgElt a = random_face_elt(*arr, rng), b = random_face_elt(*arr, rng), c = random_face_elt(*arr, rng);
            EXPECT_EQ(ff_mul(*arr, ff_mul(*arr, a, b), c), ff_mul(*arr, a, ff_mul(*arr, b, c)));
            EXPECT_EQ(ff_mul(*arr, one, a), a);
            EXPECT_EQ(ff_mul(*arr, a, one), a);
            for (int k = 0; k < arr->rank(); ++k) {
                std::uint32_t w = arr->group().generator(k);
                EXPECT_EQ(act_on_faces(*arr, w, ff_mul(*arr, a, b)),
                          ff_mul(*arr, act_on_faces(*arr, w, a), act_on_faces(*arr, w, b)));
            }
        }
    }
}

TEST(Descents, ElementsPartitionTheGroup) {
    for (const auto& s : kGroups) {
        ReflectionGroup g(GroupDescriptor::parse(s));
        const std::uint32_t all = (1u << g.rank()) - 1;
        GroupAlgElt total;
        for (std::uint32_t t = 0; t <= all; ++t) {
            GroupAlgElt y;
            for (std::uint32_t u = t;; u = (u - 1) & t) {
                y += descent_Z(g, u);
                if (u == 0) break;
            }
            EXPECT_EQ(y, descent_Y(g, t));
            total += descent_Z(g, t);
        }
        EXPECT_EQ(total.size(), g.order());
        EXPECT_EQ(descent_Y(g, all).size(), g.order());
        EXPECT_EQ(descent_Y(g, 0), group_one(g));
        GroupAlgElt by_count;
        for (int l = 0; l <= g.rank(); ++l) {
            by_count += descent_z(g, l);
            EXPECT_EQ(by_count, descent_y(g, l));
        }
        EXPECT_EQ(descent_z(g, g.rank()), GroupAlgElt::basis(g.longest()));
    }
}

TEST(Descents, SolomonAlgebraIsClosed) {
    for (const auto& s : {"A3", "B3", "D4", "I2(6)"}) {
        ReflectionGroup g(GroupDescriptor::parse(s));
        const std::uint32_t types = 1u << g.rank();
        for (std::uint32_t a = 0; a < types; ++a)
            for (std::uint32_t b = 0; b < types; ++b)
                EXPECT_TRUE(constant_on_descent_classes(g, gw_mul(g, descent_Y(g, a), descent_Y(g, b)))) << s;
    }
}

TEST(Bidigare, InvariantsAndZetaCoordinates) {
    for (const auto& s : kGroups) {
        auto arr = build(s);
        const std::uint32_t types = 1u << arr->rank();
        for (std::uint32_t t = 0; t < types; ++t) {
            EXPECT_TRUE(is_invariant(*arr, zeta(*arr, t)));
            auto coords = zeta_coordinates(*arr, zeta(*arr, t));
            for (std::uint32_t u = 0; u < types; ++u) EXPECT_EQ(coords[u], Rational(u == t ? 1 : 0));
        }
        FaceAlgElt single = FaceAlgElt::basis(arr->base_chamber());
        EXPECT_FALSE(is_invariant(*arr, single));
        EXPECT_THROW(zeta_coordinates(*arr, single), InvarianceError);
        EXPECT_THROW(bidigare_phi_chambers(*arr, single), InvarianceError);
    }
}

TEST(Bidigare, AntiHomomorphismOntoDescentAlgebra) {
    for (const auto& s : kGroups) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        const std::uint32_t types = 1u << arr->rank();
        for (std::uint32_t a = 0; a < types; ++a) {
            EXPECT_EQ(bidigare_phi(*arr, zeta(*arr, a)), descent_Y(g, a));
            EXPECT_EQ(bidigare_phi_chambers(*arr, zeta(*arr, a)), descent_Y(g, a));
            EXPECT_EQ(bidigare_phi(*arr, gamma(*arr, a)), descent_Z(g, a));
            for (std::uint32_t b = 0; b < types; ++b) {
                FaceAlgElt ab = ff_mul(*arr, zeta(*arr, a), zeta(*arr, b));
                EXPECT_EQ(bidigare_phi(*arr, ab), gw_mul(g, descent_Y(g, b), descent_Y(g, a))) << s;
            }
        }
    }
}

TEST(Characters, SubgroupClasses) {
    ReflectionGroup g(GroupDescriptor::parse("B3"));
    Subgroup whole = Subgroup::whole(g);
    EXPECT_EQ(whole.classes().size(), g.conjugacy_classes().size());
    // The parabolic subgroup generated by the first two generators is S_3.
    Subgroup s3(g, {g.identity(), g.generator(0), g.generator(1), g.mul(g.generator(0), g.generator(1)),
                    g.mul(g.generator(1), g.generator(0)), g.mul(g.generator(0), g.mul(g.generator(1), g.generator(0)))});
    EXPECT_EQ(s3.order(), 6u);
    EXPECT_EQ(s3.classes().size(), 3u);
    EXPECT_THROW(s3.class_of(g.generator(2)), SubgroupError);
    EXPECT_THROW(Subgroup(g, {g.generator(0), g.generator(1)}), SubgroupError);
}

TEST(Characters, InnerProductsAndInduction) {
    for (const auto& s : {"A3", "B3", "I2(5)", "H3"}) {
        ReflectionGroup g(GroupDescriptor::parse(s));
        Subgroup whole = Subgroup::whole(g);
        ClassFunction triv = trivial_character(whole), reg = regular_character(whole);
        EXPECT_EQ(inner_product(g, whole, triv, triv), Rational(1));
        EXPECT_EQ(inner_product(g, whole, reg, triv), Rational(1));
        EXPECT_EQ(inner_product(g, whole, reg, reg), Rational(static_cast<long>(g.order())));
        Subgroup trivial_subgroup(g, {g.identity()});
        EXPECT_EQ(induce_character(g, trivial_subgroup, trivial_character(trivial_subgroup)), reg);
        EXPECT_EQ(induce_character(g, whole, triv), triv);
        EXPECT_EQ(pointwise_product(triv, reg), reg);
        EXPECT_EQ(triv + zero_character(whole), triv);
    }
}

TEST(Characters, RightMultiplicationByIdempotents) {
    for (const auto& s : {"A2", "B3", "H3"}) {
        ReflectionGroup g(GroupDescriptor::parse(s));
        Subgroup whole = Subgroup::whole(g);
        Rational inv_order(1, static_cast<long>(g.order()));
        GroupAlgElt avg, sgn;
        std::vector<Rational> sign_values;
        for (std::uint32_t w = 0; w < g.order(); ++w) {
            Rational e(g.length(w) % 2 ? -1 : 1);
            avg.add(w, inv_order);
            sgn.add(w, inv_order * e);
            sign_values.push_back(e);
        }
        EXPECT_EQ(right_mul_character(g, group_one(g)), regular_character(whole));
        EXPECT_EQ(right_mul_character(g, avg), trivial_character(whole));
        EXPECT_EQ(right_mul_character(g, sgn), class_function_of(whole, sign_values));
        EXPECT_THROW(right_mul_character(g, descent_Y(g, 1)), IdempotencyError);
        auto d = dense(g, avg);
        EXPECT_EQ(d.size(), g.order());
        EXPECT_EQ(d[g.longest()], inv_order);
    }
}
