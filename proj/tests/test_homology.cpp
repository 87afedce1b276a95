#include <gtest/gtest.h>

#include <memory>

#include "ea/error.hpp"
#include "ea/homology.hpp"
#include "ea/linalg.hpp"
#include "ea/vg.hpp"

using namespace ea;

namespace {

std::unique_ptr<Arrangement> build(const std::string& spec) {
    return std::make_unique<Arrangement>(std::make_shared<ReflectionGroup>(GroupDescriptor::parse(spec)));
}

const std::vector<std::string> kGroups{"A2", "A3", "B3", "D4", "I2(5)", "H3"};

}  // namespace

TEST(Homology, ExactRankMatchesDenseRank) {
    std::vector<std::map<std::uint32_t, Rational>> rows{
        {{0, Rational(1)}, {1, Rational(2)}}, {{1, Rational(1)}, {2, Rational(1)}}, {{0, Rational(1)}, {2, Rational(-2)}}};
    Matrix<Rational> m(3, 3);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) m(i, j) = v;
    EXPECT_EQ(exact_rank(rows), static_cast<long>(m.rank()));
    EXPECT_EQ(exact_rank(rows), 2);
    EXPECT_EQ(exact_rank({}), 0);
}

TEST(Homology, HallEulerCharacteristicIsMoebius) {
    for (const auto& s : kGroups) {
        auto arr = build(s);
        for (std::uint32_t x = 1; x < arr->num_flats(); ++x) {
            IntervalComplex c = interval_complex(*arr, x);
            // Reduced Euler characteristic with the empty chain in degree -1.
            long chi = 0;
            for (std::size_t i = 0; i < c.levels.size(); ++i) chi += (i % 2 ? 1 : -1) * static_cast<long>(c.levels[i].size());
            EXPECT_EQ(chi, arr->moebius(x)) << s << " flat " << x;
            EXPECT_EQ(c.top_degree(), arr->flat(x).codim - 2);
        }
    }
}

TEST(Homology, GeometricLatticesAreCohenMacaulay) {
    for (const auto& s : kGroups) {
        auto arr = build(s);
        EXPECT_EQ(homology_ranks(*arr, arr->bottom()), (std::map<int, long>{{-2, 1}}));
        for (std::uint32_t x = 1; x < arr->num_flats(); ++x) {
            int codim = arr->flat(x).codim;
            EXPECT_EQ(homology_ranks(*arr, x), (std::map<int, long>{{codim - 2, std::labs(arr->moebius(x))}})) << s;
        }
    }
}

TEST(Homology, PartitionLatticeTopHomology) {
    // The proper part of the partition lattice of {1..n+1} has top homology of rank n!.
    auto arr = build("A4");
    EXPECT_EQ(homology_ranks(*arr, arr->top()), (std::map<int, long>{{2, 24}}));
}

TEST(Homology, WhitneyCharacterInSmallCases) {
    auto arr = build("A2");
    const ReflectionGroup& g = arr->group();
    Subgroup whole = Subgroup::whole(g);
    // H~_0 of three points is the standard representation of S_3.
    std::vector<Rational> standard;
    for (std::uint32_t w = 0; w < g.order(); ++w) {
        int fixed_lines = 0;
        for (std::uint32_t x = 0; x < arr->num_flats(); ++x)
            if (arr->flat(x).codim == 1 && arr->flat_act(w, x) == x) ++fixed_lines;
        standard.push_back(Rational(fixed_lines - 1));
    }
    EXPECT_EQ(wh_character(*arr, arr->top(), whole), class_function_of(whole, standard));
    EXPECT_EQ(wh_character(*arr, arr->top(), whole).values.size(), 3u);
    EXPECT_EQ(wh_character(*arr, arr->bottom(), whole), trivial_character(whole));
}

TEST(Homology, WhitneyCharacterDimensions) {
    for (const auto& s : kGroups) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        for (std::uint32_t x = 0; x < arr->num_flats(); ++x) {
            Subgroup nx(g, arr->stabilizer(x));
            ClassFunction wh = wh_character(*arr, x, nx);
            EXPECT_EQ(wh.values[nx.class_of(g.identity())], Rational(std::labs(arr->moebius(x)))) << s;
            if (arr->flat(x).codim == 1) EXPECT_EQ(wh, trivial_character(nx));
        }
    }
}

TEST(Homology, DeterminantOnTheQuotient) {
    for (const auto& s : {"A3", "B3", "H3"}) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        for (std::uint32_t w = 0; w < g.order(); ++w) EXPECT_EQ(det_vx(*arr, arr->bottom(), w), 1);
        for (std::uint32_t x = 0; x < arr->num_flats(); ++x) {
            for (auto w : arr->stabilizer(x)) {
                int d = det_vx(*arr, x, w);
                EXPECT_TRUE(d == 1 || d == -1);
                // On the origin the quotient is the whole space.
                if (x == arr->top()) EXPECT_EQ(d, g.length(w) % 2 ? -1 : 1);
            }
            EXPECT_EQ(det_vx(*arr, x, g.identity()), 1);
        }
        // A simple reflection flips its own hyperplane's normal.
        for (int i = 0; i < g.rank(); ++i) {
            std::uint32_t sref = g.generator(i);
            std::uint64_t mask = 0;
            for (int h = 0; h < g.num_hyperplanes(); ++h)
                if (g.hyperplane_image(sref, h) == h && g.hyperplane_sign(sref, h) < 0) mask |= std::uint64_t{1} << h;
            auto hx = arr->flat_of_mask(arr->closure(mask));
            ASSERT_TRUE(hx.has_value());
            EXPECT_EQ(arr->flat(*hx).codim, 1);
            EXPECT_EQ(det_vx(*arr, *hx, sref), -1);
        }
        bool threw = false;
        for (std::uint32_t w = 0; w < g.order() && !threw; ++w) {
            std::uint32_t x = arr->num_flats() / 2;
            if (arr->flat_act(w, x) == x) continue;
            EXPECT_THROW(det_vx(*arr, x, w), StabilizerError);
            threw = true;
        }
        EXPECT_TRUE(threw);
    }
}

TEST(Homology, OrbitCharactersMatchVG) {
    for (const auto& s : kGroups) {
        auto arr = build(s);
        VGRing ring(*arr);
        for (const auto& orbit : arr->flat_orbits())
            EXPECT_EQ(wh_orbit_character(*arr, orbit.front()), ring.orbit_character(orbit.front())) << s;
    }
}
