// Acceptance suite: one PASS/FAIL line per criterion with its wall time.
// Exit status is zero iff every criterion passes within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ea/error.hpp"
#include "ea/homology.hpp"
#include "ea/idempotents.hpp"
#include "ea/verify.hpp"
#include "ea/vg.hpp"

using namespace ea;

namespace {

// Records the number of checks and the first failure.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    long checks() const { return checks_; }
    const std::string& failure() const { return failure_; }

private:
    long checks_ = 0;
    std::string failure_;
};

std::unique_ptr<Arrangement> build(const std::string& spec) {
    return std::make_unique<Arrangement>(std::make_shared<ReflectionGroup>(GroupDescriptor::parse(spec)));
}

std::vector<std::string> dihedral(int lo, int hi) {
    std::vector<std::string> out;
    for (int m = lo; m <= hi; ++m) out.push_back("I2(" + std::to_string(m) + ")");
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

const std::vector<std::string> kScope = concat(concat({"A2", "A3", "B2", "B3", "D4"}, dihedral(3, 12)), {"H3"});
const std::vector<std::string> kCoincidental = concat(concat({"A2", "A3", "B2", "B3"}, dihedral(3, 12)), {"H3"});

std::vector<Rational> as_rationals(const std::vector<long>& v) {
    std::vector<Rational> out;
    for (long x : v) out.push_back(Rational(x));
    return out;
}

std::vector<GroupAlgElt> barr_projectors(const Arrangement& arr) {
    return lagrange_projectors(arr.group(), barr_element(arr.group()), as_rationals(barr_eigenvalues(arr)));
}

// |coefficients| of prod (t - e_i), lowest codimension first.
std::vector<long> whitney_from_exponents(const ReflectionGroup& g) {
    Poly p(1);
    for (int e : g.descriptor().exponents()) p *= Poly::linear(Rational(-e), Rational(1));
    std::vector<long> out;
    for (int k = 0; k <= g.rank(); ++k) out.push_back(p.coefficient(g.rank() - k).abs().num().get_si());
    return out;
}

template <class Elt, class Mul>
void family_laws(Tally& t, const std::string& what, const std::vector<Elt>& family, const Elt& one, Mul mul) {
    Elt total;
    for (std::size_t i = 0; i < family.size(); ++i) {
        total += family[i];
        for (std::size_t j = 0; j < family.size(); ++j) {
            Elt p = mul(family[i], family[j]);
            if (i == j)
                t.expect(p == family[i], what + ": idempotency of " + std::to_string(i));
            else
                t.expect(p.is_zero(), what + ": orthogonality of " + std::to_string(i) + ", " + std::to_string(j));
        }
    }
    t.expect(total == one, what + ": completeness");
}

// C(a + c, k) as a polynomial in t, where a is a polynomial.
Poly binomial_of(const Poly& a, long c, int k) {
    Poly out(1);
    for (int i = 0; i < k; ++i) out *= a + Poly(Rational(c - i));
    for (int i = 2; i <= k; ++i) out = out / Rational(i);
    return out;
}

std::string join_values(const ClassFunction& f) {
    std::string s;
    for (const auto& v : f.values) s += (s.empty() ? "" : ",") + v.to_string();
    return "(" + s + ")";
}

GroupAlgElt from_labels(const ReflectionGroup& g, const std::vector<std::pair<std::string, Rational>>& terms) {
    GroupAlgElt out;
    for (const auto& [label, c] : terms) {
        bool found = false;
        for (std::uint32_t w = 0; w < g.order(); ++w)
            if (g.label(w) == label) {
                out.add(w, c);
                found = true;
            }
        if (!found) throw std::invalid_argument("no element labelled " + label);
    }
    return out;
}

// 1. Face semigroup laws over all pairs.
void tits_laws(Tally& t) {
    for (const auto& s : kScope) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        for (std::uint32_t f = 0; f < arr->num_faces(); ++f) {
            t.expect(arr->product(f, f) == f, s + ": FF = F");
            for (std::uint32_t h = 0; h < arr->num_faces(); ++h) {
                std::uint32_t fh = arr->product(f, h);
                t.expect(arr->product(fh, f) == fh, s + ": FGF = FG");
                t.expect(arr->face(fh).flat == arr->span_flat(arr->face(f).flat, arr->face(h).flat), s + ": support join");
                for (int i = 0; i < g.rank(); ++i) {
                    std::uint32_t w = g.generator(i);
                    t.expect(arr->act(w, fh) == arr->product(arr->act(w, f), arr->act(w, h)), s + ": equivariance");
                }
            }
        }
    }
}

// 2. Saliola family from the uniform section.
void saliola(Tally& t) {
    for (const auto& s : kScope) {
        auto arr = build(s);
        auto fam = saliola_family(*arr, uniform_section(*arr));
        auto mul = [&](const FaceAlgElt& a, const FaceAlgElt& b) { return ff_mul(*arr, a, b); };
        family_laws(t, s, fam, face_one(*arr), mul);
    }
}

// 3. Worked S_3 example.
void s3_fixtures(Tally& t) {
    auto arr = build("A2");
    const ReflectionGroup& g = arr->group();
    auto proj = barr_projectors(*arr);
    const Rational sixth(1, 6), half(1, 2), third(1, 3);
    std::vector<GroupAlgElt> expected{
        from_labels(g, {{"e", third}, {"(12)", -sixth}, {"(23)", -sixth}, {"(123)", -sixth}, {"(132)", -sixth}, {"(13)", third}}),
        from_labels(g, {{"e", half}, {"(13)", -half}}),
        from_labels(g, {{"e", sixth}, {"(12)", sixth}, {"(23)", sixth}, {"(13)", sixth}, {"(123)", sixth}, {"(132)", sixth}})};
    t.expect(proj.size() == 3, "three projectors");
    for (std::size_t k = 0; k < 3 && k < proj.size(); ++k) t.expect(proj[k] == expected[k], "projector " + std::to_string(k));
    // Hyperplanes H12, H13, H23; + is the side of x1 > x2 > x3.
    std::uint32_t c1 = arr->face_by_signs("+++"), c2 = arr->face_by_signs("-++");
    std::uint32_t c5 = arr->face_by_signs("+--"), c6 = arr->face_by_signs("++-");
    std::uint32_t f1 = arr->face_by_signs("0++"), f2 = arr->face_by_signs("-0+");
    t.expect(arr->product(f1, c1) == c1, "f1 c1 = c1");
    t.expect(arr->product(f1, c5) == c1, "f1 c5 = c1");
    t.expect(arr->product(c1, c6) == c1, "c1 c6 = c1");
    t.expect(arr->product(f1, f2) == c2, "f1 f2 = c2");
}

// 4. Barr eigenvalues, annihilation and eigenspace dimensions.
void barr_spectra(Tally& t) {
    std::vector<std::pair<std::string, std::vector<long>>> cases;
    for (int n = 1; n <= 6; ++n) {
        std::vector<long> sigma;
        for (int k = 0; k <= n; ++k) sigma.push_back((2L << k) - 2);
        cases.push_back({"A" + std::to_string(n), sigma});
    }
    for (int n = 2; n <= 4; ++n) {
        std::vector<long> sigma{0};
        for (int k = 1; k <= n; ++k) sigma.push_back(sigma.back() * 3 + 2);
        cases.push_back({"B" + std::to_string(n), sigma});
    }
    for (int m = 3; m <= 12; ++m) cases.push_back({"I2(" + std::to_string(m) + ")", {0, 2, 2L * m}});
    cases.push_back({"H3", {0, 2, 12, 62}});
    for (const auto& [s, sigma] : cases) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        t.expect(barr_eigenvalues(*arr) == sigma, s + ": sigma");
        std::vector<GroupAlgElt> proj;
        try {
            proj = lagrange_projectors(g, barr_element(g), as_rationals(sigma));
            t.expect(true, s + ": annihilation");
        } catch (const MissingEigenvalueError&) {
            t.expect(false, s + ": annihilation");
            continue;
        }
        auto whitney = whitney_from_exponents(g);
        for (int k = 0; k <= g.rank(); ++k)
            t.expect(projector_rank(g, proj[k]) == Rational(whitney[g.rank() - k]), s + ": rank of projector " + std::to_string(k));
    }
    auto h3 = whitney_from_exponents(ReflectionGroup(GroupDescriptor::parse("H3")));
    t.expect(h3 == std::vector<long>{1, 15, 59, 45}, "H3 Whitney numbers");
}

// 5. phi(e_k) = Barr projector = E_k, and the classical generating functions.
void triple_equality(Tally& t) {
    for (const auto& s : concat(kCoincidental, {"A4", "A5"})) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        auto proj = barr_projectors(*arr);
        auto dims = group_by_dimension(*arr, saliola_family(*arr, uniform_section(*arr)));
        auto e = eulerian_E(g);
        for (int k = 0; k <= g.rank(); ++k) {
            t.expect(bidigare_phi(*arr, dims[k]) == proj[k], s + ": phi(e_k) = s^(k), k = " + std::to_string(k));
            t.expect(e[k] == proj[k], s + ": E_k = s^(k), k = " + std::to_string(k));
        }
        const auto family = g.descriptor().family;
        if (family != Family::A && family != Family::B) continue;
        // Type A: t sum t^k E_k = sum_w C(t - 1 + n - des w, n) w with n = r + 1.
        // Type B: sum t^k E_k = sum_w C((t - 1)/2 + n - des w, n) w with n = r.
        const int r = g.rank();
        const bool type_a = family == Family::A;
        const int n = type_a ? r + 1 : r;
        Poly a = type_a ? Poly::t() - Poly(1) : (Poly::t() - Poly(1)) / Rational(2);
        for (std::uint32_t w = 0; w < g.order(); ++w) {
            Poly lhs;
            for (int k = 0; k <= r; ++k) {
                Poly mono = Poly(proj[k].coeff(w));
                for (int i = 0; i < k + (type_a ? 1 : 0); ++i) mono *= Poly::t();
                lhs += mono;
            }
            t.expect(lhs == binomial_of(a, n - g.des(w), n), s + ": generating function at " + g.label(w));
        }
    }
}

ClassFunction wh_by_codim(const Arrangement& arr, int k) {
    ClassFunction out = zero_character(Subgroup::whole(arr.group()));
    for (const auto& orbit : arr.flat_orbits())
        if (arr.flat(orbit.front()).codim == k) out += wh_orbit_character(arr, orbit.front());
    return out;
}

// 6. Characters of Barr eigenspaces, VG^k and Whitney homology.
void coincidental_characters(Tally& t) {
    for (const auto& s : concat(concat({"A1", "A2", "A3", "A4", "B2", "B3"}, dihedral(3, 10)), {"H3"})) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        auto proj = barr_projectors(*arr);
        VGRing ring(*arr);
        const int r = g.rank();
        for (int k = 0; k <= r; ++k) {
            ClassFunction img = right_mul_character(g, proj[r - k]);
            ClassFunction vg = ring.degree_character(k);
            ClassFunction wh = wh_by_codim(*arr, k);
            t.expect(img == vg, s + ": image vs VG^" + std::to_string(k) + " " + join_values(img) + " " + join_values(vg));
            t.expect(vg == wh, s + ": VG^" + std::to_string(k) + " vs WH " + join_values(vg) + " " + join_values(wh));
        }
    }
}

// 7. The Eulerian subspace is a subalgebra exactly for constant ray counts.
void dichotomy(Tally& t) {
    for (const auto& s : concat(kCoincidental, {"A4", "B4"})) {
        auto res = eulerian_subalgebra_test(*build(s));
        t.expect(res.closed, s + ": closed");
        t.expect(res.commutative, s + ": commutative");
    }
    for (const auto& s : {"D4", "D5"}) {
        auto arr = build(s);
        auto res = eulerian_subalgebra_test(*arr);
        t.expect(!res.closed, std::string(s) + ": not closed");
        t.expect(res.witness.has_value(), std::string(s) + ": witness");
        if (!res.witness) continue;
        const auto& w = *res.witness;
        t.expect(std::set<long>{w.rays_min, w.rays_max} == std::set<long>{6, 8}, std::string(s) + ": rays 6 and 8");
        t.expect(arr->flat(w.flat_min).dim == w.dim && arr->flat(w.flat_max).dim == w.dim, std::string(s) + ": same dimension");
        t.expect(arr->restriction_stats(w.flat_min).rays == w.rays_min &&
                     arr->restriction_stats(w.flat_max).rays == w.rays_max,
                 std::string(s) + ": ray counts");
    }
}

// 8. The separating element T for every group.
void all_coxeter(Tally& t) {
    for (const auto& s : concat(kScope, {"D5"})) {
        auto arr = build(s);
        const ReflectionGroup& g = arr->group();
        TeeData tee = tee_element(*arr);
        std::set<mpz_class> distinct(tee.tau.begin(), tee.tau.end());
        t.expect(distinct.size() == arr->flat_orbits().size(), s + ": distinct tau = orbits");
        for (std::uint32_t x = 0; x < arr->num_flats(); ++x)
            for (std::uint32_t y = x + 1; y < arr->num_flats(); ++y)
                t.expect((tee.tau[x] == tee.tau[y]) == (arr->flat(x).orbit == arr->flat(y).orbit), s + ": tau separates");
        std::vector<Rational> ev;
        for (const auto& v : tee.orbit_tau) ev.push_back(Rational(v, 1));
        auto proj = lagrange_projectors(g, tee.element, ev);
        VGRing ring(*arr);
        const auto& orbits = arr->flat_orbits();
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            long mu = 0;
            for (auto x : orbits[o]) mu += std::labs(arr->moebius(x));
            t.expect(projector_rank(g, proj[o]) == Rational(mu), s + ": eigenspace dimension");
            ClassFunction img = right_mul_character(g, proj[o]);
            ClassFunction vg = ring.orbit_character(orbits[o].front());
            ClassFunction wh = wh_orbit_character(*arr, orbits[o].front());
            t.expect(img == vg, s + ": image vs VG_[X] " + join_values(img) + " " + join_values(vg));
            t.expect(vg == wh, s + ": VG_[X] vs WH_[X] " + join_values(vg) + " " + join_values(wh));
        }
    }
}

// 9. Structure of the associated graded VG ring.
void vg_structure(Tally& t) {
    for (const auto& s : kScope) {
        auto arr = build(s);
        auto whitney = whitney_from_exponents(arr->group());
        for (auto order : {HyperplaneOrder::Default, HyperplaneOrder::Reversed}) {
            VGRing ring(*arr, order);
            for (int k = 0; k <= arr->rank(); ++k)
                t.expect(static_cast<long>(ring.nbc_by_size()[k].size()) == whitney[k], s + ": nbc count");
            for (std::uint32_t x = 0; x < arr->num_flats(); ++x)
                t.expect(static_cast<long>(ring.nbc_of_flat(x).size()) == std::labs(arr->moebius(x)), s + ": dim VG_X");
        }
        for (const auto& c : verify_vg_grading(*arr, HyperplaneOrder::Default)) t.expect(c.pass, s + ": " + c.name + " " + c.detail);
    }
}

// 10. Homology of lower intervals.
void interval_homology(Tally& t) {
    for (const auto& s : concat(kScope, {"A4", "B4"})) {
        auto arr = build(s);
        for (std::uint32_t x = 1; x < arr->num_flats(); ++x) {
            std::map<int, long> expected{{arr->flat(x).codim - 2, std::labs(arr->moebius(x))}};
            t.expect(homology_ranks(*arr, x) == expected, s + ": flat " + std::to_string(x));
        }
    }
}

// beta from its product form, computed here.
Poly beta_reference(int r, int g, int l) {
    Poly num = rising_factorial((Poly::t() + Poly(Rational(g - 1))) / Rational(g) - Poly(Rational(l)), l) *
               rising_factorial((Poly::t() + Poly(1)) / Rational(g), r - l);
    return num / rising_factorial(Poly(Rational(2, g)), r).coefficient(0);
}

// 11. Binomial-sum form of beta.
void chu_vandermonde(Tally& t) {
    std::vector<std::pair<int, int>> params;
    for (int r = 1; r <= 8; ++r) params.push_back({r, 1});
    for (int r = 2; r <= 8; ++r) params.push_back({r, 2});
    params.push_back({3, 4});
    for (int m = 3; m <= 12; ++m) params.push_back({2, m - 2});
    for (auto [r, g] : params)
        for (int l = 0; l <= r; ++l) {
            std::string tag = "r=" + std::to_string(r) + " g=" + std::to_string(g) + " l=" + std::to_string(l);
            t.expect(chu_vandermonde_sum(r, g, l) == beta_poly(r, g, l), tag);
            t.expect(beta_poly(r, g, l) == beta_reference(r, g, l), tag + " reference");
        }
}

// 12. Generating function for the Eulerian idempotents.
void am_genfun(Tally& t) {
    for (const auto& s : concat(concat({"A2", "A3", "B2", "B3"}, dihedral(3, 8)), {"H3"})) {
        auto arr = build(s);
        auto gf = am_generating_function(*arr);
        auto dims = group_by_dimension(*arr, saliola_family(*arr, uniform_section(*arr)));
        for (int k = 0; k <= arr->rank(); ++k) t.expect(gf[k] == dims[k], s + ": k = " + std::to_string(k));
    }
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Tally&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Tits laws", 60, tits_laws},
        {2, "Saliola family", 120, saliola},
        {3, "S_3 fixtures", 60, s3_fixtures},
        {4, "Barr spectra", 300, barr_spectra},
        {5, "triple element equality", 300, triple_equality},
        {6, "coincidental character equality", 300, coincidental_characters},
        {7, "subalgebra dichotomy", 300, dichotomy},
        {8, "flat-orbit suite", 300, all_coxeter},
        {9, "VG structure", 300, vg_structure},
        {10, "interval homology", 300, interval_homology},
        {11, "Chu-Vandermonde", 60, chu_vandermonde},
        {12, "generating function", 120, am_genfun},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = t.ok() && error.empty() && in_time;
        std::string detail;
        if (!error.empty())
            detail = " exception: " + error;
        else if (!t.ok())
            detail = " first failure: " + t.failure();
        else if (!in_time)
            detail = " over the time limit";
        std::printf("criterion %2d %-34s %s  %ld checks  %.2f s (limit %.0f s)%s\n", c.id, c.name, pass ? "PASS" : "FAIL",
                    t.checks(), secs, c.limit_seconds, detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
