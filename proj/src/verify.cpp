#include "ea/verify.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include "ea/error.hpp"
#include "ea/homology.hpp"
#include "ea/idempotents.hpp"

namespace ea {

namespace {

Check make(std::string name, bool pass, std::string detail = {}) {
    return Check{std::move(name), pass, std::move(detail)};
}

// First failing index pair, as text.
std::string pair_text(std::uint32_t a, std::uint32_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

template <class E, class Mul>
void family_laws(const std::string& prefix, const std::vector<E>& family, const E& one, Mul mul,
                 std::vector<Check>& out) {
    E sum;
    for (const auto& e : family) sum += e;
    out.push_back(make(prefix + " complete", sum == one));
    std::string bad_idem, bad_orth;
    for (std::uint32_t i = 0; i < family.size(); ++i)
        for (std::uint32_t j = 0; j < family.size(); ++j) {
            E p = mul(family[i], family[j]);
            if (i == j && p != family[i] && bad_idem.empty()) bad_idem = "element " + std::to_string(i);
            if (i != j && !p.is_zero() && bad_orth.empty()) bad_orth = "pair " + pair_text(i, j);
        }
    out.push_back(make(prefix + " idempotent", bad_idem.empty(), bad_idem));
    out.push_back(make(prefix + " orthogonal", bad_orth.empty(), bad_orth));
}

std::string values_text(const ClassFunction& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.values.size(); ++i) s += (i ? ", " : "") + f.values[i].to_string();
    return s + "]";
}

ClassFunction wh_by_codim(const Arrangement& arr, int k) {
    ClassFunction f = zero_character(Subgroup::whole(arr.group()));
    for (const auto& orbit : arr.flat_orbits())
        if (arr.flat(orbit.front()).codim == k) f += wh_orbit_character(arr, orbit.front());
    return f;
}

long mu_sum(const Arrangement& arr, const std::vector<std::uint32_t>& flats) {
    long s = 0;
    for (auto x : flats) s += std::labs(arr.moebius(x));
    return s;
}

Check skipped(const std::string& why) { return make("applicable", true, "skipped: " + why); }

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tits-laws",  "saliola",   "coincidental-thm48", "allcox-thm56",
                                                "vg-grading", "am-genfun", "chu-vandermonde"};
    return names;
}

std::vector<Check> run_suite(const std::string& suite, const Arrangement& arr, HyperplaneOrder order) {
    if (suite == "all") {
        std::vector<Check> out;
        for (const auto& name : suite_names())
            for (auto& c : run_suite(name, arr, order)) {
                c.name = name + ": " + c.name;
                out.push_back(std::move(c));
            }
        return out;
    }
    if (suite == "tits-laws") return verify_tits_laws(arr);
    if (suite == "saliola") return verify_saliola(arr);
    if (suite == "coincidental-thm48") return verify_coincidental(arr, order);
    if (suite == "allcox-thm56") return verify_all_coxeter(arr, order);
    if (suite == "vg-grading") return verify_vg_grading(arr, order);
    if (suite == "am-genfun") return verify_am_genfun(arr);
    if (suite == "chu-vandermonde") return verify_chu_vandermonde(arr);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<Check> verify_tits_laws(const Arrangement& arr) {
    const std::uint32_t nf = arr.num_faces();
    const std::uint32_t nl = arr.num_flats();
    const ReflectionGroup& g = arr.group();
    std::vector<std::int64_t> join(static_cast<std::size_t>(nl) * nl, -1);
    std::string bad_unit, bad_idem, bad_band, bad_join, bad_equiv;
    for (std::uint32_t f = 0; f < nf; ++f) {
        if (arr.product(arr.center(), f) != f || arr.product(f, arr.center()) != f)
            if (bad_unit.empty()) bad_unit = "face " + std::to_string(f);
        if (arr.product(f, f) != f && bad_idem.empty()) bad_idem = "face " + std::to_string(f);
        for (std::uint32_t h = 0; h < nf; ++h) {
            std::uint32_t fh = arr.product(f, h);
            if (arr.product(fh, f) != fh && bad_band.empty()) bad_band = "faces " + pair_text(f, h);
            auto& j = join[static_cast<std::size_t>(arr.face(f).flat) * nl + arr.face(h).flat];
            if (j < 0) j = arr.span_flat(arr.face(f).flat, arr.face(h).flat);
            if (arr.face(fh).flat != j && bad_join.empty()) bad_join = "faces " + pair_text(f, h);
            for (int s = 0; s < g.rank(); ++s) {
                std::uint32_t w = g.generator(s);
                if (arr.act(w, fh) != arr.product(arr.act(w, f), arr.act(w, h)) && bad_equiv.empty())
                    bad_equiv = "faces " + pair_text(f, h) + " under s" + std::to_string(s + 1);
            }
        }
    }
    return {make("unit", bad_unit.empty(), bad_unit), make("idempotency FF = F", bad_idem.empty(), bad_idem),
            make("band law FGF = FG", bad_band.empty(), bad_band),
            make("support of FG is the join", bad_join.empty(), bad_join),
            make("W-equivariance", bad_equiv.empty(), bad_equiv)};
}

std::vector<Check> verify_saliola(const Arrangement& arr) {
    std::vector<Check> out;
    auto family = saliola_family(arr, uniform_section(arr));
    auto mul = [&](const FaceAlgElt& a, const FaceAlgElt& b) { return ff_mul(arr, a, b); };
    family_laws("flat idempotents", family, face_one(arr), mul, out);
    family_laws("orbit idempotents", group_by_orbit(arr, family), face_one(arr), mul, out);
    family_laws("Eulerian idempotents", group_by_dimension(arr, family), face_one(arr), mul, out);

    // phi(ab) = phi(b) phi(a) on the zeta basis.
    const ReflectionGroup& g = arr.group();
    const std::uint32_t types = 1u << arr.rank();
    std::vector<FaceAlgElt> z;
    for (std::uint32_t t = 0; t < types; ++t) z.push_back(zeta(arr, t));
    std::string bad;
    for (std::uint32_t s = 0; s < types && bad.empty(); ++s)
        for (std::uint32_t t = 0; t < types && bad.empty(); ++t) {
            GroupAlgElt lhs = bidigare_phi(arr, ff_mul(arr, z[s], z[t]));
            if (lhs != gw_mul(g, descent_Y(g, t), descent_Y(g, s))) bad = "types " + pair_text(s, t);
        }
    out.push_back(make("Bidigare map is an anti-homomorphism", bad.empty(), bad));
    return out;
}

std::vector<Check> verify_coincidental(const Arrangement& arr, HyperplaneOrder order) {
    const ReflectionGroup& g = arr.group();
    if (!g.descriptor().coincidental()) return {skipped("group is not coincidental")};
    std::vector<Check> out;
    const int r = arr.rank();
    std::vector<long> sigma;
    try {
        sigma = barr_eigenvalues(arr);
    } catch (const DichotomyError& e) {
        return {make("Barr eigenvalues", false, e.what())};
    }
    std::vector<Rational> ev;
    for (long s : sigma) ev.push_back(Rational(s));
    std::vector<GroupAlgElt> proj;
    try {
        proj = lagrange_projectors(g, barr_element(g), ev);
        out.push_back(make("Barr element annihilated by prod (s - sigma_k)", true));
    } catch (const MissingEigenvalueError& e) {
        return {make("Barr element annihilated by prod (s - sigma_k)", false, e.what())};
    }
    auto mul = [&](const GroupAlgElt& a, const GroupAlgElt& b) { return gw_mul(g, a, b); };
    family_laws("Barr projectors", proj, group_one(g), mul, out);

    auto whitney = arr.whitney_numbers();
    std::string bad_rank;
    for (int k = 0; k <= r; ++k)
        if (projector_rank(g, proj[k]) != Rational(whitney[r - k]) && bad_rank.empty())
            bad_rank = "k = " + std::to_string(k);
    out.push_back(make("eigenspace dimensions are Whitney numbers", bad_rank.empty(), bad_rank));

    auto eul = group_by_dimension(arr, saliola_family(arr, uniform_section(arr)));
    auto e = eulerian_E(g);
    std::string bad_phi, bad_e;
    for (int k = 0; k <= r; ++k) {
        if (bidigare_phi(arr, eul[k]) != proj[k] && bad_phi.empty()) bad_phi = "k = " + std::to_string(k);
        if (e[k] != proj[k] && bad_e.empty()) bad_e = "k = " + std::to_string(k);
    }
    out.push_back(make("phi(e_k) equals the Barr projector", bad_phi.empty(), bad_phi));
    out.push_back(make("E_k equals the Barr projector", bad_e.empty(), bad_e));

    VGRing ring(arr, order);
    std::string bad_vg, bad_wh;
    for (int k = 0; k <= r; ++k) {
        ClassFunction img = right_mul_character(g, proj[r - k]);
        ClassFunction vg = ring.degree_character(k);
        ClassFunction wh = wh_by_codim(arr, k);
        if (img != vg && bad_vg.empty()) bad_vg = "k = " + std::to_string(k) + ": " + values_text(img) + " vs " + values_text(vg);
        if (vg != wh && bad_wh.empty()) bad_wh = "k = " + std::to_string(k) + ": " + values_text(vg) + " vs " + values_text(wh);
    }
    out.push_back(make("character of image equals VG^k", bad_vg.empty(), bad_vg));
    out.push_back(make("VG^k equals Whitney homology", bad_wh.empty(), bad_wh));
    return out;
}

std::vector<Check> verify_all_coxeter(const Arrangement& arr, HyperplaneOrder order) {
    const ReflectionGroup& g = arr.group();
    std::vector<Check> out;
    TeeData t;
    try {
        t = tee_element(arr);
        out.push_back(make("T separates flat orbits", true));
    } catch (const InvariantError& e) {
        return {make("T separates flat orbits", false, e.what())};
    }
    std::vector<Rational> ev;
    for (const auto& tau : t.orbit_tau) ev.push_back(Rational(tau, 1));
    std::vector<GroupAlgElt> proj;
    try {
        proj = lagrange_projectors(g, t.element, ev);
        out.push_back(make("T annihilated by prod (T - tau)", true));
    } catch (const MissingEigenvalueError& e) {
        return {make("T annihilated by prod (T - tau)", false, e.what())};
    }
    auto mul = [&](const GroupAlgElt& a, const GroupAlgElt& b) { return gw_mul(g, a, b); };
    family_laws("T projectors", proj, group_one(g), mul, out);

    VGRing ring(arr, order);
    std::string bad_dim, bad_vg, bad_wh;
    const auto& orbits = arr.flat_orbits();
    for (std::uint32_t o = 0; o < orbits.size(); ++o) {
        std::uint32_t x = orbits[o].front();
        if (projector_rank(g, proj[o]) != Rational(mu_sum(arr, orbits[o])) && bad_dim.empty())
            bad_dim = "orbit " + std::to_string(o);
        ClassFunction img = right_mul_character(g, proj[o]);
        ClassFunction vg = ring.orbit_character(x);
        ClassFunction wh = wh_orbit_character(arr, x);
        if (img != vg && bad_vg.empty()) bad_vg = "orbit " + std::to_string(o) + ": " + values_text(img) + " vs " + values_text(vg);
        if (vg != wh && bad_wh.empty()) bad_wh = "orbit " + std::to_string(o) + ": " + values_text(vg) + " vs " + values_text(wh);
    }
    out.push_back(make("eigenspace dimension is the orbit's Moebius sum", bad_dim.empty(), bad_dim));
    out.push_back(make("character of image equals VG_[X]", bad_vg.empty(), bad_vg));
    out.push_back(make("VG_[X] equals WH_[X]", bad_wh.empty(), bad_wh));
    return out;
}

std::vector<Check> verify_vg_grading(const Arrangement& arr, HyperplaneOrder order) {
    const ReflectionGroup& g = arr.group();
    const int r = arr.rank();
    const int n = arr.num_hyperplanes();
    std::vector<Check> out;
    VGRing ring(arr, order);

    auto whitney = arr.whitney_numbers();
    std::string bad;
    std::size_t total = 0;
    for (int k = 0; k <= r; ++k) {
        total += ring.nbc_by_size()[k].size();
        if (static_cast<long>(ring.nbc_by_size()[k].size()) != whitney[k] && bad.empty()) bad = "k = " + std::to_string(k);
    }
    out.push_back(make("dim VG^k is the Whitney number", bad.empty(), bad));
    out.push_back(make("total dimension is |W|", total == g.order(), std::to_string(total)));

    bad.clear();
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x)
        if (static_cast<long>(ring.nbc_of_flat(x).size()) != std::labs(arr.moebius(x)) && bad.empty())
            bad = "flat " + std::to_string(x);
    out.push_back(make("dim VG_X is |mu(V, X)|", bad.empty(), bad));

    // Every monomial of degree at most r normalizes inside its own flat.
    bad.clear();
    std::vector<std::uint64_t> layer{0};
    for (int k = 0; k <= r && bad.empty(); ++k) {
        std::vector<std::uint64_t> next;
        for (auto m : layer) {
            std::uint32_t x = ring.flat_of(m);
            for (const auto& [m2, c] : ring.normal_form(m).terms)
                if ((!ring.is_nbc(m2) || ring.flat_of(m2) != x) && bad.empty()) bad = "monomial mask " + std::to_string(m);
            int hi = m ? 64 - std::countl_zero(m) : 0;
            if (k < r)
                for (int i = hi; i < n; ++i) next.push_back(m | (std::uint64_t{1} << i));
        }
        layer = std::move(next);
    }
    out.push_back(make("normal form preserves the flat grading", bad.empty(), bad));

    bad.clear();
    for (int s = 0; s < r && bad.empty(); ++s) {
        std::uint32_t w = g.generator(s);
        for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
            std::uint32_t wx = arr.flat_act(w, x);
            for (auto m : ring.nbc_of_flat(x))
                for (const auto& [m2, c] : ring.act(w, VGElement::monomial(m)).terms)
                    if (ring.flat_of(m2) != wx && bad.empty()) bad = "flat " + std::to_string(x);
        }
    }
    out.push_back(make("W maps VG_X onto VG_wX", bad.empty(), bad));

    bad.clear();
    for (const auto& orbit : arr.flat_orbits()) {
        std::uint32_t x = orbit.front();
        Subgroup nx(g, arr.stabilizer(x));
        VGRing local(arr, order, arr.flat(x).mask);
        if (local.degree_character(arr.flat(x).codim, nx) != ring.flat_character(x, nx) && bad.empty())
            bad = "flat " + std::to_string(x);
    }
    out.push_back(make("localization matches VG_X as N_X-characters", bad.empty(), bad));

    VGRing alt(arr, order == HyperplaneOrder::Default ? HyperplaneOrder::Reversed : HyperplaneOrder::Default);
    bool same = true;
    for (int k = 0; k <= r; ++k) same = same && alt.nbc_by_size()[k].size() == ring.nbc_by_size()[k].size();
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) same = same && alt.nbc_of_flat(x).size() == ring.nbc_of_flat(x).size();
    out.push_back(make("dimensions do not depend on the hyperplane order", same));

    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<int> coef(-3, 3);
    bad.clear();
    for (int trial = 0; trial < 25 && bad.empty(); ++trial) {
        VGElement x;
        for (int t = 0; t < 4; ++t) {
            std::uint64_t m = 0;
            int size = std::uniform_int_distribution<int>(0, std::min(r + 1, n))(rng);
            for (int j = 0; j < size; ++j) m |= std::uint64_t{1} << std::uniform_int_distribution<int>(0, n - 1)(rng);
            x.add(m, Rational(coef(rng)));
        }
        if (ring.normal_form_random(x, rng) != ring.normal_form(x)) bad = "trial " + std::to_string(trial);
    }
    out.push_back(make("rewriting is confluent", bad.empty(), bad));
    return out;
}

std::vector<Check> verify_am_genfun(const Arrangement& arr) {
    if (!arr.group().descriptor().coincidental()) return {skipped("group is not coincidental")};
    auto eul = group_by_dimension(arr, saliola_family(arr, uniform_section(arr)));
    auto am = am_generating_function(arr);
    std::string bad;
    for (int k = 0; k <= arr.rank(); ++k)
        if (am[k] != eul[k] && bad.empty()) bad = "k = " + std::to_string(k);
    return {make("t^k coefficient equals e_k", bad.empty(), bad)};
}

std::vector<std::pair<int, int>> coincidental_parameters() {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= 8; ++r) out.push_back({r, 1});
    for (int r = 2; r <= 8; ++r) out.push_back({r, 2});
    out.push_back({3, 4});
    for (int m = 3; m <= 12; ++m) out.push_back({2, m - 2});
    return out;
}

std::vector<Check> verify_chu_vandermonde(const Arrangement& arr) {
    auto params = coincidental_parameters();
    if (auto gap = arr.group().descriptor().exponent_gap()) params.push_back({arr.rank(), *gap});
    std::string bad;
    for (auto [r, g] : params)
        for (int l = 0; l <= r; ++l)
            if (chu_vandermonde_sum(r, g, l) != beta_poly(r, g, l) && bad.empty())
                bad = "r = " + std::to_string(r) + ", g = " + std::to_string(g) + ", l = " + std::to_string(l);
    return {make("binomial sum equals beta", bad.empty(), bad)};
}

}  // namespace ea
