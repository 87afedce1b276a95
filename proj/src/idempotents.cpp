#include "ea/idempotents.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "ea/error.hpp"
#include "ea/intconv.hpp"

namespace ea {

Section uniform_section(const Arrangement& arr) {
    Section s;
    s.u.resize(arr.num_flats());
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
        const auto& fs = arr.faces_with_support(x);
        Rational c(1, static_cast<long>(fs.size()));
        for (auto f : fs) s.u[x].add(f, c);
    }
    return s;
}

std::vector<FaceAlgElt> saliola_family(const Arrangement& arr, const Section& section) {
    const std::uint32_t nf = arr.num_faces();
    const std::uint32_t nl = arr.num_flats();
    if (section.u.size() != nl) throw std::invalid_argument("section has the wrong number of flats");
    std::vector<FaceAlgElt> out(nl);
    std::vector<IntForm> forms(nl);
    // Flats are sorted by codimension, so everything below X comes first.
    for (std::uint32_t x = 0; x < nl; ++x) {
        std::vector<mpz_class> below(nf);
        mpz_class d = 1;
        for (std::uint32_t y = 0; y < x; ++y) {
            if (!arr.leq(y, x)) continue;
            const IntForm& e = forms[y];
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), e.den.get_mpz_t());
            if (l != d) {
                mpz_class scale = l / d;
                for (auto& v : below)
                    if (v != 0) v *= scale;
                d = l;
            }
            mpz_class scale = d / e.den;
            for (std::size_t i = 0; i < e.ids.size(); ++i)
                mpz_addmul(below[e.ids[i]].get_mpz_t(), e.nums[i].get_mpz_t(), scale.get_mpz_t());
        }
        std::vector<std::uint32_t> support;
        for (std::uint32_t f = 0; f < nf; ++f)
            if (below[f] != 0) support.push_back(f);

        IntForm u = to_int_form(section.u[x]);
        std::vector<mpz_class> acc(nf);
        for (std::size_t i = 0; i < u.ids.size(); ++i)
            for (auto g : support)
                mpz_addmul(acc[arr.product(u.ids[i], g)].get_mpz_t(), u.nums[i].get_mpz_t(), below[g].get_mpz_t());
        // e_X = (u_num * d - acc) / (u_den * d)
        for (std::size_t i = 0; i < u.ids.size(); ++i) acc[u.ids[i]] -= u.nums[i] * d;
        mpz_class den = u.den * d;
        for (std::uint32_t f = 0; f < nf; ++f)
            if (acc[f] != 0) out[x].set(f, Rational(mpz_class(-acc[f]), den));
        forms[x] = to_int_form(out[x]);
    }
    return out;
}

std::vector<FaceAlgElt> group_by_orbit(const Arrangement& arr, const std::vector<FaceAlgElt>& family) {
    std::vector<FaceAlgElt> out(arr.flat_orbits().size());
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) out[arr.flat(x).orbit] += family[x];
    return out;
}

std::vector<FaceAlgElt> group_by_dimension(const Arrangement& arr, const std::vector<FaceAlgElt>& family) {
    std::vector<FaceAlgElt> out(arr.rank() + 1);
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) out[arr.flat(x).dim] += family[x];
    return out;
}

GroupAlgElt barr_element(const ReflectionGroup& g) {
    GroupAlgElt out;
    for (int s = 0; s < g.rank(); ++s) out += descent_Y(g, 1u << s);
    return out;
}

FaceAlgElt barr_face_element(const Arrangement& arr) {
    FaceAlgElt out;
    for (auto f : arr.faces_of_dim(1)) out.add(f, Rational(1));
    return out;
}

std::optional<SubalgebraWitness> ray_count_witness(const Arrangement& arr) {
    std::vector<std::optional<std::pair<long, std::uint32_t>>> lo(arr.rank() + 1), hi(arr.rank() + 1);
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
        int k = arr.flat(x).dim;
        long rays = arr.restriction_stats(x).rays;
        if (!lo[k] || rays < lo[k]->first) lo[k] = std::make_pair(rays, x);
        if (!hi[k] || rays > hi[k]->first) hi[k] = std::make_pair(rays, x);
    }
    for (int k = 0; k <= arr.rank(); ++k)
        if (lo[k]->first != hi[k]->first) return SubalgebraWitness{k, lo[k]->second, hi[k]->second, lo[k]->first, hi[k]->first};
    return std::nullopt;
}

std::vector<long> barr_eigenvalues(const Arrangement& arr) {
    if (auto w = ray_count_witness(arr))
        throw DichotomyError("ray counts differ between flats of dimension " + std::to_string(w->dim), w->flat_min,
                             w->flat_max, w->rays_min, w->rays_max);
    std::vector<long> sigma(arr.rank() + 1);
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) sigma[arr.flat(x).dim] = arr.restriction_stats(x).rays;
    return sigma;
}

std::vector<GroupAlgElt> lagrange_projectors(const ReflectionGroup& g, const GroupAlgElt& a,
                                             const std::vector<Rational>& eigenvalues) {
    const std::size_t m = eigenvalues.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (eigenvalues[i] == eigenvalues[j]) throw std::invalid_argument("eigenvalues must be distinct");
    std::vector<GroupAlgElt> factors;
    for (const auto& s : eigenvalues) factors.push_back(a - group_one(g) * s);
    std::vector<GroupAlgElt> prefix(m + 1), suffix(m + 1);
    prefix[0] = group_one(g);
    for (std::size_t j = 0; j < m; ++j) prefix[j + 1] = gw_mul(g, prefix[j], factors[j]);
    if (!prefix[m].is_zero()) throw MissingEigenvalueError("product of (a - eigenvalue) does not vanish");
    suffix[m] = group_one(g);
    for (std::size_t j = m; j-- > 0;) suffix[j] = gw_mul(g, factors[j], suffix[j + 1]);
    std::vector<GroupAlgElt> out;
    for (std::size_t k = 0; k < m; ++k) {
        Rational denom(1);
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) denom *= eigenvalues[k] - eigenvalues[j];
        out.push_back(gw_mul(g, prefix[k], suffix[k + 1]) * denom.inverse());
    }
    return out;
}

Rational projector_rank(const ReflectionGroup& g, const GroupAlgElt& p) {
    return p.coeff(g.identity()) * Rational(static_cast<long>(g.order()));
}

TeeData tee_element(const Arrangement& arr) {
    const std::uint32_t types = 1u << arr.rank();
    TeeData t;
    t.counts.assign(arr.num_flats(), std::vector<long>(types, 0));
    for (std::uint32_t f = 0; f < arr.num_faces(); ++f) {
        const Face& face = arr.face(f);
        for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
            std::uint64_t mask = arr.flat(x).mask;
            if ((face.zero_mask & mask) == mask) ++t.counts[x][face.type];
        }
    }
    long m = 0;
    for (const auto& row : t.counts) {
        long s = 0;
        for (long c : row) s += c;
        m = std::max(m, s);
    }
    mpz_class base = m + 1;
    t.weights.resize(types);
    for (std::uint32_t s = 0; s < types; ++s) mpz_pow_ui(t.weights[s].get_mpz_t(), base.get_mpz_t(), s);
    t.tau.resize(arr.num_flats());
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x)
        for (std::uint32_t s = 0; s < types; ++s) t.tau[x] += t.counts[x][s] * t.weights[s];

    std::map<mpz_class, std::uint32_t> owner;  // tau -> first flat
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
        auto [it, fresh] = owner.emplace(t.tau[x], x);
        if (!fresh && arr.flat(it->second).orbit != arr.flat(x).orbit)
            throw InvariantError("T eigenvalue merges flats " + std::to_string(it->second) + " and " +
                                 std::to_string(x) + " from different orbits");
    }
    for (const auto& orbit : arr.flat_orbits()) {
        for (auto x : orbit)
            if (t.tau[x] != t.tau[orbit.front()])
                throw InvariantError("T eigenvalue separates flats " + std::to_string(orbit.front()) + " and " +
                                     std::to_string(x) + " of one orbit");
        t.orbit_tau.push_back(t.tau[orbit.front()]);
    }
    for (std::uint32_t s = 0; s < types; ++s) t.face_element += zeta(arr, s) * Rational(t.weights[s], 1);
    const ReflectionGroup& g = arr.group();
    for (std::uint32_t w = 0; w < g.order(); ++w) {
        mpz_class c;
        for (std::uint32_t s = 0; s < types; ++s)
            if ((g.descent_mask(w) & ~s) == 0) c += t.weights[s];
        t.element.add(w, Rational(c, 1));
    }
    return t;
}

Poly beta_poly(int r, int g, int ell) {
    if (g < 1 || ell < 0 || ell > r) throw std::invalid_argument("beta_poly: parameters out of range");
    Poly first = rising_factorial(Poly::linear(Rational(g - 1, g) - Rational(ell), Rational(1, g)), ell);
    Poly second = rising_factorial(Poly::linear(Rational(1, g), Rational(1, g)), r - ell);
    Rational denom = rising_factorial(Poly(Rational(2, g)), r).coefficient(0);
    return first * second / denom;
}

Poly chu_vandermonde_sum(int r, int g, int ell) {
    if (g < 1 || ell < 0 || ell > r) throw std::invalid_argument("chu_vandermonde_sum: parameters out of range");
    Poly a = Poly::linear(Rational(-1, g), Rational(1, g));
    Poly sum;
    for (int j = ell; j <= r; ++j) {
        Poly falling = rising_factorial(a - Poly(Rational(j - 1)), static_cast<unsigned>(j));
        Rational denom = rising_factorial(Poly(Rational(2, g)), j).coefficient(0);
        sum += falling * (binomial(r - ell, j - ell) / denom);
    }
    return sum;
}

std::vector<GroupAlgElt> eulerian_E(const ReflectionGroup& g) {
    auto gap = g.descriptor().exponent_gap();
    if (!gap) throw UnsupportedError("Eulerian elements need a coincidental group");
    const int r = g.rank();
    std::vector<Poly> beta;
    for (int l = 0; l <= r; ++l) beta.push_back(beta_poly(r, *gap, l));
    std::vector<GroupAlgElt> e(r + 1);
    for (std::uint32_t w = 0; w < g.order(); ++w) {
        const Poly& b = beta[g.des(w)];
        for (int k = 0; k <= r; ++k) e[k].add(w, b.coefficient(k));
    }
    return e;
}

std::vector<FaceAlgElt> am_generating_function(const Arrangement& arr) {
    std::vector<FaceAlgElt> out(arr.rank() + 1);
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
        RestrictionStats st = arr.restriction_stats(x);
        Rational inv(1, st.chambers);
        for (int k = 0; k <= st.chi.degree(); ++k) {
            Rational c = st.chi.coefficient(k) * inv;
            if (c.is_zero()) continue;
            for (auto f : arr.faces_with_support(x)) out[k].add(f, c);
        }
    }
    return out;
}

SubalgebraResult eulerian_subalgebra_test(const Arrangement& arr) {
    const ReflectionGroup& g = arr.group();
    const int r = g.rank();
    const std::uint32_t n = g.order();
    const std::size_t blocks = static_cast<std::size_t>(r + 1) * (r + 1);
    // counts[(j, k)][x] = #{(u, v) : des u = j, des v = k, uv = x}: the
    // coefficient of x in z_j z_k.
    std::vector<std::uint32_t> counts(blocks * n, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
        std::size_t base = static_cast<std::size_t>(g.des(u)) * (r + 1);
        for (std::uint32_t v = 0; v < n; ++v) ++counts[(base + g.des(v)) * n + g.mul(u, v)];
    }
    SubalgebraResult res;
    res.closed = true;
    for (std::size_t b = 0; b < blocks && res.closed; ++b) {
        std::vector<std::optional<std::uint32_t>> per_class(r + 1);
        for (std::uint32_t x = 0; x < n && res.closed; ++x) {
            auto& slot = per_class[g.des(x)];
            std::uint32_t c = counts[b * n + x];
            if (!slot)
                slot = c;
            else if (*slot != c)
                res.closed = false;
        }
    }
    if (res.closed) {
        res.commutative = true;
        for (int j = 0; j <= r && res.commutative; ++j)
            for (int k = j + 1; k <= r && res.commutative; ++k)
                for (std::uint32_t x = 0; x < n; ++x)
                    if (counts[(static_cast<std::size_t>(j) * (r + 1) + k) * n + x] !=
                        counts[(static_cast<std::size_t>(k) * (r + 1) + j) * n + x]) {
                        res.commutative = false;
                        break;
                    }
    } else {
        res.witness = ray_count_witness(arr);
    }
    return res;
}

}  // namespace ea
