#pragma once

// Flat idempotents from homogeneous sections, their orbit and dimension
// groupings, the Barr element, the separating element T, beta-polynomial
// Eulerian idempotents and the Eulerian subalgebra test.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "ea/algebras.hpp"
#include "ea/arrangement.hpp"
#include "ea/exactnum.hpp"

namespace ea {

/// Homogeneous section: one element per flat, supported on faces with that support.
struct Section {
    std::vector<FaceAlgElt> u;
};

Section uniform_section(const Arrangement& arr);

/// e_X = u_X - sum_{Y < X} u_X e_Y with V the minimum; e_V = u_V.
std::vector<FaceAlgElt> saliola_family(const Arrangement& arr, const Section& section);

/// Sum over each flat orbit (indexed like Arrangement::flat_orbits()).
std::vector<FaceAlgElt> group_by_orbit(const Arrangement& arr, const std::vector<FaceAlgElt>& family);
/// Sum over flats of each dimension k = 0..r.
std::vector<FaceAlgElt> group_by_dimension(const Arrangement& arr, const std::vector<FaceAlgElt>& family);

/// Sum over s of Y_{s}.
GroupAlgElt barr_element(const ReflectionGroup& g);
/// The face-side preimage: sum of all one-dimensional faces.
FaceAlgElt barr_face_element(const Arrangement& arr);
/// sigma_k = rays in the restriction to any flat of dimension k. Throws
/// DichotomyError when the count is not constant in some dimension.
std::vector<long> barr_eigenvalues(const Arrangement& arr);

/// Projectors prod_{j != k} (a - s_j) / (s_k - s_j), after checking that
/// prod_j (a - s_j) vanishes.
std::vector<GroupAlgElt> lagrange_projectors(const ReflectionGroup& g, const GroupAlgElt& a,
                                             const std::vector<Rational>& eigenvalues);

/// |W| times the identity coefficient: the dimension of QW * P.
Rational projector_rank(const ReflectionGroup& g, const GroupAlgElt& p);

struct TeeData {
    std::vector<mpz_class> weights;          // c_T, indexed by generator mask
    std::vector<std::vector<long>> counts;   // counts[X][T] = faces of type T inside X
    std::vector<mpz_class> tau;              // per flat
    std::vector<mpz_class> orbit_tau;        // per flat orbit
    FaceAlgElt face_element;                 // sum_T c_T zeta_T
    GroupAlgElt element;                     // sum_T c_T Y_T
};

/// Base-M weights c_T = M^T; throws InvariantError naming two flats when the
/// eigenvalues fail to separate flat orbits.
TeeData tee_element(const Arrangement& arr);

/// ((t+g-1)/g - l)_l ((t+1)/g)_{r-l} / (2/g)_r
Poly beta_poly(int r, int g, int ell);
/// sum_{j=l}^{r} C(r-l, j-l) a^{(j)} / (2/g)_j with a = (t-1)/g and a^{(j)} the
/// falling factorial.
Poly chu_vandermonde_sum(int r, int g, int ell);
/// E_0..E_r with sum_k t^k E_k = sum_w beta_{des(w)}(t) w.
std::vector<GroupAlgElt> eulerian_E(const ReflectionGroup& g);

/// t^k coefficients of sum_X chi(A^X)/c^X * (sum of faces with support X).
std::vector<FaceAlgElt> am_generating_function(const Arrangement& arr);

struct SubalgebraWitness {
    int dim = 0;
    std::uint32_t flat_min = 0;
    std::uint32_t flat_max = 0;
    long rays_min = 0;
    long rays_max = 0;
};

struct SubalgebraResult {
    bool closed = false;
    bool commutative = false;  // meaningful when closed
    std::optional<SubalgebraWitness> witness;
};

SubalgebraResult eulerian_subalgebra_test(const Arrangement& arr);
/// Lowest dimension with two flats of different ray counts, if any.
std::optional<SubalgebraWitness> ray_count_witness(const Arrangement& arr);

}  // namespace ea
