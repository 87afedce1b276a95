#pragma once

// Associated graded Varchenko-Gelfand ring: the squarefree commutative
// quotient of Q[e_H] by the circuit relations, with its nbc basis, flat
// grading and W-action.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ea/algebras.hpp"
#include "ea/arrangement.hpp"

namespace ea {

/// Squarefree monomial as a bitmask of hyperplane indices.
using VGMonomial = std::uint64_t;

struct VGElement {
    std::map<VGMonomial, Rational> terms;

    static VGElement one() { return monomial(0); }
    static VGElement monomial(VGMonomial m, const Rational& c = Rational(1));
    void add(VGMonomial m, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    Rational coeff(VGMonomial m) const;
    VGElement& operator+=(const VGElement& o);
    VGElement& operator*=(const Rational& s);
    friend VGElement operator+(VGElement a, const VGElement& b) { return a += b; }
    friend VGElement operator*(VGElement a, const Rational& s) { return a *= s; }
    friend bool operator==(const VGElement&, const VGElement&) = default;
};

enum class HyperplaneOrder { Default, Reversed };

HyperplaneOrder parse_hyperplane_order(const std::string& text);

class VGRing {
public:
    /// `ground` restricts to a localization A_X (all hyperplanes by default).
    explicit VGRing(const Arrangement& arr, HyperplaneOrder order = HyperplaneOrder::Default,
                    std::uint64_t ground = ~std::uint64_t{0});

    const Arrangement& arrangement() const { return arr_; }
    std::uint64_t ground() const { return ground_; }
    /// Hyperplane indices from smallest to largest in the ring's order.
    const std::vector<int>& ordering() const { return ordering_; }

    bool is_nbc(VGMonomial m) const;
    /// nbc sets grouped by size.
    const std::vector<std::vector<VGMonomial>>& nbc_by_size() const { return nbc_by_size_; }
    /// nbc sets whose hyperplanes intersect in flat x.
    const std::vector<VGMonomial>& nbc_of_flat(std::uint32_t x) const;
    std::uint32_t flat_of(VGMonomial m) const;

    VGElement normal_form(const VGElement& x) const;
    const VGElement& normal_form(VGMonomial m) const;
    /// Same rewriting, choosing the broken circuit at random at each step and
    /// without memoization (confluence checks).
    VGElement normal_form_random(const VGElement& x, std::mt19937_64& rng) const;

    VGElement mul(const VGElement& a, const VGElement& b) const;
    /// w * x; w must preserve the ground set.
    VGElement act(std::uint32_t w, const VGElement& x) const;

    /// Character of VG^k on W (the ground must be everything).
    ClassFunction degree_character(int k) const;
    /// Character of VG^k on a subgroup preserving the ground set.
    ClassFunction degree_character(int k, const Subgroup& n) const;
    /// Character of VG_X on N_X.
    ClassFunction flat_character(std::uint32_t x, const Subgroup& nx) const;
    /// ind_{N_X}^W of the above.
    ClassFunction orbit_character(std::uint32_t x) const;

    /// Monomial as hyperplane indices in increasing ring order.
    std::vector<int> indices(VGMonomial m) const;

private:
    struct Relation {
        VGMonomial broken;  // circuit minus its largest member
        int top;            // largest member
        std::uint64_t positive;
    };
    const Relation* find_relation(VGMonomial m, std::mt19937_64* rng) const;
    void rewrite_step(VGMonomial m, const Relation& rel, const Rational& c, VGElement& out) const;
    Rational trace(std::uint32_t w, const std::vector<VGMonomial>& basis) const;

    const Arrangement& arr_;
    std::uint64_t ground_;
    std::vector<int> ordering_;
    std::vector<int> position_;
    std::vector<Relation> relations_;
    std::vector<std::vector<VGMonomial>> nbc_by_size_;
    std::map<std::uint32_t, std::vector<VGMonomial>> nbc_by_flat_;
    std::uint64_t step_limit_;
    mutable std::unordered_map<VGMonomial, VGElement> memo_;
    mutable std::unordered_set<VGMonomial> open_;
    mutable std::uint64_t rewrites_ = 0;
};

}  // namespace ea
