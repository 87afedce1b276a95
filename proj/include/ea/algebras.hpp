#pragma once

// Group algebra QW, face algebra QF, descent elements, the Bidigare map and
// class functions.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ea/arrangement.hpp"
#include "ea/coxeter.hpp"
#include "ea/exactnum.hpp"

namespace ea {

/// Sparse rational combination of basis elements; zero coefficients are never stored.
template <class Tag>
class Combination {
public:
    using Map = std::map<std::uint32_t, Rational>;

    Combination() = default;
    static Combination basis(std::uint32_t id, const Rational& c = Rational(1)) {
        Combination x;
        x.add(id, c);
        return x;
    }

    Rational coeff(std::uint32_t id) const {
        auto it = terms_.find(id);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add(std::uint32_t id, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(id, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void set(std::uint32_t id, const Rational& c) {
        if (c.is_zero())
            terms_.erase(id);
        else
            terms_[id] = c;
    }

    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Sum of the coefficients.
    Rational mass() const {
        Rational m;
        for (const auto& [id, c] : terms_) m += c;
        return m;
    }

    Combination& operator+=(const Combination& o) {
        for (const auto& [id, c] : o.terms_) add(id, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [id, c] : o.terms_) add(id, -c);
        return *this;
    }
    Combination& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [id, c] : terms_) c *= s;
        return *this;
    }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
    friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
    friend bool operator==(const Combination&, const Combination&) = default;

private:
    Map terms_;
};

struct GroupTag {};
struct FaceTag {};
using GroupAlgElt = Combination<GroupTag>;
using FaceAlgElt = Combination<FaceTag>;

/// Convolution in QW.
GroupAlgElt gw_mul(const ReflectionGroup& g, const GroupAlgElt& a, const GroupAlgElt& b);
/// Bilinear extension of the Tits product.
FaceAlgElt ff_mul(const Arrangement& arr, const FaceAlgElt& a, const FaceAlgElt& b);
GroupAlgElt group_one(const ReflectionGroup& g);
FaceAlgElt face_one(const Arrangement& arr);
/// W acting on faces, extended linearly.
FaceAlgElt act_on_faces(const Arrangement& arr, std::uint32_t w, const FaceAlgElt& a);

// Descent elements.
GroupAlgElt descent_Y(const ReflectionGroup& g, std::uint32_t t);  // Des(w) subset of t
GroupAlgElt descent_Z(const ReflectionGroup& g, std::uint32_t t);  // Des(w) = t
GroupAlgElt descent_y(const ReflectionGroup& g, int ell);          // des(w) <= ell
GroupAlgElt descent_z(const ReflectionGroup& g, int ell);          // des(w) = ell

// Invariant face elements.
FaceAlgElt zeta(const Arrangement& arr, std::uint32_t t);   // sum of faces of type t
FaceAlgElt gamma(const Arrangement& arr, std::uint32_t t);  // Moebius inversion of zeta
bool is_invariant(const Arrangement& arr, const FaceAlgElt& a);
/// Coefficients of an invariant element in the zeta basis; throws InvarianceError otherwise.
std::vector<Rational> zeta_coordinates(const Arrangement& arr, const FaceAlgElt& a);
/// zeta_t -> Y_t, extended linearly. phi(ab) = phi(b) phi(a).
GroupAlgElt bidigare_phi(const Arrangement& arr, const FaceAlgElt& a);
/// Same map through F c_1 = c_{x(F)}, valid on invariant elements.
GroupAlgElt bidigare_phi_chambers(const Arrangement& arr, const FaceAlgElt& a);

/// Conjugacy classes of a subgroup, computed inside the subgroup.
class Subgroup {
public:
    Subgroup(const ReflectionGroup& g, std::vector<std::uint32_t> elements);
    static Subgroup whole(const ReflectionGroup& g);

    const std::vector<std::uint32_t>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(std::uint32_t w) const { return member_[w]; }
    const std::vector<std::vector<std::uint32_t>>& classes() const { return classes_; }
    std::uint32_t class_of(std::uint32_t w) const;

private:
    std::vector<std::uint32_t> elements_;
    std::vector<bool> member_;
    std::vector<std::vector<std::uint32_t>> classes_;
    std::vector<std::uint32_t> class_of_;
};

/// One value per conjugacy class of the group the function lives on.
struct ClassFunction {
    std::vector<Rational> values;
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
    ClassFunction& operator+=(const ClassFunction& o);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
};

ClassFunction class_function_of(const Subgroup& n, const std::vector<Rational>& per_element);
ClassFunction trivial_character(const Subgroup& n);
ClassFunction regular_character(const Subgroup& n);
ClassFunction zero_character(const Subgroup& n);
/// (1/|N|) sum chi(w) psi(w^-1)
Rational inner_product(const ReflectionGroup& g, const Subgroup& n, const ClassFunction& chi,
                       const ClassFunction& psi);
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

/// Character of W acting on the left of QW * P; P must be idempotent.
ClassFunction right_mul_character(const ReflectionGroup& g, const GroupAlgElt& p);
ClassFunction induce_character(const ReflectionGroup& g, const Subgroup& n, const ClassFunction& chi);

/// Dense vector of the coefficients of a (length |W|).
std::vector<Rational> dense(const ReflectionGroup& g, const GroupAlgElt& a);

}  // namespace ea
