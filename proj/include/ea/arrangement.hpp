#pragma once

// Face semigroup, intersection lattice and circuits of a reflection
// arrangement. Sign vectors are stored as two bitmasks over the hyperplanes
// (positive side, negative side); a hyperplane in neither mask contains the
// face. H+ is the side of the fundamental chamber.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ea/coxeter.hpp"
#include "ea/exactnum.hpp"

namespace ea {

struct SignVector {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;

    std::uint64_t nonzero() const { return plus | minus; }
    friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// Tits product: F's sign where nonzero, else G's.
inline SignVector compose(const SignVector& f, const SignVector& g) {
    std::uint64_t free = ~f.nonzero();
    return {f.plus | (g.plus & free), f.minus | (g.minus & free)};
}

/// "+0-" style string, one character per hyperplane.
std::string sign_string(const SignVector& s, int n);
SignVector parse_sign_string(const std::string& text);

struct Face {
    SignVector signs;
    std::uint64_t zero_mask = 0;  // hyperplanes containing the face
    std::uint32_t flat = 0;       // support
    int dim = 0;
    std::uint32_t type = 0;       // generators moving the face; |type| = dim
    std::uint32_t rep = 0;        // shortest w with face = w * F_type
};

struct Flat {
    std::uint64_t mask = 0;  // the localization A_X
    int dim = 0;
    int codim = 0;
    std::uint32_t orbit = 0;
};

struct Circuit {
    std::uint64_t members = 0;
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
};

struct RestrictionStats {
    long rays = 0;      // one-dimensional faces inside X
    long chambers = 0;  // faces with support exactly X
    Poly chi;           // characteristic polynomial of the restriction to X
};

class Arrangement {
public:
    explicit Arrangement(std::shared_ptr<const ReflectionGroup> group);

    const ReflectionGroup& group() const { return *group_; }
    std::shared_ptr<const ReflectionGroup> group_ptr() const { return group_; }
    int num_hyperplanes() const { return n_; }
    int rank() const { return group_->rank(); }

    // Faces.
    std::uint32_t num_faces() const { return static_cast<std::uint32_t>(faces_.size()); }
    const Face& face(std::uint32_t f) const { return faces_[f]; }
    std::uint32_t center() const { return 0; }
    std::uint32_t base_chamber() const { return base_chamber_; }
    std::optional<std::uint32_t> find_face(const SignVector& s) const;
    /// Looks up a face by its sign string; throws when it is not a covector.
    std::uint32_t face_by_signs(const std::string& text) const;
    std::string face_signs(std::uint32_t f) const { return sign_string(faces_[f].signs, n_); }
    const std::vector<std::uint32_t>& faces_of_dim(int k) const { return by_dim_[k]; }
    const std::vector<std::uint32_t>& faces_of_type(std::uint32_t t) const { return by_type_[t]; }
    const std::vector<std::uint32_t>& faces_with_support(std::uint32_t x) const { return by_support_[x]; }
    /// #{w : Des(w) contained in t}, the orbit-stabilizer prediction.
    std::uint64_t predicted_type_count(std::uint32_t t) const;

    std::uint32_t product(std::uint32_t f, std::uint32_t g) const;
    /// w * F
    std::uint32_t act(std::uint32_t w, std::uint32_t f) const;
    SignVector act_signs(std::uint32_t w, const SignVector& s) const;
    /// Builds the dense product table (small arrangements only).
    bool has_product_table() const { return !product_table_.empty(); }

    // Flats. Flat 0 is V (empty mask), the last flat is the origin.
    std::uint32_t num_flats() const { return static_cast<std::uint32_t>(flats_.size()); }
    const Flat& flat(std::uint32_t x) const { return flats_[x]; }
    std::uint32_t bottom() const { return 0; }
    std::uint32_t top() const { return num_flats() - 1; }
    std::optional<std::uint32_t> flat_of_mask(std::uint64_t mask) const;
    /// X <= Y in the lattice (Y contained in X as subspaces).
    bool leq(std::uint32_t x, std::uint32_t y) const {
        return (flats_[x].mask & ~flats_[y].mask) == 0;
    }
    /// Smallest flat containing both subspaces: the largest flat below both.
    std::uint32_t span_flat(std::uint32_t x, std::uint32_t y) const;
    /// Intersection of the subspaces.
    std::uint32_t intersection_flat(std::uint32_t x, std::uint32_t y) const;
    long moebius(std::uint32_t x) const { return mu_bottom_[x]; }
    /// mu(X, Y) for every Y (zero unless X <= Y).
    std::vector<long> moebius_from(std::uint32_t x) const;
    Poly characteristic_polynomial() const;
    std::vector<long> whitney_numbers() const;  // sum of |mu| by codimension

    const std::vector<std::vector<std::uint32_t>>& flat_orbits() const { return orbits_; }
    std::uint32_t flat_act(std::uint32_t w, std::uint32_t x) const;
    /// Set-wise stabilizer N_X, sorted element indices.
    const std::vector<std::uint32_t>& stabilizer(std::uint32_t x) const;

    RestrictionStats restriction_stats(std::uint32_t x) const;

    // Matroid data.
    int rank_of(std::uint64_t mask) const;
    std::uint64_t closure(std::uint64_t mask) const;
    const std::vector<Circuit>& circuits() const;

private:
    void enumerate_faces();
    void build_flats();

    std::shared_ptr<const ReflectionGroup> group_;
    int n_ = 0;
    std::vector<Face> faces_;
    struct SignHash {
        std::size_t operator()(const SignVector& s) const noexcept {
            return std::hash<std::uint64_t>()(s.plus * 0x9E3779B97F4A7C15ull ^ s.minus);
        }
    };
    std::unordered_map<SignVector, std::uint32_t, SignHash> face_index_;
    std::vector<std::vector<std::uint32_t>> by_dim_;
    std::vector<std::vector<std::uint32_t>> by_type_;
    std::vector<std::vector<std::uint32_t>> by_support_;
    std::uint32_t base_chamber_ = 0;
    std::vector<std::uint32_t> product_table_;

    std::vector<Flat> flats_;
    std::unordered_map<std::uint64_t, std::uint32_t> flat_index_;
    std::vector<long> mu_bottom_;
    std::vector<std::vector<std::uint32_t>> orbits_;
    mutable std::map<std::uint32_t, std::vector<std::uint32_t>> stabilizers_;
    mutable std::unordered_map<std::uint64_t, int> rank_cache_;
    mutable std::vector<Circuit> circuits_;
    mutable bool circuits_ready_ = false;
};

}  // namespace ea
