#pragma once

// Finite real reflection groups of types A, B, D, I2(m) and H3.
//
// Every group element is stored through its action on the positive roots:
// w(alpha_i) = c * alpha_{pi(i)} with c = +-1. Because hyperplanes and
// positive roots correspond one to one, this is also the hyperplane action
// of w. Elements are numbered by breadth-first closure from the simple
// generators (so by length), ties broken by the family payload.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ea {

enum class Family { A, B, D, I2, H3 };

struct GroupDescriptor {
    Family family = Family::A;
    int parameter = 1;  // n for A/B/D, m for I2, unused for H3

    /// "A4", "B3", "D4", "I2(7)", "H3".
    static GroupDescriptor parse(std::string_view spec);
    std::string to_string() const;

    int rank() const;
    bool coincidental() const { return family != Family::D; }
    /// Known group order, used to validate the closure.
    std::uint64_t expected_order() const;
    /// Degrees minus one.
    std::vector<int> exponents() const;
    std::optional<int> exponent_gap() const;

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Signed index of a positive root: +-(i + 1).
using SignedRoot = std::int8_t;
inline int root_index(SignedRoot e) { return (e < 0 ? -e : e) - 1; }
inline int root_sign(SignedRoot e) { return e < 0 ? -1 : 1; }
inline SignedRoot make_signed_root(int index, int sign) {
    return static_cast<SignedRoot>(sign < 0 ? -(index + 1) : index + 1);
}

/// Geometry of the positive roots. All answers are exact.
class RootModel {
public:
    virtual ~RootModel() = default;

    virtual int rank() const = 0;
    virtual int num_roots() const = 0;
    /// Positive root index of each simple root, in generator order.
    virtual const std::vector<int>& simple_roots() const = 0;
    /// Action of the simple reflection s on every positive root.
    virtual std::vector<SignedRoot> simple_reflection(int s) const = 0;
    /// Rank of the span of the roots in the mask.
    virtual int subset_rank(std::uint64_t mask) const = 0;
    /// For a minimally dependent set: the sign of each member's coefficient in
    /// the dependence, listed by increasing root index, lowest member positive.
    virtual std::vector<int> dependence_signs(std::uint64_t circuit) const = 0;
    /// Determinant of w restricted to the span of the roots in `mask`; the
    /// action must preserve that set of lines.
    virtual int det_on_span(std::uint64_t mask, const SignedRoot* action) const = 0;
    /// Simple generators occurring in the simple-root expansion of root j.
    virtual std::uint32_t root_support(int j) const = 0;
    /// Human-readable hyperplane name ("H12", "H1", "Hb12", "L3", ...).
    virtual std::string hyperplane_label(int j) const = 0;
    /// Root coordinates as strings (ambient basis for A/B/D, simple-root
    /// basis for H3, angle units of pi/(2m) for I2).
    virtual std::vector<std::string> root_coordinates(int j) const = 0;
};

std::unique_ptr<RootModel> make_root_model(const GroupDescriptor& d);

class ReflectionGroup {
public:
    explicit ReflectionGroup(const GroupDescriptor& d);

    const GroupDescriptor& descriptor() const { return desc_; }
    const RootModel& model() const { return *model_; }

    std::uint32_t order() const { return order_; }
    int rank() const { return rank_; }
    int num_hyperplanes() const { return nroots_; }
    std::uint64_t all_hyperplanes() const {
        return nroots_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nroots_) - 1;
    }

    std::uint32_t identity() const { return 0; }
    /// Element index of the i-th simple generator.
    std::uint32_t generator(int s) const { return generators_[s]; }
    std::uint32_t longest() const { return longest_; }

    std::uint32_t mul(std::uint32_t u, std::uint32_t v) const {
        return table_[static_cast<std::size_t>(u) * order_ + v];
    }
    std::uint32_t inverse(std::uint32_t w) const { return inverse_[w]; }
    /// w * s_i
    std::uint32_t right_gen(std::uint32_t w, int s) const { return right_gen_[w * rank_ + s]; }
    /// w = parent(w) * s_{parent_gen(w)}; identity has no parent.
    std::uint32_t parent(std::uint32_t w) const { return parent_[w]; }
    int parent_gen(std::uint32_t w) const { return parent_gen_[w]; }

    const SignedRoot* action(std::uint32_t w) const { return &action_[static_cast<std::size_t>(w) * nroots_]; }
    int hyperplane_image(std::uint32_t w, int i) const { return root_index(action(w)[i]); }
    int hyperplane_sign(std::uint32_t w, int i) const { return root_sign(action(w)[i]); }
    /// Image of a set of hyperplanes.
    std::uint64_t act_on_mask(std::uint32_t w, std::uint64_t mask) const;

    int length(std::uint32_t w) const { return length_[w]; }
    std::uint32_t descent_mask(std::uint32_t w) const { return descents_[w]; }
    int des(std::uint32_t w) const;

    const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const { return classes_; }
    std::uint32_t class_of(std::uint32_t w) const { return class_of_[w]; }

    std::string label(std::uint32_t w) const { return labels_[w]; }
    /// Element with the given action, if any.
    std::optional<std::uint32_t> find(const std::vector<SignedRoot>& action) const;

private:
    GroupDescriptor desc_;
    std::unique_ptr<RootModel> model_;
    int rank_ = 0;
    int nroots_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> generators_;
    std::uint32_t longest_ = 0;
    std::vector<SignedRoot> action_;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> right_gen_;
    std::vector<std::uint32_t> parent_;
    std::vector<int> parent_gen_;
    std::vector<int> length_;
    std::vector<std::uint32_t> descents_;
    std::vector<std::vector<std::uint32_t>> classes_;
    std::vector<std::uint32_t> class_of_;
    std::vector<std::string> labels_;
};

/// Elements w with Des(w) contained in the generator mask t.
std::vector<std::uint32_t> elements_with_descents_in(const ReflectionGroup& g, std::uint32_t t);

}  // namespace ea
