#include "ea/algebras.hpp"

#include <algorithm>
#include <bit>

#include "ea/error.hpp"
#include "ea/intconv.hpp"

namespace ea {

GroupAlgElt gw_mul(const ReflectionGroup& g, const GroupAlgElt& a, const GroupAlgElt& b) {
    return convolve(a, b, g.order(), [&](std::uint32_t u, std::uint32_t v) { return g.mul(u, v); });
}

FaceAlgElt ff_mul(const Arrangement& arr, const FaceAlgElt& a, const FaceAlgElt& b) {
    return convolve(a, b, arr.num_faces(), [&](std::uint32_t f, std::uint32_t h) { return arr.product(f, h); });
}

GroupAlgElt group_one(const ReflectionGroup& g) { return GroupAlgElt::basis(g.identity()); }

FaceAlgElt face_one(const Arrangement& arr) { return FaceAlgElt::basis(arr.center()); }

FaceAlgElt act_on_faces(const Arrangement& arr, std::uint32_t w, const FaceAlgElt& a) {
    FaceAlgElt out;
    for (const auto& [f, c] : a) out.add(arr.act(w, f), c);
    return out;
}

GroupAlgElt descent_Y(const ReflectionGroup& g, std::uint32_t t) {
    GroupAlgElt out;
    for (std::uint32_t w = 0; w < g.order(); ++w)
        if ((g.descent_mask(w) & ~t) == 0) out.add(w, Rational(1));
    return out;
}

GroupAlgElt descent_Z(const ReflectionGroup& g, std::uint32_t t) {
    GroupAlgElt out;
    for (std::uint32_t w = 0; w < g.order(); ++w)
        if (g.descent_mask(w) == t) out.add(w, Rational(1));
    return out;
}

GroupAlgElt descent_y(const ReflectionGroup& g, int ell) {
    GroupAlgElt out;
    for (std::uint32_t w = 0; w < g.order(); ++w)
        if (g.des(w) <= ell) out.add(w, Rational(1));
    return out;
}

GroupAlgElt descent_z(const ReflectionGroup& g, int ell) {
    GroupAlgElt out;
    for (std::uint32_t w = 0; w < g.order(); ++w)
        if (g.des(w) == ell) out.add(w, Rational(1));
    return out;
}

FaceAlgElt zeta(const Arrangement& arr, std::uint32_t t) {
    FaceAlgElt out;
    for (auto f : arr.faces_of_type(t)) out.add(f, Rational(1));
    return out;
}

FaceAlgElt gamma(const Arrangement& arr, std::uint32_t t) {
    FaceAlgElt out;
    // Subsets u of t, sign (-1)^{|t \ u|}.
    for (std::uint32_t u = t;; u = (u - 1) & t) {
        Rational sign(std::popcount(t & ~u) % 2 ? -1 : 1);
        out += zeta(arr, u) * sign;
        if (u == 0) break;
    }
    return out;
}

bool is_invariant(const Arrangement& arr, const FaceAlgElt& a) {
    const std::uint32_t types = 1u << arr.rank();
    for (std::uint32_t t = 0; t < types; ++t) {
        const auto& fs = arr.faces_of_type(t);
        Rational first = a.coeff(fs.front());
        for (auto f : fs)
            if (a.coeff(f) != first) return false;
    }
    return true;
}

std::vector<Rational> zeta_coordinates(const Arrangement& arr, const FaceAlgElt& a) {
    if (!is_invariant(arr, a)) throw InvarianceError("face element is not constant on W-orbits of faces");
    std::vector<Rational> out;
    for (std::uint32_t t = 0; t < (1u << arr.rank()); ++t) out.push_back(a.coeff(arr.faces_of_type(t).front()));
    return out;
}

GroupAlgElt bidigare_phi(const Arrangement& arr, const FaceAlgElt& a) {
    auto coords = zeta_coordinates(arr, a);
    const ReflectionGroup& g = arr.group();
    GroupAlgElt out;
    for (std::uint32_t w = 0; w < g.order(); ++w) {
        Rational c;
        // Y_t contains w iff Des(w) is a subset of t.
        for (std::uint32_t t = 0; t < coords.size(); ++t)
            if ((g.descent_mask(w) & ~t) == 0) c += coords[t];
        out.add(w, c);
    }
    return out;
}

GroupAlgElt bidigare_phi_chambers(const Arrangement& arr, const FaceAlgElt& a) {
    if (!is_invariant(arr, a)) throw InvarianceError("face element is not constant on W-orbits of faces");
    const ReflectionGroup& g = arr.group();
    std::vector<std::uint32_t> element_of(arr.num_faces(), UINT32_MAX);
    for (std::uint32_t w = 0; w < g.order(); ++w) element_of[arr.act(w, arr.base_chamber())] = w;
    GroupAlgElt out;
    for (const auto& [f, c] : a) out.add(element_of[arr.product(f, arr.base_chamber())], c);
    return out;
}

Subgroup::Subgroup(const ReflectionGroup& g, std::vector<std::uint32_t> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(g.order(), false);
    for (auto w : elements_) {
        if (w >= g.order()) throw SubgroupError("subgroup: element index out of range");
        member_[w] = true;
    }
    if (elements_.empty() || !member_[g.identity()]) throw SubgroupError("subgroup: identity missing");
    for (auto u : elements_) {
        if (!member_[g.inverse(u)]) throw SubgroupError("subgroup: not closed under inverses");
        for (auto v : elements_)
            if (!member_[g.mul(u, v)]) throw SubgroupError("subgroup: not closed under products");
    }
    class_of_.assign(g.order(), UINT32_MAX);
    for (auto x : elements_) {
        if (class_of_[x] != UINT32_MAX) continue;
        auto cid = static_cast<std::uint32_t>(classes_.size());
        std::vector<std::uint32_t> cls;
        for (auto h : elements_) {
            std::uint32_t y = g.mul(g.mul(h, x), g.inverse(h));
            if (class_of_[y] == UINT32_MAX) {
                class_of_[y] = cid;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
    std::stable_sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a[0] < b[0];
    });
    for (std::uint32_t c = 0; c < classes_.size(); ++c)
        for (auto w : classes_[c]) class_of_[w] = c;
}

Subgroup Subgroup::whole(const ReflectionGroup& g) {
    std::vector<std::uint32_t> all(g.order());
    for (std::uint32_t w = 0; w < g.order(); ++w) all[w] = w;
    return Subgroup(g, std::move(all));
}

std::uint32_t Subgroup::class_of(std::uint32_t w) const {
    if (w >= class_of_.size() || class_of_[w] == UINT32_MAX) throw SubgroupError("element is not in the subgroup");
    return class_of_[w];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (values.empty()) values.resize(o.values.size());
    if (values.size() != o.values.size()) throw std::invalid_argument("class functions on different groups");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction class_function_of(const Subgroup& n, const std::vector<Rational>& per_element) {
    ClassFunction f;
    for (const auto& cls : n.classes()) f.values.push_back(per_element[cls.front()]);
    return f;
}

ClassFunction trivial_character(const Subgroup& n) {
    return ClassFunction{std::vector<Rational>(n.classes().size(), Rational(1))};
}

ClassFunction regular_character(const Subgroup& n) {
    ClassFunction f{std::vector<Rational>(n.classes().size(), Rational(0))};
    f.values[n.class_of(n.elements().front())] = Rational(static_cast<long>(n.order()));
    return f;
}

ClassFunction zero_character(const Subgroup& n) {
    return ClassFunction{std::vector<Rational>(n.classes().size(), Rational(0))};
}

Rational inner_product(const ReflectionGroup& g, const Subgroup& n, const ClassFunction& chi, const ClassFunction& psi) {
    Rational acc;
    for (auto w : n.elements()) acc += chi.values[n.class_of(w)] * psi.values[n.class_of(g.inverse(w))];
    return acc / Rational(static_cast<long>(n.order()));
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("class functions on different groups");
    ClassFunction out;
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
    return out;
}

ClassFunction right_mul_character(const ReflectionGroup& g, const GroupAlgElt& p) {
    if (gw_mul(g, p, p) != p) throw IdempotencyError("right_mul_character: element is not idempotent");
    // sum_h P[h^-1 w^-1 h] = |C(w)| * (sum of P over the class of w^-1)
    const auto& classes = g.conjugacy_classes();
    ClassFunction f;
    for (const auto& cls : classes) {
        std::uint32_t inv_class = g.class_of(g.inverse(cls.front()));
        Rational s;
        for (auto x : classes[inv_class]) s += p.coeff(x);
        f.values.push_back(s * Rational(static_cast<long>(g.order() / cls.size())));
    }
    return f;
}

ClassFunction induce_character(const ReflectionGroup& g, const Subgroup& n, const ClassFunction& chi) {
    if (chi.values.size() != n.classes().size()) throw std::invalid_argument("character does not live on the subgroup");
    ClassFunction f;
    for (const auto& cls : g.conjugacy_classes()) {
        std::uint32_t w = cls.front();
        Rational acc;
        for (std::uint32_t h = 0; h < g.order(); ++h) {
            std::uint32_t x = g.mul(g.mul(g.inverse(h), w), h);
            if (n.contains(x)) acc += chi.values[n.class_of(x)];
        }
        f.values.push_back(acc / Rational(static_cast<long>(n.order())));
    }
    return f;
}

std::vector<Rational> dense(const ReflectionGroup& g, const GroupAlgElt& a) {
    std::vector<Rational> out(g.order());
    for (const auto& [w, c] : a) out[w] = c;
    return out;
}

}  // namespace ea
