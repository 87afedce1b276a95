#include "ea/vg.hpp"

#include <algorithm>
#include <bit>

#include "ea/error.hpp"

namespace ea {

VGElement VGElement::monomial(VGMonomial m, const Rational& c) {
    VGElement x;
    x.add(m, c);
    return x;
}

void VGElement::add(VGMonomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

Rational VGElement::coeff(VGMonomial m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

VGElement& VGElement::operator+=(const VGElement& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

VGElement& VGElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [m, c] : terms) c *= s;
    return *this;
}

HyperplaneOrder parse_hyperplane_order(const std::string& text) {
    if (text == "default") return HyperplaneOrder::Default;
    if (text == "alt") return HyperplaneOrder::Reversed;
    throw std::invalid_argument("unknown hyperplane order '" + text + "' (expected default or alt)");
}

VGRing::VGRing(const Arrangement& arr, HyperplaneOrder order, std::uint64_t ground)
    : arr_(arr), ground_(ground & arr.group().all_hyperplanes()) {
    const int n = arr.num_hyperplanes();
    for (int i = 0; i < n; ++i)
        if (ground_ >> i & 1) ordering_.push_back(i);
    if (order == HyperplaneOrder::Reversed) std::reverse(ordering_.begin(), ordering_.end());
    position_.assign(n, -1);
    for (std::size_t p = 0; p < ordering_.size(); ++p) position_[ordering_[p]] = static_cast<int>(p);

    for (const auto& c : arr.circuits()) {
        if ((c.members & ~ground_) != 0) continue;
        int top = -1;
        for (std::uint64_t m = c.members; m; m &= m - 1) {
            int i = std::countr_zero(m);
            if (top < 0 || position_[i] > position_[top]) top = i;
        }
        relations_.push_back({c.members & ~(std::uint64_t{1} << top), top, c.positive});
    }

    const int size = std::popcount(ground_);
    step_limit_ = size >= 40 ? std::uint64_t{1} << 62 : static_cast<std::uint64_t>(size) << size;

    // Depth-first over nbc sets; every subset of an nbc set is nbc.
    nbc_by_size_.assign(arr.rank() + 1, {});
    std::vector<std::pair<VGMonomial, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [m, next] = stack.back();
        stack.pop_back();
        int k = std::popcount(m);
        nbc_by_size_[k].push_back(m);
        nbc_by_flat_[flat_of(m)].push_back(m);
        if (k == arr.rank()) continue;
        for (int i = next; i < n; ++i) {
            VGMonomial m2 = m | (std::uint64_t{1} << i);
            if ((ground_ >> i & 1) && is_nbc(m2)) stack.push_back({m2, i + 1});
        }
    }
    for (auto& v : nbc_by_size_) std::sort(v.begin(), v.end());
    for (auto& [x, v] : nbc_by_flat_) std::sort(v.begin(), v.end());
}

bool VGRing::is_nbc(VGMonomial m) const {
    if ((m & ~ground_) != 0) return false;
    for (const auto& r : relations_)
        if ((r.broken & ~m) == 0) return false;
    return true;
}

const std::vector<VGMonomial>& VGRing::nbc_of_flat(std::uint32_t x) const {
    static const std::vector<VGMonomial> empty;
    auto it = nbc_by_flat_.find(x);
    return it == nbc_by_flat_.end() ? empty : it->second;
}

std::uint32_t VGRing::flat_of(VGMonomial m) const {
    auto x = arr_.flat_of_mask(arr_.closure(m));
    if (!x) throw InvariantError("closure of a hyperplane set is not a flat");
    return *x;
}

const VGRing::Relation* VGRing::find_relation(VGMonomial m, std::mt19937_64* rng) const {
    if (!rng) {
        for (const auto& r : relations_)
            if ((r.broken & ~m) == 0) return &r;
        return nullptr;
    }
    std::vector<const Relation*> hits;
    for (const auto& r : relations_)
        if ((r.broken & ~m) == 0) hits.push_back(&r);
    if (hits.empty()) return nullptr;
    return hits[std::uniform_int_distribution<std::size_t>(0, hits.size() - 1)(*rng)];
}

// From sum_{i in C} c(i) e_{C \ i} = 0 with c = +1 on C- and -1 on C+:
// e_M = -c(top) sum_{i in B} c(i) e_{(M \ i) + top}, and e_M = 0 when top is in M.
void VGRing::rewrite_step(VGMonomial m, const Relation& rel, const Rational& c, VGElement& out) const {
    const std::uint64_t top_bit = std::uint64_t{1} << rel.top;
    if (m & top_bit) return;
    auto sign = [&](int i) { return (rel.positive >> i & 1) ? -1 : 1; };
    const int lead = -sign(rel.top);
    for (std::uint64_t b = rel.broken; b; b &= b - 1) {
        int i = std::countr_zero(b);
        out.add((m & ~(std::uint64_t{1} << i)) | top_bit, c * Rational(lead * sign(i)));
    }
}

const VGElement& VGRing::normal_form(VGMonomial m) const {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    if ((m & ~ground_) != 0) throw std::invalid_argument("monomial uses hyperplanes outside the ground set");
    VGElement out;
    const Relation* rel = find_relation(m, nullptr);
    if (!rel) {
        out.add(m, Rational(1));
    } else {
        // Each monomial is rewritten at most once, so the total work is
        // bounded; a monomial met again while still open means a cycle.
        if (++rewrites_ > step_limit_) throw RewritingError("rewriting exceeded its step bound");
        if (!open_.insert(m).second) throw RewritingError("rewriting cycle through a monomial");
        VGElement step;
        rewrite_step(m, *rel, Rational(1), step);
        for (const auto& [m2, c] : step.terms) out += normal_form(m2) * c;
        open_.erase(m);
    }
    return memo_.emplace(m, std::move(out)).first->second;
}

VGElement VGRing::normal_form(const VGElement& x) const {
    VGElement out;
    for (const auto& [m, c] : x.terms) out += normal_form(m) * c;
    return out;
}

VGElement VGRing::normal_form_random(const VGElement& x, std::mt19937_64& rng) const {
    VGElement cur = x;
    std::uint64_t steps = 0;
    for (;;) {
        std::vector<std::pair<VGMonomial, const Relation*>> pending;
        for (const auto& [m, c] : cur.terms)
            if (const Relation* r = find_relation(m, &rng)) pending.push_back({m, r});
        if (pending.empty()) return cur;
        auto [m, rel] = pending[std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng)];
        Rational c = cur.coeff(m);
        cur.terms.erase(m);
        rewrite_step(m, *rel, c, cur);
        if (++steps > step_limit_) throw RewritingError("rewriting exceeded its step bound");
    }
}

VGElement VGRing::mul(const VGElement& a, const VGElement& b) const {
    VGElement raw;
    for (const auto& [m1, c1] : a.terms)
        for (const auto& [m2, c2] : b.terms)
            if ((m1 & m2) == 0) raw.add(m1 | m2, c1 * c2);
    return normal_form(raw);
}

VGElement VGRing::act(std::uint32_t w, const VGElement& x) const {
    const ReflectionGroup& g = arr_.group();
    VGElement raw;
    for (const auto& [m, c] : x.terms) {
        VGMonomial image = g.act_on_mask(w, m);
        if ((image & ~ground_) != 0) throw StabilizerError("element does not preserve the ground set");
        int sign = 1;
        for (std::uint64_t b = m; b; b &= b - 1) sign *= g.hyperplane_sign(w, std::countr_zero(b));
        raw.add(image, c * Rational(sign));
    }
    return normal_form(raw);
}

Rational VGRing::trace(std::uint32_t w, const std::vector<VGMonomial>& basis) const {
    const ReflectionGroup& g = arr_.group();
    Rational tr;
    for (auto m : basis) {
        VGMonomial image = g.act_on_mask(w, m);
        if ((image & ~ground_) != 0) throw StabilizerError("element does not preserve the ground set");
        int sign = 1;
        for (std::uint64_t b = m; b; b &= b - 1) sign *= g.hyperplane_sign(w, std::countr_zero(b));
        tr += normal_form(image).coeff(m) * Rational(sign);
    }
    return tr;
}

ClassFunction VGRing::degree_character(int k) const {
    if (ground_ != arr_.group().all_hyperplanes())
        throw std::invalid_argument("degree_character on W needs the full arrangement");
    ClassFunction f;
    for (const auto& cls : arr_.group().conjugacy_classes()) f.values.push_back(trace(cls.front(), nbc_by_size_[k]));
    return f;
}

ClassFunction VGRing::degree_character(int k, const Subgroup& n) const {
    ClassFunction f;
    for (const auto& cls : n.classes()) f.values.push_back(trace(cls.front(), nbc_by_size_[k]));
    return f;
}

ClassFunction VGRing::flat_character(std::uint32_t x, const Subgroup& nx) const {
    ClassFunction f;
    for (const auto& cls : nx.classes()) f.values.push_back(trace(cls.front(), nbc_of_flat(x)));
    return f;
}

ClassFunction VGRing::orbit_character(std::uint32_t x) const {
    const ReflectionGroup& g = arr_.group();
    Subgroup nx(g, arr_.stabilizer(x));
    return induce_character(g, nx, flat_character(x, nx));
}

std::vector<int> VGRing::indices(VGMonomial m) const {
    std::vector<int> out;
    for (int i : ordering_)
        if (m >> i & 1) out.push_back(i);
    return out;
}

}  // namespace ea
