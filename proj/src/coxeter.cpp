#include "ea/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ea/error.hpp"
#include "ea/exactnum.hpp"
#include "ea/linalg.hpp"

namespace ea {

namespace {

int sign_of(const Rational& x) { return x.sign(); }
int sign_of(const QuadExt& x) { return quad_sign(x); }

std::string coord_string(const Rational& x) { return x.to_string(); }
std::string coord_string(const QuadExt& x) {
    if (x.b().is_zero()) return x.a().to_string();
    return x.to_string();
}

// Roots given by explicit coordinates together with the bilinear form.
template <class K>
class LinearModel final : public RootModel {
public:
    LinearModel(std::vector<std::vector<K>> roots, Matrix<K> gram, std::vector<int> simple,
                std::vector<std::string> labels)
        : roots_(std::move(roots)), gram_(std::move(gram)), simple_(std::move(simple)), labels_(std::move(labels)) {
        const int n = num_roots();
        form_.assign(static_cast<std::size_t>(n) * n, K());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) form_[idx(i, j)] = bilinear(roots_[i], roots_[j]);
        // Coefficients in the simple-root basis via the Gram matrix of the simple roots.
        const int r = rank();
        Matrix<K> gs(r, r), rhs(r, n);
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b) gs(a, b) = form_[idx(simple_[a], simple_[b])];
            for (int j = 0; j < n; ++j) rhs(a, j) = form_[idx(simple_[a], j)];
        }
        Matrix<K> coeff = gs.solve(rhs);
        supports_.assign(n, 0);
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < r; ++a) {
                int sg = sign_of(coeff(a, j));
                if (sg < 0) throw InvariantError("root model: root is not positive");
                if (sg > 0) supports_[j] |= 1u << a;
            }
    }

    int rank() const override { return static_cast<int>(simple_.size()); }
    int num_roots() const override { return static_cast<int>(roots_.size()); }
    const std::vector<int>& simple_roots() const override { return simple_; }

    std::vector<SignedRoot> simple_reflection(int s) const override {
        const int a = simple_[s];
        const int n = num_roots();
        std::vector<SignedRoot> out(n);
        K two_over = K(2) / form_[idx(a, a)];
        for (int j = 0; j < n; ++j) {
            K c = form_[idx(j, a)] * two_over;
            std::vector<K> v = roots_[j];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * roots_[a][k];
            out[j] = locate(v);
        }
        return out;
    }

    int subset_rank(std::uint64_t mask) const override {
        if (mask == 0) return 0;
        return static_cast<int>(columns(mask).rank());
    }

    std::vector<int> dependence_signs(std::uint64_t circuit) const override {
        auto kernel = columns(circuit).nullspace();
        if (kernel.size() != 1) throw InvariantError("root model: subset is not a circuit");
        std::vector<int> signs;
        for (const auto& c : kernel[0]) signs.push_back(sign_of(c));
        if (signs.front() < 0)
            for (auto& s : signs) s = -s;
        return signs;
    }

    int det_on_span(std::uint64_t mask, const SignedRoot* action) const override {
        std::vector<int> basis;
        std::uint64_t chosen = 0;
        int have = 0;
        for (int j = 0; j < num_roots(); ++j) {
            if (!(mask >> j & 1)) continue;
            if (subset_rank(chosen | (std::uint64_t{1} << j)) > have) {
                chosen |= std::uint64_t{1} << j;
                basis.push_back(j);
                ++have;
            }
        }
        const std::size_t k = basis.size();
        if (k == 0) return 1;
        // det(w|span) = det(<b, w b'>) / det(<b, b'>)
        Matrix<K> g(k, k), p(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                g(a, b) = form_[idx(basis[a], basis[b])];
                SignedRoot img = action[basis[b]];
                K v = form_[idx(basis[a], root_index(img))];
                p(a, b) = root_sign(img) < 0 ? -v : v;
            }
        K det = p.determinant() / g.determinant();
        if (det == K(1)) return 1;
        if (det == K(-1)) return -1;
        throw StabilizerError("det_on_span: element does not preserve the span");
    }

    std::uint32_t root_support(int j) const override { return supports_[j]; }
    std::string hyperplane_label(int j) const override { return labels_[j]; }

    std::vector<std::string> root_coordinates(int j) const override {
        std::vector<std::string> out;
        for (const auto& c : roots_[j]) out.push_back(coord_string(c));
        return out;
    }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * roots_.size() + j; }

    K bilinear(const std::vector<K>& x, const std::vector<K>& y) const {
        K acc;
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (x[a].is_zero()) continue;
            for (std::size_t b = 0; b < y.size(); ++b)
                if (!gram_(a, b).is_zero()) acc += x[a] * gram_(a, b) * y[b];
        }
        return acc;
    }

    SignedRoot locate(const std::vector<K>& v) const {
        for (int j = 0; j < num_roots(); ++j) {
            if (roots_[j] == v) return make_signed_root(j, 1);
            bool neg = true;
            for (std::size_t k = 0; k < v.size() && neg; ++k) neg = roots_[j][k] == -v[k];
            if (neg) return make_signed_root(j, -1);
        }
        throw InvariantError("root model: reflection does not permute the roots");
    }

    Matrix<K> columns(std::uint64_t mask) const {
        std::vector<std::vector<K>> cols;
        for (int j = 0; j < num_roots(); ++j)
            if (mask >> j & 1) cols.push_back(roots_[j]);
        return Matrix<K>::from_columns(cols, roots_[0].size());
    }

    std::vector<std::vector<K>> roots_;
    Matrix<K> gram_;
    std::vector<int> simple_;
    std::vector<std::string> labels_;
    std::vector<K> form_;
    std::vector<std::uint32_t> supports_;
};

// Dihedral arrangement: line k sits at angle 2k in units of pi/(2m); its
// positive normal points at angle m (k = 0) or 2k - m (k >= 1), the side of
// the chamber between lines 0 and 1.
class DihedralModel final : public RootModel {
public:
    explicit DihedralModel(int m) : m_(m), simple_{0, 1} {
        angle_of_.resize(m);
        root_at_.assign(4 * m, 0);
        for (int k = 0; k < m; ++k) {
            int a = k == 0 ? m : 2 * k - m;
            a = ((a % (4 * m)) + 4 * m) % (4 * m);
            angle_of_[k] = a;
            root_at_[a] = make_signed_root(k, 1);
            root_at_[(a + 2 * m) % (4 * m)] = make_signed_root(k, -1);
        }
    }

    int rank() const override { return 2; }
    int num_roots() const override { return m_; }
    const std::vector<int>& simple_roots() const override { return simple_; }

    std::vector<SignedRoot> simple_reflection(int s) const override { return apply(-1, s); }

    /// Action of psi -> eps * psi + 4j on the normals.
    std::vector<SignedRoot> apply(int eps, int j) const {
        std::vector<SignedRoot> out(m_);
        for (int k = 0; k < m_; ++k) {
            long a = static_cast<long>(eps) * angle_of_[k] + 4L * j;
            long mod = 4L * m_;
            a = ((a % mod) + mod) % mod;
            out[k] = root_at_[a];
        }
        return out;
    }

    int subset_rank(std::uint64_t mask) const override { return std::min(2, std::popcount(mask)); }

    std::vector<int> dependence_signs(std::uint64_t circuit) const override {
        if (std::popcount(circuit) != 3) throw InvariantError("dihedral: circuits have three lines");
        std::vector<int> members;
        for (int k = 0; k < m_; ++k)
            if (circuit >> k & 1) members.push_back(k);
        // Normal angles lie in (-m, m]; the middle one is a positive
        // combination of the outer two.
        auto centered = [&](int k) { return k == 0 ? m_ : 2 * k - m_; };
        std::vector<int> by_angle = members;
        std::sort(by_angle.begin(), by_angle.end(), [&](int a, int b) { return centered(a) < centered(b); });
        std::vector<int> signs;
        for (int k : members) signs.push_back(k == by_angle[1] ? -1 : 1);
        if (signs.front() < 0)
            for (auto& s : signs) s = -s;
        return signs;
    }

    int det_on_span(std::uint64_t mask, const SignedRoot* action) const override {
        int rk = subset_rank(mask);
        if (rk == 0) return 1;
        if (rk == 1) {
            int i = std::countr_zero(mask);
            if (!(std::uint64_t{1} << root_index(action[i]) & mask))
                throw StabilizerError("det_on_span: element does not preserve the span");
            return root_sign(action[i]);
        }
        int neg = 0;
        for (int k = 0; k < m_; ++k) neg += action[k] < 0;
        return neg % 2 ? -1 : 1;
    }

    std::uint32_t root_support(int j) const override { return j == 0 ? 1u : j == 1 ? 2u : 3u; }
    std::string hyperplane_label(int j) const override { return "L" + std::to_string(j); }
    std::vector<std::string> root_coordinates(int j) const override { return {std::to_string(angle_of_[j])}; }

private:
    int m_;
    std::vector<int> simple_;
    std::vector<int> angle_of_;
    std::vector<SignedRoot> root_at_;
};

std::string pair_label(const char* prefix, int i, int j) {
    if (i < 10 && j < 10) return prefix + std::to_string(i) + std::to_string(j);
    return prefix + std::to_string(i) + "," + std::to_string(j);
}

std::unique_ptr<RootModel> classical_model(Family f, int n) {
    using V = std::vector<Rational>;
    const int dim = f == Family::A ? n + 1 : n;
    std::vector<V> roots;
    std::vector<std::string> labels;
    auto unit = [&](int i, int j, long si, long sj) {
        V v(dim);
        v[i - 1] = Rational(si);
        if (j > 0) v[j - 1] = Rational(sj);
        return v;
    };
    for (int j = 2 - (f == Family::B ? 1 : 0); j <= dim; ++j) {
        for (int i = 1; i < j; ++i) {
            roots.push_back(unit(i, j, 1, -1));
            labels.push_back(pair_label("H", i, j));
        }
        if (f == Family::A) continue;
        for (int i = 1; i < j; ++i) {
            roots.push_back(unit(i, j, 1, 1));
            labels.push_back(pair_label("Hb", i, j));
        }
        if (f == Family::B) {
            roots.push_back(unit(j, 0, 1, 0));
            labels.push_back("H" + std::to_string(j));
        }
    }
    auto find_root = [&](const V& v) {
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (roots[k] == v) return static_cast<int>(k);
        throw InvariantError("classical model: missing simple root");
    };
    std::vector<int> simple;
    for (int i = 1; i < dim; ++i) {
        if (f == Family::D && i == dim - 1) break;
        simple.push_back(find_root(unit(i, i + 1, 1, -1)));
    }
    if (f == Family::B) simple.push_back(find_root(unit(n, 0, 1, 0)));
    if (f == Family::D) {
        simple.push_back(find_root(unit(n - 1, n, 1, -1)));
        simple.push_back(find_root(unit(n - 1, n, 1, 1)));
    }
    return std::make_unique<LinearModel<Rational>>(std::move(roots), Matrix<Rational>::identity(dim), std::move(simple),
                                                   std::move(labels));
}

std::unique_ptr<RootModel> h3_model() {
    // Simple-root basis; <a1,a2> = -cos(pi/5), <a2,a3> = -1/2.
    Matrix<QuadExt> gram = Matrix<QuadExt>::identity(3);
    gram(0, 1) = gram(1, 0) = QuadExt(Rational(-1, 4), Rational(-1, 4));
    gram(1, 2) = gram(2, 1) = QuadExt(Rational(-1, 2));
    using V = std::vector<QuadExt>;
    std::vector<V> roots;
    for (int i = 0; i < 3; ++i) {
        V v(3);
        v[i] = QuadExt(1);
        roots.push_back(v);
    }
    auto form = [&](const V& x, const V& y) {
        QuadExt acc;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) acc += x[a] * gram(a, b) * y[b];
        return acc;
    };
    auto positive = [](const V& v) {
        for (const auto& c : v)
            if (quad_sign(c) < 0) return false;
        return true;
    };
    for (std::size_t head = 0; head < roots.size(); ++head) {
        for (int s = 0; s < 3; ++s) {
            V v = roots[head];
            QuadExt c = QuadExt(2) * form(v, roots[s]);
            for (int k = 0; k < 3; ++k) v[k] -= c * roots[s][k];
            if (!positive(v) || std::find(roots.begin(), roots.end(), v) != roots.end()) continue;
            roots.push_back(v);
        }
    }
    if (roots.size() != 15) throw InvariantError("H3 model: expected 15 positive roots");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < roots.size(); ++k) labels.push_back("H" + std::to_string(k + 1));
    return std::make_unique<LinearModel<QuadExt>>(std::move(roots), std::move(gram), std::vector<int>{0, 1, 2},
                                                  std::move(labels));
}

using Payload = std::vector<int>;

// Signed one-line notation: p[i] = +-k means w(e_{i+1}) = +-e_k.
Payload compose_signed(const Payload& w, const Payload& s) {
    Payload out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        int k = s[i] < 0 ? -s[i] : s[i];
        out[i] = s[i] < 0 ? -w[k - 1] : w[k - 1];
    }
    return out;
}

Payload generator_payload(const GroupDescriptor& d, int s) {
    const int n = d.parameter;
    switch (d.family) {
        case Family::A:
        case Family::B:
        case Family::D: {
            int dim = d.family == Family::A ? n + 1 : n;
            Payload p(dim);
            for (int i = 0; i < dim; ++i) p[i] = i + 1;
            bool last = s == d.rank() - 1;
            if (d.family == Family::B && last) {
                p[n - 1] = -n;
            } else if (d.family == Family::D && last) {
                p[n - 2] = -n;
                p[n - 1] = -(n - 1);
            } else {
                std::swap(p[s], p[s + 1]);
            }
            return p;
        }
        case Family::I2:
            return {-1, s};
        case Family::H3:
            return {s + 1};
    }
    return {};
}

Payload compose_payload(const GroupDescriptor& d, const Payload& w, const Payload& s) {
    switch (d.family) {
        case Family::I2: {
            int m = d.parameter;
            int j = ((w[1] + w[0] * s[1]) % m + m) % m;
            return {w[0] * s[0], j};
        }
        case Family::H3: {
            Payload out = w;
            out.insert(out.end(), s.begin(), s.end());
            return out;
        }
        default:
            return compose_signed(w, s);
    }
}

std::string cycle_label(const Payload& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i) + 1) continue;
        std::string cyc = "(";
        std::size_t j = i;
        bool wide = p.size() >= 10;
        while (!seen[j]) {
            seen[j] = true;
            if (wide && cyc.size() > 1) cyc += ",";
            cyc += std::to_string(j + 1);
            j = static_cast<std::size_t>(p[j] - 1);
        }
        out += cyc + ")";
    }
    return out.empty() ? "e" : out;
}

std::string payload_label(const GroupDescriptor& d, const Payload& p) {
    switch (d.family) {
        case Family::A:
            return cycle_label(p);
        case Family::B:
        case Family::D: {
            std::string out = "[";
            for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
            return out + "]";
        }
        case Family::I2:
            return (p[0] > 0 ? "rot" : "ref") + std::to_string(p[1]);
        case Family::H3: {
            if (p.empty()) return "e";
            std::string out;
            for (int s : p) out += "s" + std::to_string(s);
            return out;
        }
    }
    return {};
}

std::string action_key(const SignedRoot* a, int n) { return std::string(reinterpret_cast<const char*>(a), n); }

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view spec) {
    auto fail = [&]() -> GroupDescriptor { throw DescriptorError("invalid group spec '" + std::string(spec) + "'"); };
    GroupDescriptor d;
    if (spec == "H3") {
        d.family = Family::H3;
        d.parameter = 3;
        return d;
    }
    std::string_view digits;
    if (spec.starts_with("I2(") && spec.ends_with(")")) {
        d.family = Family::I2;
        digits = spec.substr(3, spec.size() - 4);
    } else if (!spec.empty() && (spec[0] == 'A' || spec[0] == 'B' || spec[0] == 'D')) {
        d.family = spec[0] == 'A' ? Family::A : spec[0] == 'B' ? Family::B : Family::D;
        digits = spec.substr(1);
    } else {
        return fail();
    }
    if (digits.empty() || digits.size() > 4) return fail();
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
    d.parameter = std::stoi(std::string(digits));
    int minimum = d.family == Family::A ? 1 : d.family == Family::B ? 2 : d.family == Family::D ? 4 : 3;
    if (d.parameter < minimum) throw DescriptorError("parameter out of range in '" + std::string(spec) + "'");
    return d;
}

std::string GroupDescriptor::to_string() const {
    switch (family) {
        case Family::A:
            return "A" + std::to_string(parameter);
        case Family::B:
            return "B" + std::to_string(parameter);
        case Family::D:
            return "D" + std::to_string(parameter);
        case Family::I2:
            return "I2(" + std::to_string(parameter) + ")";
        case Family::H3:
            return "H3";
    }
    return {};
}

int GroupDescriptor::rank() const {
    switch (family) {
        case Family::I2:
            return 2;
        case Family::H3:
            return 3;
        default:
            return parameter;
    }
}

std::uint64_t GroupDescriptor::expected_order() const {
    auto fact = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    switch (family) {
        case Family::A:
            return fact(parameter + 1);
        case Family::B:
            return (std::uint64_t{1} << parameter) * fact(parameter);
        case Family::D:
            return (std::uint64_t{1} << (parameter - 1)) * fact(parameter);
        case Family::I2:
            return 2 * static_cast<std::uint64_t>(parameter);
        case Family::H3:
            return 120;
    }
    return 0;
}

std::vector<int> GroupDescriptor::exponents() const {
    std::vector<int> e;
    switch (family) {
        case Family::A:
            for (int i = 1; i <= parameter; ++i) e.push_back(i);
            break;
        case Family::B:
            for (int i = 1; i <= parameter; ++i) e.push_back(2 * i - 1);
            break;
        case Family::D:
            for (int i = 1; i < parameter; ++i) e.push_back(2 * i - 1);
            e.push_back(parameter - 1);
            std::sort(e.begin(), e.end());
            break;
        case Family::I2:
            e = {1, parameter - 1};
            break;
        case Family::H3:
            e = {1, 5, 9};
            break;
    }
    return e;
}

std::optional<int> GroupDescriptor::exponent_gap() const {
    switch (family) {
        case Family::A:
            return 1;
        case Family::B:
            return 2;
        case Family::I2:
            return parameter - 2;
        case Family::H3:
            return 4;
        case Family::D:
            return std::nullopt;
    }
    return std::nullopt;
}

std::unique_ptr<RootModel> make_root_model(const GroupDescriptor& d) {
    switch (d.family) {
        case Family::I2:
            return std::make_unique<DihedralModel>(d.parameter);
        case Family::H3:
            return h3_model();
        default:
            return classical_model(d.family, d.parameter);
    }
}

ReflectionGroup::ReflectionGroup(const GroupDescriptor& d) : desc_(d) {
    if (d.expected_order() > 65535) throw DescriptorError("group " + d.to_string() + " is too large");
    model_ = make_root_model(d);
    rank_ = model_->rank();
    nroots_ = model_->num_roots();
    if (nroots_ > 64) throw DescriptorError("group " + d.to_string() + " has more than 64 reflections");
    const int n = nroots_;

    std::vector<std::vector<SignedRoot>> gens;
    for (int s = 0; s < rank_; ++s) gens.push_back(model_->simple_reflection(s));
    std::vector<Payload> gen_payloads;
    for (int s = 0; s < rank_; ++s) gen_payloads.push_back(generator_payload(d, s));

    auto compose = [&](const SignedRoot* w, const std::vector<SignedRoot>& s) {
        std::vector<SignedRoot> out(n);
        for (int i = 0; i < n; ++i) {
            SignedRoot t = s[i];
            SignedRoot img = w[root_index(t)];
            out[i] = root_sign(t) < 0 ? static_cast<SignedRoot>(-img) : img;
        }
        return out;
    };

    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<Payload> payloads;
    std::vector<SignedRoot> id(n);
    for (int i = 0; i < n; ++i) id[i] = make_signed_root(i, 1);
    action_ = id;
    index.emplace(action_key(id.data(), n), 0);
    payloads.push_back(d.family == Family::H3 ? Payload{} : [&] {
        if (d.family == Family::I2) return Payload{1, 0};
        Payload p(gen_payloads[0].size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
        return p;
    }());
    parent_.push_back(0);
    parent_gen_.push_back(-1);
    length_.push_back(0);

    struct Candidate {
        std::vector<SignedRoot> action;
        Payload payload;
        std::vector<int> key;
        std::uint32_t parent;
        int gen;
    };
    std::uint32_t level_begin = 0, level_end = 1;
    int level = 0;
    while (level_begin < level_end) {
        std::vector<Candidate> next;
        std::unordered_map<std::string, std::size_t> pending;
        for (std::uint32_t w = level_begin; w < level_end; ++w) {
            for (int s = 0; s < rank_; ++s) {
                auto a = compose(&action_[static_cast<std::size_t>(w) * n], gens[s]);
                std::string k = action_key(a.data(), n);
                if (index.count(k) || pending.count(k)) continue;
                pending.emplace(k, next.size());
                Candidate c{std::move(a), compose_payload(d, payloads[w], gen_payloads[s]), {}, w, s};
                if (d.family == Family::H3) {
                    c.key.assign(c.action.begin(), c.action.end());
                } else if (d.family == Family::I2) {
                    c.key = {c.payload[0] > 0 ? 0 : 1, c.payload[1]};
                } else {
                    c.key = c.payload;
                }
                next.push_back(std::move(c));
            }
        }
        std::stable_sort(next.begin(), next.end(), [](const Candidate& x, const Candidate& y) { return x.key < y.key; });
        ++level;
        for (auto& c : next) {
            auto id_new = static_cast<std::uint32_t>(payloads.size());
            index.emplace(action_key(c.action.data(), n), id_new);
            action_.insert(action_.end(), c.action.begin(), c.action.end());
            payloads.push_back(std::move(c.payload));
            parent_.push_back(c.parent);
            parent_gen_.push_back(c.gen);
            length_.push_back(level);
        }
        level_begin = level_end;
        level_end = static_cast<std::uint32_t>(payloads.size());
    }
    order_ = static_cast<std::uint32_t>(payloads.size());
    if (order_ != d.expected_order())
        throw InvariantError("group " + d.to_string() + ": closure has " + std::to_string(order_) + " elements");

    right_gen_.resize(static_cast<std::size_t>(order_) * rank_);
    for (std::uint32_t w = 0; w < order_; ++w)
        for (int s = 0; s < rank_; ++s) {
            auto a = compose(action(w), gens[s]);
            right_gen_[w * rank_ + s] = index.at(action_key(a.data(), n));
        }
    for (int s = 0; s < rank_; ++s) generators_.push_back(right_gen_[s]);

    table_.resize(static_cast<std::size_t>(order_) * order_);
    for (std::uint32_t u = 0; u < order_; ++u) table_[static_cast<std::size_t>(u) * order_] = static_cast<std::uint16_t>(u);
    for (std::uint32_t v = 1; v < order_; ++v) {
        std::uint32_t p = parent_[v];
        int s = parent_gen_[v];
        for (std::uint32_t u = 0; u < order_; ++u) {
            std::size_t row = static_cast<std::size_t>(u) * order_;
            table_[row + v] = static_cast<std::uint16_t>(right_gen_[table_[row + p] * rank_ + s]);
        }
    }

    inverse_.resize(order_);
    for (std::uint32_t w = 0; w < order_; ++w) {
        std::vector<SignedRoot> inv(n);
        const SignedRoot* a = action(w);
        for (int i = 0; i < n; ++i) inv[root_index(a[i])] = make_signed_root(i, root_sign(a[i]));
        inverse_[w] = index.at(action_key(inv.data(), n));
    }

    descents_.resize(order_);
    const auto& simple = model_->simple_roots();
    for (std::uint32_t w = 0; w < order_; ++w) {
        int neg = 0;
        for (int i = 0; i < n; ++i) neg += action(w)[i] < 0;
        if (neg != length_[w]) throw InvariantError("group: BFS level disagrees with inversion count");
        std::uint32_t mask = 0;
        for (int s = 0; s < rank_; ++s)
            if (action(w)[simple[s]] < 0) mask |= 1u << s;
        descents_[w] = mask;
        if (length_[w] == n) longest_ = w;
    }

    class_of_.assign(order_, UINT32_MAX);
    for (std::uint32_t w = 0; w < order_; ++w) {
        if (class_of_[w] != UINT32_MAX) continue;
        auto cid = static_cast<std::uint32_t>(classes_.size());
        std::vector<std::uint32_t> cls{w};
        class_of_[w] = cid;
        for (std::size_t head = 0; head < cls.size(); ++head) {
            for (auto g : generators_) {
                std::uint32_t x = mul(mul(g, cls[head]), g);
                if (class_of_[x] == UINT32_MAX) {
                    class_of_[x] = cid;
                    cls.push_back(x);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
    std::vector<std::size_t> perm(classes_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (classes_[a].size() != classes_[b].size()) return classes_[a].size() < classes_[b].size();
        return classes_[a][0] < classes_[b][0];
    });
    std::vector<std::vector<std::uint32_t>> sorted;
    for (auto p : perm) sorted.push_back(std::move(classes_[p]));
    classes_ = std::move(sorted);
    for (std::uint32_t c = 0; c < classes_.size(); ++c)
        for (auto w : classes_[c]) class_of_[w] = c;

    labels_.reserve(order_);
    for (const auto& p : payloads) labels_.push_back(payload_label(d, p));
}

std::uint64_t ReflectionGroup::act_on_mask(std::uint32_t w, std::uint64_t mask) const {
    std::uint64_t out = 0;
    const SignedRoot* a = action(w);
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << root_index(a[i]);
    }
    return out;
}

int ReflectionGroup::des(std::uint32_t w) const { return std::popcount(descents_[w]); }

std::optional<std::uint32_t> ReflectionGroup::find(const std::vector<SignedRoot>& action) const {
    if (static_cast<int>(action.size()) != nroots_) return std::nullopt;
    for (std::uint32_t w = 0; w < order_; ++w)
        if (std::equal(action.begin(), action.end(), this->action(w))) return w;
    return std::nullopt;
}

std::vector<std::uint32_t> elements_with_descents_in(const ReflectionGroup& g, std::uint32_t t) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t w = 0; w < g.order(); ++w)
        if ((g.descent_mask(w) & ~t) == 0) out.push_back(w);
    return out;
}

}  // namespace ea
