#include "ea/arrangement.hpp"

#include <algorithm>
#include <bit>

#include "ea/error.hpp"

namespace ea {

namespace {

constexpr std::uint32_t kProductTableLimit = 5000;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

std::string sign_string(const SignVector& s, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (s.plus >> i & 1) out[i] = '+';
        if (s.minus >> i & 1) out[i] = '-';
    }
    return out;
}

SignVector parse_sign_string(const std::string& text) {
    if (text.size() > 64) throw std::invalid_argument("sign string longer than 64 entries");
    SignVector s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+':
                s.plus |= bit(static_cast<int>(i));
                break;
            case '-':
                s.minus |= bit(static_cast<int>(i));
                break;
            case '0':
                break;
            default:
                throw std::invalid_argument("bad sign character in '" + text + "'");
        }
    }
    return s;
}

Arrangement::Arrangement(std::shared_ptr<const ReflectionGroup> group) : group_(std::move(group)) {
    n_ = group_->num_hyperplanes();
    enumerate_faces();
    build_flats();
    if (num_faces() <= kProductTableLimit) {
        const std::uint32_t nf = num_faces();
        product_table_.resize(static_cast<std::size_t>(nf) * nf);
        for (std::uint32_t f = 0; f < nf; ++f)
            for (std::uint32_t g = 0; g < nf; ++g) {
                auto it = face_index_.find(compose(faces_[f].signs, faces_[g].signs));
                if (it == face_index_.end()) throw InvariantError("Tits product is not a face");
                product_table_[static_cast<std::size_t>(f) * nf + g] = it->second;
            }
    }
}

void Arrangement::enumerate_faces() {
    const ReflectionGroup& g = *group_;
    const int r = g.rank();
    const auto& model = g.model();
    std::vector<std::uint32_t> support(n_);
    for (int j = 0; j < n_; ++j) support[j] = model.root_support(j);

    struct Raw {
        SignVector signs;
        std::uint32_t type;
        std::uint32_t rep;
    };
    std::vector<Raw> raw;
    for (std::uint32_t t = 0; t < (1u << r); ++t) {
        std::unordered_map<SignVector, std::uint32_t, SignHash> seen;
        std::uint64_t base_plus = 0;
        for (int j = 0; j < n_; ++j)
            if (support[j] & t) base_plus |= bit(j);
        for (std::uint32_t w = 0; w < g.order(); ++w) {
            // sign_j(w F) = sign of <w^-1 alpha_j, p>
            const SignedRoot* a = g.action(g.inverse(w));
            SignVector s;
            for (int j = 0; j < n_; ++j) {
                int k = root_index(a[j]);
                if (!(base_plus >> k & 1)) continue;
                if (root_sign(a[j]) > 0)
                    s.plus |= bit(j);
                else
                    s.minus |= bit(j);
            }
            if (seen.emplace(s, w).second) {
                if ((g.descent_mask(w) & ~t) != 0)
                    throw InvariantError("face enumeration: first representative is not a minimal coset representative");
                raw.push_back({s, t, w});
            }
        }
        if (seen.size() != predicted_type_count(t))
            throw InvariantError("face enumeration: count mismatch for type " + std::to_string(t));
    }
    std::stable_sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
        int dx = std::popcount(x.type), dy = std::popcount(y.type);
        if (dx != dy) return dx < dy;
        if (x.type != y.type) return x.type < y.type;
        return x.rep < y.rep;
    });
    by_dim_.assign(r + 1, {});
    by_type_.assign(1u << r, {});
    for (const auto& f : raw) {
        auto id = static_cast<std::uint32_t>(faces_.size());
        Face face;
        face.signs = f.signs;
        face.zero_mask = g.all_hyperplanes() & ~f.signs.nonzero();
        face.dim = std::popcount(f.type);
        face.type = f.type;
        face.rep = f.rep;
        if (!face_index_.emplace(f.signs, id).second) throw InvariantError("face enumeration: duplicate sign vector");
        faces_.push_back(face);
        by_dim_[face.dim].push_back(id);
        by_type_[f.type].push_back(id);
    }
    base_chamber_ = by_dim_[r].front();
    if (faces_[base_chamber_].signs.plus != g.all_hyperplanes())
        throw InvariantError("face enumeration: fundamental chamber is not all-plus");
}

std::uint64_t Arrangement::predicted_type_count(std::uint32_t t) const {
    std::uint64_t c = 0;
    for (std::uint32_t w = 0; w < group_->order(); ++w) c += (group_->descent_mask(w) & ~t) == 0;
    return c;
}

void Arrangement::build_flats() {
    std::map<std::pair<int, std::uint64_t>, int> found;  // (codim, mask) -> dim
    const int r = rank();
    for (const auto& f : faces_) found.emplace(std::make_pair(r - f.dim, f.zero_mask), f.dim);
    for (const auto& [key, dim] : found) {
        Flat x;
        x.mask = key.second;
        x.codim = key.first;
        x.dim = dim;
        flat_index_.emplace(x.mask, static_cast<std::uint32_t>(flats_.size()));
        flats_.push_back(x);
    }
    if (flats_.front().mask != 0 || flats_.back().mask != group_->all_hyperplanes())
        throw InvariantError("flat lattice: missing V or the origin");
    by_support_.assign(flats_.size(), {});
    for (std::uint32_t id = 0; id < faces_.size(); ++id) {
        faces_[id].flat = flat_index_.at(faces_[id].zero_mask);
        by_support_[faces_[id].flat].push_back(id);
    }
    for (const auto& x : flats_)
        if (rank_of(x.mask) != x.codim) throw InvariantError("flat lattice: rank disagrees with face dimension");

    mu_bottom_ = moebius_from(0);

    std::vector<std::uint32_t> orbit_of(flats_.size(), UINT32_MAX);
    for (std::uint32_t x = 0; x < flats_.size(); ++x) {
        if (orbit_of[x] != UINT32_MAX) continue;
        auto oid = static_cast<std::uint32_t>(orbits_.size());
        std::vector<std::uint32_t> orbit{x};
        orbit_of[x] = oid;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (int s = 0; s < rank(); ++s) {
                std::uint32_t y = flat_act(group_->generator(s), orbit[head]);
                if (orbit_of[y] == UINT32_MAX) {
                    orbit_of[y] = oid;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits_.push_back(std::move(orbit));
    }
    for (std::uint32_t x = 0; x < flats_.size(); ++x) flats_[x].orbit = orbit_of[x];
}

std::optional<std::uint32_t> Arrangement::find_face(const SignVector& s) const {
    auto it = face_index_.find(s);
    if (it == face_index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t Arrangement::face_by_signs(const std::string& text) const {
    if (static_cast<int>(text.size()) != n_) throw std::invalid_argument("sign string has the wrong length");
    auto f = find_face(parse_sign_string(text));
    if (!f) throw std::invalid_argument("'" + text + "' is not a covector");
    return *f;
}

std::uint32_t Arrangement::product(std::uint32_t f, std::uint32_t g) const {
    if (!product_table_.empty()) return product_table_[static_cast<std::size_t>(f) * faces_.size() + g];
    auto it = face_index_.find(compose(faces_[f].signs, faces_[g].signs));
    if (it == face_index_.end()) throw InvariantError("Tits product is not a face");
    return it->second;
}

SignVector Arrangement::act_signs(std::uint32_t w, const SignVector& s) const {
    // sign_j(wF) = c * sign_{pi(j)}(F) where w^-1 alpha_j = c alpha_{pi(j)}
    const SignedRoot* a = group_->action(group_->inverse(w));
    SignVector out;
    for (int j = 0; j < n_; ++j) {
        int k = root_index(a[j]);
        bool p = s.plus >> k & 1, m = s.minus >> k & 1;
        if (!p && !m) continue;
        if (root_sign(a[j]) < 0) std::swap(p, m);
        if (p) out.plus |= bit(j);
        if (m) out.minus |= bit(j);
    }
    return out;
}

std::uint32_t Arrangement::act(std::uint32_t w, std::uint32_t f) const {
    auto it = face_index_.find(act_signs(w, faces_[f].signs));
    if (it == face_index_.end()) throw InvariantError("group action does not preserve faces");
    return it->second;
}

std::optional<std::uint32_t> Arrangement::flat_of_mask(std::uint64_t mask) const {
    auto it = flat_index_.find(mask);
    if (it == flat_index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t Arrangement::span_flat(std::uint32_t x, std::uint32_t y) const {
    // Largest common lower bound, found by search rather than by mask algebra.
    std::optional<std::uint32_t> best;
    for (std::uint32_t z = 0; z < num_flats(); ++z) {
        if (!leq(z, x) || !leq(z, y)) continue;
        if (!best || leq(*best, z)) best = z;
    }
    for (std::uint32_t z = 0; z < num_flats(); ++z)
        if (leq(z, x) && leq(z, y) && !leq(z, *best)) throw InvariantError("flat lattice: meet is not unique");
    return *best;
}

std::uint32_t Arrangement::intersection_flat(std::uint32_t x, std::uint32_t y) const {
    auto f = flat_of_mask(closure(flats_[x].mask | flats_[y].mask));
    if (!f) throw InvariantError("flat lattice: closure is not a flat");
    return *f;
}

std::vector<long> Arrangement::moebius_from(std::uint32_t x) const {
    std::vector<long> mu(flats_.size(), 0);
    mu[x] = 1;
    for (std::uint32_t y = x + 1; y < flats_.size(); ++y) {
        if (!leq(x, y)) continue;
        long acc = 0;
        for (std::uint32_t z = x; z < y; ++z)
            if (mu[z] != 0 && leq(z, y) && flats_[z].mask != flats_[y].mask) acc += mu[z];
        mu[y] = -acc;
    }
    return mu;
}

Poly Arrangement::characteristic_polynomial() const {
    std::vector<Rational> c(rank() + 1);
    for (std::uint32_t x = 0; x < num_flats(); ++x) c[flats_[x].dim] += Rational(mu_bottom_[x]);
    return Poly(std::move(c));
}

std::vector<long> Arrangement::whitney_numbers() const {
    std::vector<long> w(rank() + 1, 0);
    for (std::uint32_t x = 0; x < num_flats(); ++x) w[flats_[x].codim] += std::labs(mu_bottom_[x]);
    return w;
}

std::uint32_t Arrangement::flat_act(std::uint32_t w, std::uint32_t x) const {
    auto y = flat_of_mask(group_->act_on_mask(w, flats_[x].mask));
    if (!y) throw InvariantError("group action does not preserve flats");
    return *y;
}

const std::vector<std::uint32_t>& Arrangement::stabilizer(std::uint32_t x) const {
    auto it = stabilizers_.find(x);
    if (it != stabilizers_.end()) return it->second;
    std::vector<std::uint32_t> n;
    const std::uint64_t mask = flats_[x].mask;
    for (std::uint32_t w = 0; w < group_->order(); ++w)
        if (group_->act_on_mask(w, mask) == mask) n.push_back(w);
    return stabilizers_.emplace(x, std::move(n)).first->second;
}

RestrictionStats Arrangement::restriction_stats(std::uint32_t x) const {
    RestrictionStats st;
    const std::uint64_t mask = flats_[x].mask;
    if (rank() >= 1)
        for (auto f : by_dim_[1])
            if ((faces_[f].zero_mask & mask) == mask) ++st.rays;
    st.chambers = static_cast<long>(by_support_[x].size());
    auto mu = moebius_from(x);
    std::vector<Rational> c(rank() + 1);
    for (std::uint32_t z = 0; z < num_flats(); ++z)
        if (mu[z] != 0) c[flats_[z].dim] += Rational(mu[z]);
    st.chi = Poly(std::move(c));
    return st;
}

int Arrangement::rank_of(std::uint64_t mask) const {
    auto it = rank_cache_.find(mask);
    if (it != rank_cache_.end()) return it->second;
    int r = group_->model().subset_rank(mask);
    rank_cache_.emplace(mask, r);
    return r;
}

std::uint64_t Arrangement::closure(std::uint64_t mask) const {
    const int r = rank_of(mask);
    std::uint64_t out = mask;
    for (int j = 0; j < n_; ++j)
        if (!(mask >> j & 1) && rank_of(mask | bit(j)) == r) out |= bit(j);
    return out;
}

const std::vector<Circuit>& Arrangement::circuits() const {
    if (circuits_ready_) return circuits_;
    // Depth-first over independent sets in increasing index order; a circuit
    // is found exactly once, when its largest member is appended.
    struct Frame {
        std::uint64_t set;
        int size;
        int next;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    const int r = rank();
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        for (int e = fr.next; e < n_; ++e) {
            std::uint64_t s = fr.set | bit(e);
            if (rank_of(s) == fr.size + 1) {
                if (fr.size + 1 <= r) stack.push_back({s, fr.size + 1, e + 1});
                continue;
            }
            bool minimal = true;
            for (std::uint64_t rest = fr.set; rest && minimal; rest &= rest - 1) {
                std::uint64_t drop = rest & (~rest + 1);
                minimal = rank_of(s & ~drop) == fr.size;
            }
            if (!minimal) continue;
            auto signs = group_->model().dependence_signs(s);
            Circuit c;
            c.members = s;
            int k = 0;
            for (std::uint64_t rest = s; rest; rest &= rest - 1, ++k) {
                std::uint64_t b = rest & (~rest + 1);
                (signs[k] > 0 ? c.positive : c.negative) |= b;
            }
            circuits_.push_back(c);
        }
    }
    std::sort(circuits_.begin(), circuits_.end(), [](const Circuit& a, const Circuit& b) {
        int pa = std::popcount(a.members), pb = std::popcount(b.members);
        if (pa != pb) return pa < pb;
        return a.members < b.members;
    });
    circuits_ready_ = true;
    return circuits_;
}

}  // namespace ea
