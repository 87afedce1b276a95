#include "ea/homology.hpp"

#include "ea/error.hpp"

namespace ea {

IntervalComplex interval_complex(const Arrangement& arr, std::uint32_t x) {
    IntervalComplex c;
    c.flat = x;
    std::vector<std::uint32_t> inside;
    for (std::uint32_t y = 0; y < arr.num_flats(); ++y)
        if (y != arr.bottom() && y != x && arr.leq(y, x)) inside.push_back(y);
    c.levels.push_back({{}});
    // Flats are sorted by codimension, so a chain only grows to later indices.
    for (;;) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& chain : c.levels.back())
            for (auto y : inside)
                if (chain.empty() || (y > chain.back() && arr.leq(chain.back(), y) && chain.back() != y)) {
                    auto longer = chain;
                    longer.push_back(y);
                    next.push_back(std::move(longer));
                }
        if (next.empty()) break;
        c.levels.push_back(std::move(next));
    }
    return c;
}

long exact_rank(std::vector<std::map<std::uint32_t, Rational>> rows) {
    std::map<std::uint32_t, std::map<std::uint32_t, Rational>> pivots;  // leading column -> row
    long rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto [col, lead] = *row.begin();
            auto it = pivots.find(col);
            if (it == pivots.end()) {
                pivots.emplace(col, std::move(row));
                ++rank;
                break;
            }
            Rational f = lead / it->second.begin()->second;
            for (const auto& [j, v] : it->second) {
                Rational& r = row[j];
                r -= f * v;
                if (r.is_zero()) row.erase(j);
            }
        }
    }
    return rank;
}

std::map<int, long> homology_ranks(const Arrangement& arr, std::uint32_t x) {
    if (x == arr.bottom()) return {{-2, 1}};
    IntervalComplex c = interval_complex(arr, x);
    const int levels = static_cast<int>(c.levels.size());
    // boundary_rank[l] = rank of the map from level l to level l - 1.
    std::vector<long> boundary_rank(levels + 1, 0);
    for (int l = 1; l < levels; ++l) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> index;
        for (std::uint32_t k = 0; k < c.levels[l - 1].size(); ++k) index.emplace(c.levels[l - 1][k], k);
        std::vector<std::map<std::uint32_t, Rational>> rows;
        for (const auto& chain : c.levels[l]) {
            std::map<std::uint32_t, Rational> row;
            for (std::size_t j = 0; j < chain.size(); ++j) {
                auto face = chain;
                face.erase(face.begin() + static_cast<long>(j));
                row[index.at(face)] = Rational(j % 2 ? -1 : 1);
            }
            rows.push_back(std::move(row));
        }
        boundary_rank[l] = exact_rank(std::move(rows));
    }
    std::map<int, long> out;
    for (int l = 0; l < levels; ++l) {
        long r = static_cast<long>(c.levels[l].size()) - boundary_rank[l] - boundary_rank[l + 1];
        if (r != 0) out[l - 1] = r;
    }
    return out;
}

ClassFunction wh_character(const Arrangement& arr, std::uint32_t x, const Subgroup& nx) {
    if (x == arr.bottom()) return trivial_character(nx);
    IntervalComplex c = interval_complex(arr, x);
    const int codim = arr.flat(x).codim;
    ClassFunction f;
    for (const auto& cls : nx.classes()) {
        std::uint32_t n = cls.front();
        if (arr.flat_act(n, x) != x) throw StabilizerError("wh_character: element does not fix the flat");
        std::vector<bool> fixed(arr.num_flats());
        for (std::uint32_t y = 0; y < arr.num_flats(); ++y) fixed[y] = arr.flat_act(n, y) == y;
        long sum = 0;
        for (std::size_t l = 0; l < c.levels.size(); ++l) {
            long count = 0;
            for (const auto& chain : c.levels[l]) {
                bool all = true;
                for (auto y : chain) all = all && fixed[y];
                count += all;
            }
            // level l holds (l - 1)-chains
            sum += (l % 2 ? 1 : -1) * count;
        }
        f.values.push_back(Rational(codim % 2 ? -sum : sum));
    }
    return f;
}

int det_vx(const Arrangement& arr, std::uint32_t x, std::uint32_t w) {
    const ReflectionGroup& g = arr.group();
    std::uint64_t mask = arr.flat(x).mask;
    if (g.act_on_mask(w, mask) != mask) throw StabilizerError("det_vx: element does not fix the flat");
    if (mask == 0) return 1;
    return g.model().det_on_span(mask, g.action(w));
}

ClassFunction wh_orbit_character(const Arrangement& arr, std::uint32_t x) {
    const ReflectionGroup& g = arr.group();
    Subgroup nx(g, arr.stabilizer(x));
    ClassFunction det;
    for (const auto& cls : nx.classes()) det.values.push_back(Rational(det_vx(arr, x, cls.front())));
    return induce_character(g, nx, pointwise_product(wh_character(arr, x, nx), det));
}

}  // namespace ea
