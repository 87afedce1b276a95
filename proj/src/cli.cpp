#include "ea/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>

#include "ea/error.hpp"
#include "ea/homology.hpp"
#include "ea/idempotents.hpp"
#include "ea/verify.hpp"

namespace ea {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kCommands{"info", "lattice", "faces", "idempotents", "barr", "tee",
                                         "beta", "vg",      "wh",    "subalgebra",  "verify"};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::shared_ptr<const ReflectionGroup> group;
    std::unique_ptr<Arrangement> arr;
    HyperplaneOrder order = HyperplaneOrder::Default;
    std::vector<Check> checks;

    const ReflectionGroup& g() const { return *group; }
    void check(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

json face_element(const FaceAlgElt& a) {
    json j = json::object();
    for (const auto& [f, c] : a) j[std::to_string(f)] = c.to_string();
    return j;
}

json group_element(const ReflectionGroup& g, const GroupAlgElt& a) {
    json j = json::object();
    for (const auto& [w, c] : a) j[g.label(w)] = c.to_string();
    return j;
}

json class_function(const ClassFunction& f) {
    json j = json::array();
    for (const auto& v : f.values) j.push_back(v.to_string());
    return j;
}

json hyperplane_list(const Arrangement& arr, std::uint64_t mask) {
    json j = json::array();
    for (int i = 0; i < arr.num_hyperplanes(); ++i)
        if (mask >> i & 1) j.push_back(arr.group().model().hyperplane_label(i));
    return j;
}

json generator_list(std::uint32_t t) {
    json j = json::array();
    for (int s = 0; t; ++s, t >>= 1)
        if (t & 1) j.push_back(s + 1);
    return j;
}

json class_reps(const ReflectionGroup& g) {
    json j = json::array();
    for (const auto& cls : g.conjugacy_classes())
        j.push_back({{"representative", g.label(cls.front())}, {"size", cls.size()}});
    return j;
}

void family_checks(Context& ctx, const std::string& prefix, const std::vector<GroupAlgElt>& family) {
    const ReflectionGroup& g = ctx.g();
    GroupAlgElt sum;
    for (const auto& e : family) sum += e;
    ctx.check(prefix + " complete", sum == group_one(g));
    std::string bad_idem, bad_orth;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            GroupAlgElt p = gw_mul(g, family[i], family[j]);
            if (i == j && p != family[i] && bad_idem.empty()) bad_idem = std::to_string(i);
            if (i != j && !p.is_zero() && bad_orth.empty()) bad_orth = std::to_string(i) + ", " + std::to_string(j);
        }
    ctx.check(prefix + " idempotent", bad_idem.empty(), bad_idem);
    ctx.check(prefix + " orthogonal", bad_orth.empty(), bad_orth);
}

json cmd_info(Context& ctx) {
    const ReflectionGroup& g = ctx.g();
    const Arrangement& arr = *ctx.arr;
    json faces_by_dim = json::array();
    for (int k = 0; k <= arr.rank(); ++k) faces_by_dim.push_back(arr.faces_of_dim(k).size());
    auto gap = g.descriptor().exponent_gap();
    ctx.check("group order", g.order() == g.descriptor().expected_order(), std::to_string(g.order()));
    bool types_ok = true;
    for (std::uint32_t t = 0; t < (1u << arr.rank()); ++t)
        types_ok = types_ok && arr.faces_of_type(t).size() == arr.predicted_type_count(t);
    ctx.check("faces per type match |W| / |W_T|", types_ok);
    long mu_total = 0;
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) mu_total += std::labs(arr.moebius(x));
    ctx.check("sum of |mu| counts the chambers", mu_total == static_cast<long>(g.order()));
    return {{"order", g.order()},
            {"rank", g.rank()},
            {"hyperplanes", arr.num_hyperplanes()},
            {"exponents", g.descriptor().exponents()},
            {"coincidental", g.descriptor().coincidental()},
            {"exponent_gap", gap ? json(*gap) : json(nullptr)},
            {"faces", arr.num_faces()},
            {"faces_by_dimension", faces_by_dim},
            {"flats", arr.num_flats()},
            {"flat_orbits", arr.flat_orbits().size()},
            {"whitney_numbers", arr.whitney_numbers()},
            {"characteristic_polynomial", arr.characteristic_polynomial().to_string()},
            {"conjugacy_classes", class_reps(g)}};
}

json cmd_faces(Context& ctx) {
    const Arrangement& arr = *ctx.arr;
    json faces = json::array();
    for (std::uint32_t f = 0; f < arr.num_faces(); ++f) {
        const Face& face = arr.face(f);
        faces.push_back({{"id", f},
                         {"signs", arr.face_signs(f)},
                         {"dim", face.dim},
                         {"type", generator_list(face.type)},
                         {"flat", face.flat},
                         {"representative", ctx.g().label(face.rep)}});
    }
    return {{"faces", faces}, {"center", arr.center()}, {"base_chamber", arr.base_chamber()}};
}

json cmd_lattice(Context& ctx) {
    const Arrangement& arr = *ctx.arr;
    json flats = json::array();
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
        const Flat& fl = arr.flat(x);
        RestrictionStats st = arr.restriction_stats(x);
        flats.push_back({{"id", x},
                         {"hyperplanes", hyperplane_list(arr, fl.mask)},
                         {"dim", fl.dim},
                         {"codim", fl.codim},
                         {"orbit", fl.orbit},
                         {"mu", arr.moebius(x)},
                         {"rays", st.rays},
                         {"chambers", st.chambers},
                         {"chi", st.chi.to_string()}});
    }
    json circuits = json::array();
    for (const auto& c : arr.circuits())
        circuits.push_back(sign_string({c.positive, c.negative}, arr.num_hyperplanes()));
    return {{"flats", flats}, {"orbits", arr.flat_orbits()}, {"circuits", circuits}};
}

json cmd_idempotents(Context& ctx) {
    const Arrangement& arr = *ctx.arr;
    auto family = saliola_family(arr, uniform_section(arr));
    json by_flat = json::object(), by_orbit = json::object(), by_dim = json::object();
    for (std::uint32_t x = 0; x < family.size(); ++x) by_flat[std::to_string(x)] = face_element(family[x]);
    auto orbits = group_by_orbit(arr, family);
    for (std::uint32_t o = 0; o < orbits.size(); ++o) by_orbit[std::to_string(o)] = face_element(orbits[o]);
    auto dims = group_by_dimension(arr, family);
    for (std::uint32_t k = 0; k < dims.size(); ++k) by_dim[std::to_string(k)] = face_element(dims[k]);
    for (auto& c : verify_saliola(arr)) ctx.checks.push_back(std::move(c));
    return {{"section", "uniform"}, {"flat", by_flat}, {"orbit", by_orbit}, {"dimension", by_dim}};
}

json cmd_barr(Context& ctx) {
    const ReflectionGroup& g = ctx.g();
    const Arrangement& arr = *ctx.arr;
    GroupAlgElt s = barr_element(g);
    json payload = {{"element", group_element(g, s)}};
    if (auto w = ray_count_witness(arr)) {
        payload["witness"] = {{"dim", w->dim}, {"flats", {w->flat_min, w->flat_max}}, {"rays", {w->rays_min, w->rays_max}}};
        ctx.check("ray counts constant in each dimension", false,
                  "flats " + std::to_string(w->flat_min) + " and " + std::to_string(w->flat_max) + " carry " +
                      std::to_string(w->rays_min) + " and " + std::to_string(w->rays_max) + " rays");
        return payload;
    }
    auto sigma = barr_eigenvalues(arr);
    std::vector<Rational> ev;
    for (long v : sigma) ev.push_back(Rational(v));
    auto proj = lagrange_projectors(g, s, ev);
    ctx.check("annihilated by prod (s - sigma_k)", true);
    family_checks(ctx, "projectors", proj);
    auto whitney = arr.whitney_numbers();
    json projectors = json::array(), ranks = json::array();
    bool ranks_ok = true;
    for (std::size_t k = 0; k < proj.size(); ++k) {
        projectors.push_back(group_element(g, proj[k]));
        Rational rk = projector_rank(g, proj[k]);
        ranks.push_back(rk.to_string());
        ranks_ok = ranks_ok && rk == Rational(whitney[arr.rank() - k]);
    }
    ctx.check("eigenspace dimensions are Whitney numbers", ranks_ok);
    payload["sigma"] = sigma;
    payload["projectors"] = projectors;
    payload["ranks"] = ranks;
    return payload;
}

json cmd_tee(Context& ctx) {
    const ReflectionGroup& g = ctx.g();
    const Arrangement& arr = *ctx.arr;
    TeeData t = tee_element(arr);
    ctx.check("T separates flat orbits", true);
    std::vector<Rational> ev;
    json tau = json::array(), weights = json::array();
    for (const auto& v : t.orbit_tau) {
        ev.push_back(Rational(v, 1));
        tau.push_back(v.get_str());
    }
    for (const auto& w : t.weights) weights.push_back(w.get_str());
    auto proj = lagrange_projectors(g, t.element, ev);
    ctx.check("annihilated by prod (T - tau)", true);
    family_checks(ctx, "projectors", proj);
    json projectors = json::array(), ranks = json::array();
    bool ranks_ok = true;
    for (std::size_t o = 0; o < proj.size(); ++o) {
        projectors.push_back(group_element(g, proj[o]));
        Rational rk = projector_rank(g, proj[o]);
        ranks.push_back(rk.to_string());
        long mu = 0;
        for (auto x : arr.flat_orbits()[o]) mu += std::labs(arr.moebius(x));
        ranks_ok = ranks_ok && rk == Rational(mu);
    }
    ctx.check("eigenspace dimension is the orbit's Moebius sum", ranks_ok);
    return {{"weights", weights},   {"tau", tau},
            {"element", group_element(g, t.element)},
            {"projectors", projectors}, {"ranks", ranks}, {"orbits", arr.flat_orbits()}};
}

json cmd_beta(Context& ctx) {
    const ReflectionGroup& g = ctx.g();
    auto gap = g.descriptor().exponent_gap();
    if (!gap) throw UsageError("beta needs a coincidental group (A, B, H3 or I2)");
    const int r = g.rank();
    json beta = json::array(), e = json::array();
    bool cv = true;
    for (int l = 0; l <= r; ++l) {
        Poly b = beta_poly(r, *gap, l);
        beta.push_back(b.to_string());
        cv = cv && chu_vandermonde_sum(r, *gap, l) == b;
    }
    ctx.check("binomial sum equals beta", cv);
    auto ek = eulerian_E(g);
    for (const auto& x : ek) e.push_back(group_element(g, x));
    family_checks(ctx, "E_k", ek);
    return {{"gap", *gap}, {"beta", beta}, {"E", e}};
}

json cmd_vg(Context& ctx) {
    const ReflectionGroup& g = ctx.g();
    const Arrangement& arr = *ctx.arr;
    VGRing ring(arr, ctx.order);
    json counts = json::array(), basis = json::array(), degree = json::array();
    auto whitney = arr.whitney_numbers();
    bool dims_ok = true;
    for (int k = 0; k <= arr.rank(); ++k) {
        const auto& sets = ring.nbc_by_size()[k];
        counts.push_back(sets.size());
        dims_ok = dims_ok && static_cast<long>(sets.size()) == whitney[k];
        json level = json::array();
        for (auto m : sets) level.push_back(ring.indices(m));
        basis.push_back(level);
        degree.push_back(class_function(ring.degree_character(k)));
    }
    ctx.check("dim VG^k is the Whitney number", dims_ok);
    json flat_dims = json::array();
    bool flats_ok = true;
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
        flat_dims.push_back(ring.nbc_of_flat(x).size());
        flats_ok = flats_ok && static_cast<long>(ring.nbc_of_flat(x).size()) == std::labs(arr.moebius(x));
    }
    ctx.check("dim VG_X is |mu(V, X)|", flats_ok);
    json orbit = json::array();
    for (const auto& o : arr.flat_orbits()) orbit.push_back(class_function(ring.orbit_character(o.front())));
    return {{"nbc_counts", counts},  {"nbc_basis", basis},     {"flat_dimensions", flat_dims},
            {"classes", class_reps(g)}, {"degree_characters", degree}, {"orbit_characters", orbit}};
}

json cmd_wh(Context& ctx) {
    const ReflectionGroup& g = ctx.g();
    const Arrangement& arr = *ctx.arr;
    json flats = json::array();
    bool concentrated = true;
    for (std::uint32_t x = 0; x < arr.num_flats(); ++x) {
        auto ranks = homology_ranks(arr, x);
        json r = json::object();
        for (auto [d, v] : ranks) r[std::to_string(d)] = v;
        flats.push_back({{"id", x}, {"codim", arr.flat(x).codim}, {"ranks", r}});
        concentrated = concentrated && ranks.size() == 1 && ranks.begin()->first == arr.flat(x).codim - 2 &&
                       ranks.begin()->second == std::labs(arr.moebius(x));
    }
    ctx.check("homology concentrated in degree codim - 2 with rank |mu|", concentrated);
    json orbit = json::array();
    for (const auto& o : arr.flat_orbits()) orbit.push_back(class_function(wh_orbit_character(arr, o.front())));
    return {{"flats", flats}, {"classes", class_reps(g)}, {"orbit_characters", orbit}};
}

json cmd_subalgebra(Context& ctx) {
    const Arrangement& arr = *ctx.arr;
    SubalgebraResult res = eulerian_subalgebra_test(arr);
    json payload = {{"closed", res.closed}};
    if (res.closed) {
        payload["commutative"] = res.commutative;
        ctx.check("commutative when closed", res.commutative);
    }
    if (res.witness) {
        const auto& w = *res.witness;
        payload["witness"] = {{"dim", w.dim}, {"flats", {w.flat_min, w.flat_max}}, {"rays", {w.rays_min, w.rays_max}}};
    }
    bool expected = !ray_count_witness(arr).has_value();
    ctx.check("closed exactly when ray counts are constant", res.closed == expected);
    return payload;
}

json cmd_verify(Context& ctx, const std::string& suite) {
    if (suite.empty()) throw UsageError("verify needs a suite name");
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite '" + suite + "'");
    for (auto& c : run_suite(suite, *ctx.arr, ctx.order)) ctx.checks.push_back(std::move(c));
    return {{"suite", suite}};
}

void flatten(const json& j, const std::string& path, std::ostream& out) {
    if (j.is_object() || j.is_array()) {
        if (j.empty()) out << path << '\t' << j.dump() << '\n';
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            std::string key = j.is_object() ? it.key() : std::to_string(i);
            flatten(*it, path.empty() ? key : path + "." + key, out);
        }
        return;
    }
    out << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eulerian representations of reflection groups", "ea"};
    std::string command, suite, spec, format = "json", order_name = "default";
    std::uint64_t limit = 6000;
    bool timing = false;
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("suite", suite, "Suite for verify");
    app.add_option("--group", spec, "Group: A<n>, B<n>, D<n>, I2(<m>) or H3")->required();
    app.add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--order", order_name, "Hyperplane order for nbc bases")->check(CLI::IsMember({"default", "alt"}));
    app.add_option("--limit-order", limit, "Refuse groups larger than this");
    app.add_flag("--timing", timing, "Include wall-clock time in the report");
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (!suite.empty() && command != "verify") {
        err << "error: only verify takes a suite argument\n";
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    Context ctx;
    json payload;
    try {
        GroupDescriptor desc = GroupDescriptor::parse(spec);
        if (desc.expected_order() > limit) {
            err << "error: |W| = " << desc.expected_order() << " exceeds --limit-order " << limit << '\n';
            return 2;
        }
        ctx.order = parse_hyperplane_order(order_name);
        ctx.group = std::make_shared<ReflectionGroup>(desc);
        ctx.arr = std::make_unique<Arrangement>(ctx.group);
        if (command == "info") payload = cmd_info(ctx);
        else if (command == "faces") payload = cmd_faces(ctx);
        else if (command == "lattice") payload = cmd_lattice(ctx);
        else if (command == "idempotents") payload = cmd_idempotents(ctx);
        else if (command == "barr") payload = cmd_barr(ctx);
        else if (command == "tee") payload = cmd_tee(ctx);
        else if (command == "beta") payload = cmd_beta(ctx);
        else if (command == "vg") payload = cmd_vg(ctx);
        else if (command == "wh") payload = cmd_wh(ctx);
        else if (command == "subalgebra") payload = cmd_subalgebra(ctx);
        else payload = cmd_verify(ctx, suite);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DescriptorError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "invariant failure in " << command << ": " << e.what() << '\n';
        return 1;
    }

    json checks = json::array();
    bool pass = true;
    for (const auto& c : ctx.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (!c.pass) {
            pass = false;
            err << "check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        }
    }
    const Arrangement& arr = *ctx.arr;
    json order_labels = json::array();
    std::vector<int> idx(arr.num_hyperplanes());
    for (int i = 0; i < arr.num_hyperplanes(); ++i) idx[i] = i;
    if (ctx.order == HyperplaneOrder::Reversed) std::reverse(idx.begin(), idx.end());
    for (int i : idx) order_labels.push_back(ctx.g().model().hyperplane_label(i));
    json report = {
        {"command", command},
        {"group", ctx.g().descriptor().to_string()},
        {"hyperplane_order", {{"name", order_name}, {"hyperplanes", order_labels}}},
        {"conventions",
         {{"lattice", "flats ordered by reverse inclusion; V is the minimum"},
          {"signs", "+ is the side of the fundamental chamber"},
          {"face_type", "generators moving the face"},
          {"whitney_homology", "WH_V and WH_H are trivial of dimension one"},
          {"coefficients", "exact rationals as p or p/q strings"}}},
        {"payload", payload},
        {"checks", checks},
        {"status", pass ? "pass" : "fail"}};
    if (timing)
        report["timing_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (format == "json")
        out << report.dump(2) << '\n';
    else
        flatten(report, "", out);
    return pass ? 0 : 1;
}

}  // namespace ea
