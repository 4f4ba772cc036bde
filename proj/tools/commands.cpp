#include "commands.hpp"

#include "json_io.hpp"

#include "flagcalc/errors.hpp"
#include "flagcalc/fp_census.hpp"
#include "flagcalc/invariants.hpp"
#include "flagcalc/linear_systems.hpp"
#include "flagcalc/random.hpp"
#include "flagcalc/ruled.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace flagcalc::cli {

namespace {

using io::json;

json bound_json(const ExactBound& b) {
    return rational_to_string(b.value);
}

json witness_json(const std::optional<SingularWitness>& w) {
    if (!w) return nullptr;
    json out{{"whole_conic", w->whole_conic}, {"locus", io::to_json(w->locus)}};
    if (w->point) {
        out["point"] = {{"p", io::to_json(w->point->p())}, {"l", io::to_json(w->point->l())}};
    } else {
        out["point"] = nullptr;
    }
    return out;
}

json parameter_json(const ParameterPoint& x) {
    return json{{"s", io::to_json(x.s)}, {"t", io::to_json(x.t)}};
}

bool in_proven_range(unsigned a, unsigned b, std::size_t x) {
    return a >= 1 && b >= a && x <= static_cast<std::size_t>(a) * (a - 1) / 2;
}

std::uint64_t pair_count(std::size_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

json cmd_bound(std::int64_t a, std::int64_t b) {
    const ExactBound conic = miyaoka_conic_bound(a, b);
    const ExactBound ruling = ruling_curve_bound(a, b);
    const ExactBound fiber = fiber_curve_bound(a, b);
    return json{{"a", a},
                {"b", b},
                {"conic_bound", bound_json(conic)},
                {"conic_bound_floor", conic.floor.get_si()},
                {"ruling_curve_bound", bound_json(ruling)},
                {"ruling_curve_bound_floor", ruling.floor.get_si()},
                {"fiber_curve_bound", bound_json(fiber)},
                {"fiber_curve_bound_floor", fiber.floor.get_si()}};
}

json cmd_chern(std::int64_t a, std::int64_t b) {
    const SurfaceInvariantReport r = surface_invariant_report(a, b);
    return json{{"a", a},
                {"b", b},
                {"c1_squared", r.c1_squared},
                {"c2", r.c2},
                {"euler_characteristic", r.euler_characteristic},
                {"canonical_bidegree", {r.canonical_bidegree.first, r.canonical_bidegree.second}},
                {"conic_self_intersection", r.conic_self_intersection},
                {"ruling_curve_self_intersection", r.ruling_curve_self_intersection},
                {"fiber_curve_self_intersection", r.fiber_curve_self_intersection},
                {"general_type", r.general_type}};
}

json cmd_h0(std::int64_t a, std::int64_t b, const std::string& side) {
    std::int64_t value = 0;
    if (side == "flag") {
        value = h0_flag(a, b);
    } else if (side == "X") {
        value = h0_hirzebruch(HirzebruchSide::bidegree_10, a, b);
    } else {
        value = h0_hirzebruch(HirzebruchSide::bidegree_01, a, b);
    }
    return json{{"a", a}, {"b", b}, {"side", side}, {"h0", value}};
}

json cmd_chow(const std::string& classes) {
    std::vector<HyperplaneClass> parsed;
    std::vector<std::string> names;
    std::stringstream ss(classes);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "H1") {
            parsed.push_back(HyperplaneClass::H1);
        } else if (item == "H2") {
            parsed.push_back(HyperplaneClass::H2);
        } else {
            throw PreconditionError("unknown class '" + item + "' (expected H1 or H2)");
        }
        names.push_back(item);
    }
    if (parsed.size() != 3) throw PreconditionError("chow needs exactly three classes");
    return json{{"classes", names}, {"value", chow_triple(parsed[0], parsed[1], parsed[2])}};
}

json cmd_mk_surface(unsigned a, unsigned b, const std::string& conics_file, std::size_t random_count,
                    std::uint64_t seed) {
    std::vector<Conic> conics;
    if (!conics_file.empty()) {
        conics = io::conics_from_json(io::read_json_file(conics_file));
    } else {
        Rng rng(seed);
        conics = random_disjoint_conics(rng, random_count);
    }
    const SurfaceFamily family = surface_family(a, b, conics);
    json out{{"bidegree", {a, b}},
             {"seed", seed},
             {"dimension", family.basis.size()},
             {"expected_dimension", expected_dimension(a, b, conics.size())},
             {"in_proven_range", in_proven_range(a, b, conics.size())}};
    json cj = json::array();
    for (const auto& c : conics) cj.push_back(io::to_json(c));
    out["conics"] = std::move(cj);
    json basis = json::array();
    for (const auto& f : family.basis) basis.push_back(io::to_json(f));
    out["basis"] = std::move(basis);
    if (family.basis.empty()) {
        out["member"] = nullptr;
        return out;
    }
    const BiForm member = surface_through_conics(a, b, conics, seed);
    out["member"] = io::to_json(member);
    json singular = json::array();
    for (const auto& c : conics) singular.push_back(witness_json(conic_singularity_witness(member, c)));
    out["singular_witnesses"] = std::move(singular);
    return out;
}

json cmd_check_conic(const std::string& surface_file, const std::string& conic_file) {
    const BiForm surface = io::surface_from_json(io::read_json_file(surface_file));
    const Conic conic = io::single_conic_from_json(io::read_json_file(conic_file));
    const BinaryForm restriction = restrict_to_conic(surface, conic);
    return json{{"conic", io::to_json(conic)},
                {"contained", restriction.is_zero()},
                {"twistor_fiber", conic.is_twistor_fiber()},
                {"smooth", conic.smooth()},
                {"restriction", io::to_json(restriction)}};
}

json cmd_mk_ruled(const std::string& forms_file, std::size_t samples, std::size_t smoothness_samples) {
    const BinaryFormTriple forms = io::forms_from_json(io::read_json_file(forms_file));
    const RuledSurfaceSpec spec = twistor_ruled_surface(forms);
    json out;
    json fj = json::array();
    for (const auto& f : spec.forms) fj.push_back(io::to_json(f));
    out["forms"] = std::move(fj);
    out["a"] = spec.a;
    out["surface"] = io::to_json(spec.surface);
    out["j_invariant"] = spec.j_invariant;
    json params = json::array();
    for (const auto& x : spec.certificate.parameters) params.push_back(parameter_json(x));
    out["certificate"] = {{"degree_bound", spec.certificate.degree_bound},
                          {"pivot", spec.certificate.pivot},
                          {"parameters", std::move(params)},
                          {"passed", spec.certificate.passed}};
    out["birationality"] = {{"preimage_counts", spec.birationality.preimage_counts},
                            {"birational", spec.birationality.birational}};
    if (spec.positivity) {
        out["positivity"] = {{"real_roots_affine", spec.positivity->real_roots_affine},
                             {"vanishes_at_infinity", spec.positivity->vanishes_at_infinity},
                             {"positive", spec.positivity->positive}};
    }
    json sampled = json::array();
    const auto conics = twistor_circle_samples(spec, samples);
    const auto params_used = rational_parameter_sequence(samples);
    bool all_disjoint = true;
    for (std::size_t i = 0; i < conics.size(); ++i) {
        sampled.push_back({{"parameter", parameter_json(params_used[i])},
                           {"conic", io::to_json(conics[i])},
                           {"contained", contains_conic(spec.surface, conics[i])},
                           {"twistor_fiber", conics[i].is_twistor_fiber()}});
        for (std::size_t j = 0; j < i; ++j) {
            if (conics[i] == conics[j] || !conics_disjoint(conics[i], conics[j])) all_disjoint = false;
        }
    }
    out["samples"] = std::move(sampled);
    out["samples_pairwise_disjoint"] = all_disjoint;
    const SmoothnessProfile profile = smoothness_profile(spec, smoothness_samples);
    json fibers = json::array();
    for (const auto& e : profile.fibers) {
        fibers.push_back({{"parameter", parameter_json(e.parameter)}, {"witness", witness_json(e.witness)}});
    }
    out["smoothness"] = {{"verdict", profile.verdict == SmoothnessVerdict::singular_witness_found
                                         ? "singular_witness_found"
                                         : "inconclusive"},
                         {"fibers", std::move(fibers)}};
    out["irreducibility"] = "unverified";
    return out;
}

json cmd_census(const std::string& surface_file, std::uint64_t prime, std::size_t limit) {
    const BiForm surface = io::surface_from_json(io::read_json_file(surface_file));
    const FpSurface reduced = reduce_mod_p(surface, prime);
    const std::vector<FpConic> census = conic_census(reduced);
    const DisjointSubsetResult disjoint = max_disjoint_subset(census, prime, limit);
    json cj = json::array();
    for (const auto& c : census) cj.push_back(io::to_json(c));
    return json{{"prime", prime},
                {"i_image", reduced.i_image ? json(*reduced.i_image) : json(nullptr)},
                {"label", "mod-p evidence"},
                {"count", census.size()},
                {"conics", std::move(cj)},
                {"max_disjoint", {{"size", disjoint.size}, {"exact", disjoint.exact}, {"members", disjoint.members}}}};
}

json cmd_dim_report(unsigned a, unsigned b, std::size_t x, std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    const std::int64_t expected = expected_dimension(a, b, x);
    json rows = json::array();
    std::size_t matches = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto conics = random_disjoint_conics(rng, x);
        const std::int64_t observed = system_dimension(a, b, conics);
        if (observed == expected) ++matches;
        rows.push_back({{"trial", trial}, {"observed", observed}, {"expected", expected},
                        {"h1_defect", observed - expected}});
    }
    return json{{"a", a},
                {"b", b},
                {"x", x},
                {"seed", seed},
                {"h0", h0_flag(a, b)},
                {"conditions_per_conic", a + b + 1},
                {"in_proven_range", in_proven_range(a, b, x)},
                {"trials", std::move(rows)},
                {"all_expected", matches == trials},
                {"conic_pairs", pair_count(x)}};
}

json error_json(const std::string& code, const std::string& message) {
    return json{{"code", code}, {"message", message}};
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        out << text << std::flush;
        return;
    }
    const std::filesystem::path target(out_path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw PreconditionError("cannot write " + tmp.string());
        f << text;
        if (!f) throw PreconditionError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"flagcalc: exact computations with curves and surfaces in the flag threefold"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "Write the JSON result to this file instead of stdout");

    std::int64_t a = 0, b = 0;
    std::string side = "flag", classes, conics_file, surface_file, conic_file, forms_file;
    std::size_t random_count = 0, x = 0, trials = 5, samples = 3, smoothness_samples = 4, limit = 24;
    std::uint64_t seed = 0, prime = 0;
    std::function<json()> action;

    auto* bound = app.add_subcommand("bound", "Conic and ruling-curve bounds for a smooth (a,b) surface");
    bound->add_option("--a", a)->required();
    bound->add_option("--b", b)->required();
    bound->callback([&] { action = [&] { return cmd_bound(a, b); }; });

    auto* chern = app.add_subcommand("chern", "Chern numbers, Euler characteristic and adjunction data");
    chern->add_option("--a", a)->required();
    chern->add_option("--b", b)->required();
    chern->callback([&] { action = [&] { return cmd_chern(a, b); }; });

    auto* h0 = app.add_subcommand("h0", "Dimension of global sections on F or on a Hirzebruch surface");
    h0->add_option("--a", a)->required();
    h0->add_option("--b", b)->required();
    h0->add_option("--side", side, "flag, X (a (1,0) surface) or Y (a (0,1) surface)")
        ->check(CLI::IsMember({"flag", "X", "Y"}));
    h0->callback([&] { action = [&] { return cmd_h0(a, b, side); }; });

    auto* chow = app.add_subcommand("chow", "Triple product of hyperplane classes");
    chow->add_option("--classes", classes, "e.g. H1,H2,H1")->required();
    chow->callback([&] { action = [&] { return cmd_chow(classes); }; });

    auto* mk_surface = app.add_subcommand("mk-surface", "Surfaces of bidegree (a,b) through prescribed conics");
    mk_surface->add_option("--a", a)->required()->check(CLI::NonNegativeNumber);
    mk_surface->add_option("--b", b)->required()->check(CLI::NonNegativeNumber);
    auto* conics_opt = mk_surface->add_option("--conics", conics_file, "JSON file with the conics");
    auto* random_opt = mk_surface->add_option("--random", random_count, "Number of random disjoint conics");
    conics_opt->excludes(random_opt);
    mk_surface->add_option("--seed", seed);
    mk_surface->callback([&] {
        if (conics_file.empty() && random_opt->count() == 0) throw CLI::ValidationError("--conics or --random is required");
        action = [&] {
            return cmd_mk_surface(static_cast<unsigned>(a), static_cast<unsigned>(b), conics_file, random_count, seed);
        };
    });

    auto* check = app.add_subcommand("check-conic", "Test whether a surface contains a conic");
    check->add_option("--surface", surface_file)->required();
    check->add_option("--conic", conic_file)->required();
    check->callback([&] { action = [&] { return cmd_check_conic(surface_file, conic_file); }; });

    auto* mk_ruled = app.add_subcommand("mk-ruled", "Surface swept by the twistor fibers of a real plane curve");
    mk_ruled->add_option("--forms", forms_file)->required();
    mk_ruled->add_option("--samples", samples, "Number of sampled twistor fibers")->check(CLI::PositiveNumber);
    mk_ruled->add_option("--smoothness-samples", smoothness_samples)->check(CLI::PositiveNumber);
    mk_ruled->callback([&] { action = [&] { return cmd_mk_ruled(forms_file, samples, smoothness_samples); }; });

    auto* census = app.add_subcommand("census", "Enumerate smooth conics on a surface over F_p");
    census->add_option("--surface", surface_file)->required();
    census->add_option("--prime", prime)->required();
    census->add_option("--limit", limit, "Exact disjoint-subset search up to this many conics");
    census->callback([&] { action = [&] { return cmd_census(surface_file, prime, limit); }; });

    auto* dim = app.add_subcommand("dim-report", "Observed vs expected dimension for random conic unions");
    dim->add_option("--a", a)->required()->check(CLI::NonNegativeNumber);
    dim->add_option("--b", b)->required()->check(CLI::NonNegativeNumber);
    dim->add_option("--x", x)->required();
    dim->add_option("--trials", trials);
    dim->add_option("--seed", seed);
    dim->callback([&] {
        action = [&] { return cmd_dim_report(static_cast<unsigned>(a), static_cast<unsigned>(b), x, trials, seed); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        out << error_json("usage_error", e.what()).dump(2) << "\n";
        return usage_error;
    }

    try {
        emit(action(), out_path, out);
        return ok;
    } catch (const PreconditionError& e) {
        out << error_json("precondition_violation", e.what()).dump(2) << "\n";
        return precondition_violation;
    } catch (const DomainError& e) {
        out << error_json("domain_error", e.what()).dump(2) << "\n";
        return precondition_violation;
    } catch (const nlohmann::json::exception& e) {
        out << error_json("precondition_violation", std::string("malformed JSON input: ") + e.what()).dump(2) << "\n";
        return precondition_violation;
    } catch (const std::exception& e) {
        out << error_json("internal_error", e.what()).dump(2) << "\n";
        return internal_error;
    }
}

}  // namespace flagcalc::cli
