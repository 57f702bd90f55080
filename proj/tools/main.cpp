// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperborn/io.hpp"
#include "hyperborn/verifier.hpp"

namespace {

using namespace hyperborn;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 7;

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct OpSelection {
    std::string op;
    std::string space_path;
    std::string ideal_path;
    std::string topology_path;
};

void add_op_options(CLI::App* cmd, OpSelection& sel, bool with_op = true) {
    if (with_op)
        cmd->add_option("--op", sel.op, "operator")
            ->required()
            ->check(CLI::IsMember({"metric-lower", "metric-upper", "metric-both",
                                   "born-lower", "born-upper", "born-both", "tau",
                                   "lower-mod", "upper-mod"}));
    cmd->add_option("--space", sel.space_path, "space instance file")->required();
    cmd->add_option("--ideal", sel.ideal_path, "ideal instance file");
    cmd->add_option("--topology", sel.topology_path, "topology instance file");
}

Side side_of(const std::string& op) {
    if (op.ends_with("lower")) return Side::Lower;
    if (op.ends_with("upper")) return Side::Upper;
    return Side::Both;
}

// Builds the selected closure operator. The space and any parsed topology
// must outlive the returned operator; they are owned by the caller's scope.
ClosureOperator build_operator(const FiniteSpace& space, const OpSelection& sel,
                               std::optional<Ideal>& ideal,
                               std::optional<HyperTopology>& topology) {
    const bool needs_ideal = sel.op.starts_with("born") || sel.op == "tau" ||
                             sel.op.ends_with("-mod");
    const bool needs_topology = sel.op.ends_with("-mod");
    if (needs_ideal && sel.ideal_path.empty())
        throw CLI::ValidationError("--ideal is required for --op " + sel.op);
    if (needs_topology && sel.topology_path.empty())
        throw CLI::ValidationError("--topology is required for --op " + sel.op);
    if (needs_ideal) ideal.emplace(parse_ideal(space, load_json_file(sel.ideal_path)));
    if (needs_topology)
        topology.emplace(parse_topology(space, load_json_file(sel.topology_path)));
    if (sel.op.starts_with("metric")) return make_cl_metric(space, side_of(sel.op));
    if (sel.op.starts_with("born")) return make_cl_born(space, *ideal, side_of(sel.op));
    if (sel.op == "tau") return make_cl_tau(space, *ideal);
    if (sel.op == "lower-mod") return make_cl_lower_mod(space, *topology, *ideal);
    return make_cl_upper_mod(space, *topology, *ideal);
}

int run_closure(const OpSelection& sel, const std::string& family_path) {
    FiniteSpace space = parse_space(load_json_file(sel.space_path));
    std::optional<Ideal> ideal;
    std::optional<HyperTopology> topology;
    ClosureOperator op = build_operator(space, sel, ideal, topology);
    Family f = parse_family(space, load_json_file(family_path));
    std::cout << family_to_json(space, op(f)).dump() << "\n";
    return kExitSuccess;
}

int run_reflect(const OpSelection& sel, const std::string& family_path) {
    FiniteSpace space = parse_space(load_json_file(sel.space_path));
    std::optional<Ideal> ideal;
    std::optional<HyperTopology> topology;
    ClosureOperator op = build_operator(space, sel, ideal, topology);
    if (!family_path.empty()) {
        Family f = parse_family(space, load_json_file(family_path));
        HullResult h = idempotent_hull(op, f);
        std::cout << json{{"hull", family_to_json(space, h.hull)},
                          {"iterations", h.iterations}}
                         .dump()
                  << "\n";
        return kExitSuccess;
    }
    ClosureOperator refl;
    refl.universe = space.full_hyperspace();
    refl.topological_hint = true;
    refl.map = [&op](Family f) { return idempotent_hull(op, f).hull; };
    json opens = json::array();
    for (Family g : enumerate_opens(space, refl))
        opens.push_back(family_to_json(space, g));
    std::cout << json{{"opens", opens}}.dump() << "\n";
    return kExitSuccess;
}

int run_ideal(const std::string& derive, const std::string& space_path,
              const std::string& ideal_path) {
    FiniteSpace space = parse_space(load_json_file(space_path));
    Ideal s = parse_ideal(space, load_json_file(ideal_path));
    Ideal out = s;
    int iterations = 1;
    if (derive == "tb") out = tb_hull(space, s);
    else if (derive == "plus") out = plus_ideal(space, s);
    else if (derive == "hat") out = hat_ideal(space, s);
    else if (derive == "minus") out = minus_ideal(space, s);
    else {
        StarResult st = star_ideal(space, s);
        out = st.ideal;
        iterations = st.iterations;
    }
    json j = ideal_to_json(space, out);
    j["iterations"] = iterations;
    std::cout << j.dump() << "\n";
    return kExitSuccess;
}

int run_check(const std::string& predicate, const OpSelection& sel,
              const std::string& family_path) {
    FiniteSpace space = parse_space(load_json_file(sel.space_path));
    bool result = false;
    json witness;
    if (predicate == "club") {
        if (sel.ideal_path.empty() || family_path.empty())
            throw CLI::ValidationError("--predicate club needs --ideal and --family");
        Ideal ambient = parse_ideal(space, load_json_file(sel.ideal_path));
        Family sub = parse_family(space, load_json_file(family_path));
        result = satisfies_club(space, sub, ambient);
    } else if (predicate == "stable") {
        if (family_path.empty())
            throw CLI::ValidationError("--predicate stable needs --family");
        Family f = parse_family(space, load_json_file(family_path));
        result = stable_under_small_enlargements(space, f);
    } else {
        std::optional<Ideal> ideal;
        std::optional<HyperTopology> topology;
        ClosureOperator op = build_operator(space, sel, ideal, topology);
        if (predicate == "open") {
            if (family_path.empty())
                throw CLI::ValidationError("--predicate open needs --family");
            Family g = parse_family(space, load_json_file(family_path));
            result = is_open(space, op, g);
            if (!result) {
                Family inside = op(space.family_complement(g)) & g;
                witness = family_to_json(space, inside);
            }
        } else { // topological
            TopologicalResult r = is_topological(space, op, Scope::Exhaustive);
            result = r.topological;
            if (r.witness) witness = family_to_json(space, *r.witness);
        }
    }
    std::cout << json{{"predicate", predicate}, {"result", result},
                      {"witness", witness}}
                     .dump()
              << "\n";
    return result ? kExitSuccess : kExitCheckFailure;
}

int run_verify(std::uint64_t seed, int max_points, int trials,
               const std::vector<std::string>& only_checks, const std::string& report_path,
               const std::string& format) {
    InstancePool pool = build_pool(seed, max_points, trials);
    Report report = verify_suite(pool, only_checks);
    if (format == "full") std::cout << report.to_json().dump(2) << "\n";
    else std::cout << report.summary_table();
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot write report to " << report_path << "\n";
            return kExitUsage;
        }
        out << report.to_json().dump(2) << "\n";
    }
    return report.all_pass() ? kExitSuccess : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for bornological convergence on finite hyperspaces"};
    app.require_subcommand(1);

    OpSelection closure_sel, reflect_sel, check_sel;
    std::string closure_family, reflect_family, check_family;

    CLI::App* closure = app.add_subcommand("closure", "evaluate a closure operator");
    add_op_options(closure, closure_sel);
    closure->add_option("--family", closure_family, "family instance file")->required();

    CLI::App* reflect = app.add_subcommand(
        "reflect", "idempotent hull of a family, or the reflection's open sets");
    add_op_options(reflect, reflect_sel);
    reflect->add_option("--family", reflect_family, "family instance file");

    std::string derive, ideal_space, ideal_ideal;
    CLI::App* ideal = app.add_subcommand("ideal", "derive an ideal");
    ideal->add_option("--derive", derive, "derived ideal")
        ->required()
        ->check(CLI::IsMember({"tb", "plus", "hat", "star", "minus"}));
    ideal->add_option("--space", ideal_space, "space instance file")->required();
    ideal->add_option("--ideal", ideal_ideal, "ideal instance file")->required();

    std::string predicate;
    CLI::App* check = app.add_subcommand("check", "evaluate a predicate");
    check->add_option("--predicate", predicate, "predicate")
        ->required()
        ->check(CLI::IsMember({"club", "stable", "open", "topological"}));
    add_op_options(check, check_sel, false);
    check->add_option("--op", check_sel.op, "operator (for open/topological)")
        ->check(CLI::IsMember({"metric-lower", "metric-upper", "metric-both",
                               "born-lower", "born-upper", "born-both", "tau",
                               "lower-mod", "upper-mod"}));
    check->add_option("--family", check_family, "family instance file");

    std::uint64_t seed = kDefaultSeed;
    int max_points = 3;
    int trials = 200;
    std::vector<std::string> only_checks;
    std::string report_path, format = "summary";
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--seed", seed, "pool seed (default 7)");
    verify->add_option("--max-points", max_points, "largest ground space")
        ->check(CLI::Range(1, 5));
    verify->add_option("--trials", trials, "sampled families per sampled pool")
        ->check(CLI::Range(1, 1000000));
    verify->add_option("--check", only_checks, "restrict to these check ids");
    verify->add_option("--report", report_path, "write the machine report here");
    verify->add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"summary", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (closure->parsed()) return run_closure(closure_sel, closure_family);
        if (reflect->parsed()) return run_reflect(reflect_sel, reflect_family);
        if (ideal->parsed()) return run_ideal(derive, ideal_space, ideal_ideal);
        if (check->parsed()) return run_check(predicate, check_sel, check_family);
        return run_verify(seed, max_points, trials, only_checks, report_path, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
