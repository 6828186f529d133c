#pragma once

// Command-line front end. Each leaf subcommand decodes its arguments, calls
// exactly one library operation and prints the JSON result.
//
// Exit codes: 0 success, 1 negative result when --fail-on-infeasible is
// given, 2 usage or input errors, 3 work budget exceeded, 4 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conglat/antichain.hpp"
#include "conglat/crt.hpp"
#include "conglat/divisibility.hpp"
#include "conglat/error.hpp"
#include "conglat/filter_lab.hpp"
#include "conglat/json_io.hpp"
#include "conglat/oracle/suites.hpp"
#include "conglat/periodic_set.hpp"
#include "conglat/residue_geometry.hpp"

namespace conglat::cli {

using nlohmann::json;
using json_io::ParseError;

enum ExitCode : int { ok = 0, negative = 1, usage = 2, budget = 3, internal = 4 };

struct Route {
    std::string command;    // e.g. "crt solve"
    std::string operation;  // library operation it reaches
};

// Every leaf subcommand and the one operation behind it.
inline const std::vector<Route>& dispatch_table()
{
    static const std::vector<Route> routes{
        {"crt solve", "solve_system"},
        {"crt pair", "solve_pair"},
        {"crt stream", "stream_push"},
        {"crt classify", "classify_prime_support"},
        {"geom expand", "expand"},
        {"geom check", "is_geometric"},
        {"geom enum", "enumerate_geometric"},
        {"geom proot", "primitive_root"},
        {"geom order", "multiplicative_order"},
        {"geom dlog", "discrete_log"},
        {"geom offsets", "exponent_offsets"},
        {"geom structure", "structure_check"},
        {"geom dirichlet", "prime_in_progression"},
        {"geom witness", "witness_class_set"},
        {"lattice make", "make"},
        {"lattice member", "member"},
        {"lattice intersect", "intersect"},
        {"lattice union", "union"},
        {"lattice complement", "complement"},
        {"lattice difference", "difference"},
        {"lattice info", "is_empty/is_infinite"},
        {"lattice progression", "progression"},
        {"lattice divunion", "divisibility_union"},
        {"lattice nondiv", "non_divisibility"},
        {"lattice enum", "enumerate_up_to"},
        {"lattice up", "up_closure"},
        {"lattice down", "down_closure"},
        {"lattice antichain", "is_antichain"},
        {"lattice convex", "is_convex"},
        {"lattice hull", "convex_hull"},
        {"lattice omega", "omega"},
        {"lattice omega-lb", "omega_lower_bound"},
        {"lattice level", "level_members"},
        {"lattice upward", "is_upward_closed"},
        {"antichain s-values", "s_values"},
        {"antichain build", "build"},
        {"antichain verify", "verify"},
        {"filter fip", "has_fip"},
        {"filter extend", "extend"},
        {"filter residues", "feasible_residues"},
        {"filter congruent", "congruent_mod"},
        {"filter divides", "divides_check"},
        {"filter nmax", "nmax_witness"},
        {"oracle run", "oracle_run"},
    };
    return routes;
}

// Inline JSON if the text starts with '[' or '{', standard input for "-",
// otherwise a file path.
inline json load_json(const std::string& arg, const std::string& field)
{
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return json_io::parse_text(arg, field);
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError(field, "cannot open '" + arg + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return json_io::parse_text(text, field);
}

inline Integer parse_int_arg(const std::string& text, const std::string& field)
{
    try {
        return parse_integer(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(field, e.what());
    }
}

inline std::uint64_t parse_u64_arg(const std::string& text, const std::string& field)
{
    const Integer v = parse_int_arg(text, field);
    if (!fits_u64(v)) throw ParseError(field, "expected a non-negative 64-bit integer");
    return v.convert_to<std::uint64_t>();
}

// "1,4,7" -> {1, 4, 7}; also accepts a JSON array.
inline std::vector<Integer> parse_list_arg(const std::string& text, const std::string& field)
{
    if (text.find('[') != std::string::npos) return json_io::decode_integers(json_io::parse_text(text, field), field);
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        if (b == std::string::npos) continue;
        out.push_back(parse_int_arg(item.substr(b, e - b + 1), field + "[" + std::to_string(i++) + "]"));
    }
    return out;
}

inline std::vector<std::uint64_t> to_u64s(const std::vector<Integer>& xs, const std::string& field)
{
    std::vector<std::uint64_t> out;
    for (const auto& x : xs) {
        if (!fits_u64(x)) throw ParseError(field, "value " + x.str() + " out of range");
        out.push_back(x.convert_to<std::uint64_t>());
    }
    return out;
}

inline std::chrono::milliseconds parse_duration(const std::string& text)
{
    std::size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("budget", "expected a duration like 60s, 500ms or 2m");
    }
    const std::string unit = text.substr(pos);
    double ms;
    if (unit.empty() || unit == "s") ms = value * 1000;
    else if (unit == "ms") ms = value;
    else if (unit == "m") ms = value * 60'000;
    else throw ParseError("budget", "unknown unit '" + unit + "'");
    if (ms < 0) throw ParseError("budget", "must be non-negative");
    return std::chrono::milliseconds(static_cast<std::int64_t>(ms));
}

inline std::uint64_t default_seed()
{
    if (const char* env = std::getenv("CONGRUENCE_LATTICE_SEED")) return parse_u64_arg(env, "CONGRUENCE_LATTICE_SEED");
    return 42;
}

inline json encode_report(const oracle::SuiteReport& r)
{
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"cases", r.cases},
            {"planned", r.planned},
            {"mismatches", r.mismatches},
            {"truncated", r.truncated},
            {"wall_seconds", r.wall_seconds},
            {"examples", r.examples}};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Congruence, divisibility and residue-geometry toolkit", "conglat"};
    app.require_subcommand(1);
    std::string output = "json";
    app.add_option("--output", output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

    json result;
    int code = ok;
    bool fail_on_negative = false;
    auto negative_if = [&](bool is_negative) {
        if (is_negative && fail_on_negative) code = negative;
    };

    // ---- crt
    auto* crt = app.add_subcommand("crt", "congruence systems")->require_subcommand(1);
    std::string system_arg, c1_arg, c2_arg, table_arg;
    {
        auto* cmd = crt->add_subcommand("solve", "solve a congruence system");
        cmd->add_option("system", system_arg, "JSON array of {\"m\":..,\"a\":..}")->required();
        cmd->add_flag("--fail-on-infeasible", fail_on_negative);
        cmd->callback([&] {
            const auto sys = json_io::decode_system(load_json(system_arg, "system"), "system");
            const auto sol = solve_system(sys);
            result = json_io::encode_solution(sol);
            negative_if(!sol);
        });
    }
    {
        auto* cmd = crt->add_subcommand("pair", "merge two congruences");
        cmd->add_option("first", c1_arg)->required();
        cmd->add_option("second", c2_arg)->required();
        cmd->add_flag("--fail-on-infeasible", fail_on_negative);
        cmd->callback([&] {
            const auto a = json_io::decode_system(json::array({load_json(c1_arg, "first")}), "first");
            const auto b = json_io::decode_system(json::array({load_json(c2_arg, "second")}), "second");
            const auto sol = solve_pair(a.front(), b.front());
            result = json_io::encode_solution(sol);
            negative_if(!sol);
        });
    }
    {
        auto* cmd = crt->add_subcommand("stream", "push congruences one at a time, reporting each state");
        cmd->add_option("system", system_arg)->required();
        cmd->add_flag("--fail-on-infeasible", fail_on_negative);
        cmd->callback([&] {
            const auto sys = json_io::decode_system(load_json(system_arg, "system"), "system");
            FeasibilityStream stream;
            json states = json::array();
            for (const auto& c : sys) states.push_back(json_io::encode_solution(stream.push(c)));
            result = {{"states", states}, {"final", json_io::encode_solution(stream.state())}};
            negative_if(!stream.feasible());
        });
    }
    {
        auto* cmd = crt->add_subcommand("classify", "classify primes of a residue chain table");
        cmd->add_option("table", table_arg, "JSON object prime -> chain, a file, or -")->required();
        cmd->callback([&] {
            const auto table = json_io::decode_chain_table(load_json(table_arg, "table"), "table");
            result = json_io::encode(classify_prime_support(table));
        });
    }

    // ---- geom
    auto* geom = app.add_subcommand("geom", "geometric sets of residues mod a prime")->require_subcommand(1);
    std::string p_arg, s_arg, r_arg, set_arg, a_arg, base_arg, x_arg, m_arg, count_arg;
    auto residue_set = [&] {
        const auto p = parse_u64_arg(p_arg, "p");
        const auto xs = to_u64s(parse_list_arg(set_arg, "set"), "set");
        return json_io::with_field("set", [&] { return ResidueSet(p, xs); });
    };
    {
        auto* cmd = geom->add_subcommand("expand", "expand a (seed, ratio) descriptor");
        cmd->add_option("-p", p_arg)->required();
        cmd->add_option("-s", s_arg)->required();
        cmd->add_option("-r", r_arg)->required();
        cmd->callback([&] {
            const GeometricDescriptor d{parse_u64_arg(p_arg, "p"), parse_u64_arg(s_arg, "s"), parse_u64_arg(r_arg, "r")};
            result = json_io::encode(expand(d));
        });
    }
    {
        auto* cmd = geom->add_subcommand("check", "decide whether a residue set is geometric");
        cmd->add_option("-p", p_arg)->required();
        cmd->add_option("--set", set_arg)->required();
        cmd->callback([&] {
            const auto d = is_geometric(residue_set());
            result = d ? json{{"geometric", true}, {"p", d->p}, {"s", d->seed}, {"r", d->ratio}} : json{{"geometric", false}};
        });
    }
    {
        auto* cmd = geom->add_subcommand("enum", "all geometric sets mod p");
        cmd->add_option("-p", p_arg)->required();
        cmd->callback([&] {
            json sets = json::array();
            for (const auto& rs : enumerate_geometric(parse_u64_arg(p_arg, "p"))) sets.push_back(rs.elements());
            result = {{"p", parse_u64_arg(p_arg, "p")}, {"sets", sets}};
        });
    }
    {
        auto* cmd = geom->add_subcommand("proot", "least primitive root");
        cmd->add_option("-p", p_arg)->required();
        cmd->callback([&] { result = {{"p", parse_u64_arg(p_arg, "p")}, {"root", primitive_root(parse_u64_arg(p_arg, "p"))}}; });
    }
    {
        auto* cmd = geom->add_subcommand("order", "multiplicative order of a mod p");
        cmd->add_option("-p", p_arg)->required();
        cmd->add_option("-a", a_arg)->required();
        cmd->callback([&] { result = {{"order", multiplicative_order(parse_u64_arg(p_arg, "p"), parse_u64_arg(a_arg, "a"))}}; });
    }
    {
        auto* cmd = geom->add_subcommand("dlog", "least k >= 1 with base^k = x mod p");
        cmd->add_option("-p", p_arg)->required();
        cmd->add_option("--base", base_arg)->required();
        cmd->add_option("-x", x_arg)->required();
        cmd->add_flag("--fail-on-infeasible", fail_on_negative);
        cmd->callback([&] {
            const auto k = discrete_log(parse_u64_arg(p_arg, "p"), parse_u64_arg(base_arg, "base"), parse_u64_arg(x_arg, "x"));
            result = k ? json{{"k", *k}} : json{{"no_solution", true}};
            negative_if(!k);
        });
    }
    {
        auto* cmd = geom->add_subcommand("offsets", "discrete-log exponents and offsets of a residue set");
        cmd->add_option("-p", p_arg)->required();
        cmd->add_option("--set", set_arg)->required();
        cmd->callback([&] { result = json_io::encode(exponent_offsets(residue_set())); });
    }
    {
        auto* cmd = geom->add_subcommand("structure", "gcd / multiples / progression properties of the offsets");
        cmd->add_option("-p", p_arg)->required();
        cmd->add_option("--set", set_arg)->required();
        cmd->callback([&] { result = json_io::encode(structure_check(residue_set())); });
    }
    {
        auto* cmd = geom->add_subcommand("dirichlet", "least prime congruent to r mod m");
        cmd->add_option("-m", m_arg)->required();
        cmd->add_option("-r", r_arg)->required();
        cmd->callback([&] {
            result = {{"prime", json_io::encode(prime_in_progression(parse_int_arg(m_arg, "m"), parse_int_arg(r_arg, "r")))}};
        });
    }
    {
        auto* cmd = geom->add_subcommand("witness", "first elements of {s*b^k} for primes s = s0, b = r mod p");
        cmd->add_option("-p", p_arg)->required();
        cmd->add_option("--s0", s_arg)->required();
        cmd->add_option("-r", r_arg)->required();
        cmd->add_option("--count", count_arg)->default_str("5");
        count_arg = "5";
        cmd->callback([&] {
            const auto xs = witness_class_set(parse_u64_arg(p_arg, "p"), parse_u64_arg(s_arg, "s0"), parse_u64_arg(r_arg, "r"),
                                              parse_u64_arg(count_arg, "count"));
            result = {{"elements", json_io::encode(xs)}};
        });
    }

    // ---- lattice
    auto* lattice = app.add_subcommand("lattice", "periodic sets and the divisibility order")->require_subcommand(1);
    std::string set_a, set_b, n_arg, bound_arg, ns_arg, l_arg, primes_arg;
    std::uint64_t factor_budget = default_factor_budget;
    auto periodic = [&](const std::string& arg, const std::string& field) {
        return json_io::decode_periodic_set(load_json(arg, field), field);
    };
    auto finite = [&](const std::string& field) {
        return json_io::with_field(field, [&] { return FiniteSet(parse_list_arg(set_arg, field)); });
    };
    {
        auto* cmd = lattice->add_subcommand("make", "canonical form of a periodic set");
        cmd->add_option("set", set_a)->required();
        cmd->callback([&] { result = json_io::encode(periodic(set_a, "set")); });
    }
    {
        auto* cmd = lattice->add_subcommand("member", "membership test");
        cmd->add_option("set", set_a)->required();
        cmd->add_option("-n", n_arg)->required();
        cmd->callback([&] { result = {{"member", member(periodic(set_a, "set"), parse_int_arg(n_arg, "n"))}}; });
    }
    {
        auto* cmd = lattice->add_subcommand("intersect", "intersection of two periodic sets");
        cmd->add_option("left", set_a)->required();
        cmd->add_option("right", set_b)->required();
        cmd->callback([&] { result = json_io::encode(intersect(periodic(set_a, "left"), periodic(set_b, "right"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("union", "union of two periodic sets");
        cmd->add_option("left", set_a)->required();
        cmd->add_option("right", set_b)->required();
        cmd->callback([&] { result = json_io::encode(unite(periodic(set_a, "left"), periodic(set_b, "right"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("complement", "complement in the non-negative integers");
        cmd->add_option("set", set_a)->required();
        cmd->callback([&] { result = json_io::encode(complement(periodic(set_a, "set"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("difference", "elements of the first set not in the second");
        cmd->add_option("left", set_a)->required();
        cmd->add_option("right", set_b)->required();
        cmd->callback([&] { result = json_io::encode(difference(periodic(set_a, "left"), periodic(set_b, "right"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("info", "emptiness and infiniteness");
        cmd->add_option("set", set_a)->required();
        cmd->callback([&] {
            const auto s = periodic(set_a, "set");
            result = {{"empty", s.is_empty()}, {"infinite", s.is_infinite()}};
        });
    }
    {
        auto* cmd = lattice->add_subcommand("progression", "m*N + r");
        cmd->add_option("-m", m_arg)->required();
        cmd->add_option("-r", r_arg)->required();
        cmd->callback([&] { result = json_io::encode(progression(parse_int_arg(m_arg, "m"), parse_int_arg(r_arg, "r"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("divunion", "union of n*N over a list of n");
        cmd->add_option("--ns", ns_arg)->required();
        cmd->callback([&] { result = json_io::encode(divisibility_union(parse_list_arg(ns_arg, "ns"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("nondiv", "complement of n*N");
        cmd->add_option("-n", n_arg)->required();
        cmd->callback([&] { result = json_io::encode(non_divisibility(parse_int_arg(n_arg, "n"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("enum", "elements up to a bound");
        cmd->add_option("set", set_a)->required();
        cmd->add_option("--bound", bound_arg)->required();
        cmd->callback([&] { result = json_io::encode(enumerate_up_to(periodic(set_a, "set"), parse_int_arg(bound_arg, "bound"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("up", "upward closure of a finite set");
        cmd->add_option("--set", set_arg)->required();
        cmd->callback([&] { result = json_io::encode(up_closure(finite("set"))); });
    }
    {
        auto* cmd = lattice->add_subcommand("down", "all divisors of a finite set");
        cmd->add_option("--set", set_arg)->required();
        cmd->add_option("--factor-budget", factor_budget);
        cmd->callback([&] { result = json_io::encode(down_closure(finite("set"), factor_budget)); });
    }
    {
        auto* cmd = lattice->add_subcommand("antichain", "no element divides another");
        cmd->add_option("--set", set_arg)->required();
        cmd->callback([&] { result = {{"antichain", is_antichain(finite("set"))}}; });
    }
    {
        auto* cmd = lattice->add_subcommand("convex", "convexity in the divisibility order");
        cmd->add_option("--set", set_arg)->required();
        cmd->add_option("--factor-budget", factor_budget);
        cmd->callback([&] { result = {{"convex", is_convex(finite("set"), factor_budget)}}; });
    }
    {
        auto* cmd = lattice->add_subcommand("hull", "least convex superset");
        cmd->add_option("--set", set_arg)->required();
        cmd->add_option("--factor-budget", factor_budget);
        cmd->callback([&] { result = json_io::encode(convex_hull(finite("set"), factor_budget)); });
    }
    {
        auto* cmd = lattice->add_subcommand("omega", "number of prime factors with multiplicity");
        cmd->add_option("-n", n_arg)->required();
        cmd->add_option("--factor-budget", factor_budget);
        cmd->callback([&] { result = {{"omega", omega(parse_int_arg(n_arg, "n"), factor_budget)}}; });
    }
    {
        auto* cmd = lattice->add_subcommand("omega-lb", "prime factors of n among the given primes");
        cmd->add_option("-n", n_arg)->required();
        cmd->add_option("--primes", primes_arg)->required();
        cmd->callback([&] {
            const auto primes = json_io::with_field("primes", [&] { return FiniteSet(parse_list_arg(primes_arg, "primes")); });
            result = {{"lower_bound", omega_lower_bound(parse_int_arg(n_arg, "n"), primes)}};
        });
    }
    {
        auto* cmd = lattice->add_subcommand("level", "integers up to a bound with exactly l prime factors");
        cmd->add_option("-l", l_arg)->required();
        cmd->add_option("--bound", bound_arg)->required();
        cmd->callback([&] {
            const auto l = parse_u64_arg(l_arg, "l");
            if (l > 64) throw ParseError("l", "level above 64 is empty below 2^64");
            result = json_io::encode(level_members(static_cast<unsigned>(l), parse_int_arg(bound_arg, "bound")));
        });
    }
    {
        auto* cmd = lattice->add_subcommand("upward", "is the set closed under multiples");
        cmd->add_option("set", set_a)->required();
        cmd->callback([&] {
            const auto s = periodic(set_a, "set");
            result = {{"upward_closed", json_io::with_field("set", [&] { return is_upward_closed(s); })}};
        });
    }

    // ---- antichain
    auto* anti = app.add_subcommand("antichain", "CRT antichain construction")->require_subcommand(1);
    std::string spec_arg, prefix_arg, substitution_arg;
    std::size_t last_index = 0;
    auto load_spec = [&] {
        auto spec = json_io::decode_antichain_spec(load_json(spec_arg, "spec"), "spec");
        if (substitution_arg == "strict") spec.substitution = Substitution::strict;
        if (substitution_arg == "safe") spec.substitution = Substitution::safe;
        return spec;
    };
    for (const char* name : {"s-values", "build", "verify"}) {
        auto* cmd = anti->add_subcommand(name);
        cmd->add_option("--spec", spec_arg, "spec JSON, a file, or -")->required();
        cmd->add_option("--substitution", substitution_arg)->check(CLI::IsMember({"strict", "safe"}));
        const std::string which = name;
        if (which == "build") cmd->add_option("-n", last_index, "index of the last element")->required();
        if (which == "verify") cmd->add_option("--prefix", prefix_arg)->required();
        cmd->callback([&, which] {
            const auto spec = load_spec();
            if (which == "s-values") {
                result = s_values(spec);
            } else if (which == "build") {
                result = json_io::encode(build(spec, last_index));
            } else {
                const auto prefix = json_io::decode_prefix(load_json(prefix_arg, "prefix"), "prefix");
                const auto report = verify(prefix, spec);
                result = json_io::encode(report);
            }
        });
    }

    // ---- filter
    auto* filter = app.add_subcommand("filter", "filter bases of periodic sets")->require_subcommand(1);
    std::string left_arg, right_arg, forbid_arg, pool_arg;
    auto load_members = [&](const std::string& arg, const std::string& field) {
        return json_io::decode_periodic_sets(load_json(arg, field), field);
    };
    auto load_base = [&](const std::string& arg, const std::string& field) {
        return json_io::decode_filter_base(load_json(arg, field), field);
    };
    {
        auto* cmd = filter->add_subcommand("fip", "does the family have the (infinite) finite intersection property");
        cmd->add_option("--base", base_arg)->required();
        cmd->add_flag("--fail-on-infeasible", fail_on_negative);
        cmd->callback([&] {
            const bool fip = has_fip(load_members(base_arg, "base"));
            result = {{"fip", fip}};
            negative_if(!fip);
        });
    }
    {
        auto* cmd = filter->add_subcommand("extend", "add a set to a base if it stays consistent");
        cmd->add_option("--base", base_arg)->required();
        cmd->add_option("--set", set_a)->required();
        cmd->add_flag("--fail-on-infeasible", fail_on_negative);
        cmd->callback([&] {
            const auto next = extend(load_base(base_arg, "base"), periodic(set_a, "set"));
            result = next ? json{{"base", json_io::encode(*next)}} : json{{"inconsistent", true}};
            negative_if(!next);
        });
    }
    {
        auto* cmd = filter->add_subcommand("residues", "residues mod m consistent with the base");
        cmd->add_option("--base", base_arg)->required();
        cmd->add_option("-m", m_arg)->required();
        cmd->callback([&] {
            result = {{"residues", feasible_residues(load_base(base_arg, "base"), parse_int_arg(m_arg, "m"))}};
        });
    }
    {
        auto* cmd = filter->add_subcommand("congruent", "compare two bases modulo m");
        cmd->add_option("--left", left_arg)->required();
        cmd->add_option("--right", right_arg)->required();
        cmd->add_option("-m", m_arg)->required();
        cmd->callback([&] {
            const auto v = congruent_mod(load_base(left_arg, "left"), load_base(right_arg, "right"), parse_int_arg(m_arg, "m"));
            result = {{"verdict", v == ResidueVerdict::congruent       ? "congruent"
                                  : v == ResidueVerdict::not_congruent ? "not_congruent"
                                                                       : "undetermined"}};
        });
    }
    {
        auto* cmd = filter->add_subcommand("divides", "necessary condition for divisibility between bases");
        cmd->add_option("--left", left_arg)->required();
        cmd->add_option("--right", right_arg)->required();
        cmd->add_flag("--fail-on-infeasible", fail_on_negative);
        cmd->callback([&] {
            const auto r = divides_check(load_base(left_arg, "left"), load_base(right_arg, "right"));
            switch (r.kind) {
            case DividesResult::Kind::passes: result = {{"result", "passes"}}; break;
            case DividesResult::Kind::vacuous: result = {{"result", "vacuous"}}; break;
            case DividesResult::Kind::fails:
                result = {{"result", "fails"}, {"witness", json_io::encode(*r.witness)}};
                negative_if(true);
                break;
            }
        });
    }
    {
        auto* cmd = filter->add_subcommand("nmax", "least x = r mod m, divisible by a pool element, avoiding forbidden divisors");
        cmd->add_option("-m", m_arg)->required();
        cmd->add_option("-r", r_arg)->required();
        cmd->add_option("--forbid", forbid_arg);
        cmd->add_option("--pool", pool_arg)->required();
        cmd->callback([&] {
            const auto x = nmax_witness(parse_int_arg(m_arg, "m"), parse_int_arg(r_arg, "r"), parse_list_arg(forbid_arg, "forbid"),
                                        parse_list_arg(pool_arg, "pool"));
            result = {{"witness", json_io::encode(x)}};
        });
    }

    // ---- oracle
    auto* orc = app.add_subcommand("oracle", "brute-force oracle suites")->require_subcommand(1);
    std::string suite_arg, seed_arg, budget_arg = "60s";
    unsigned threads = 0;
    {
        auto* cmd = orc->add_subcommand("run", "run one suite");
        cmd->add_option("--suite", suite_arg, "crt | geom | upward | fip | antichain")->required();
        cmd->add_option("--seed", seed_arg);
        cmd->add_option("--budget", budget_arg, "wall-clock budget, e.g. 60s");
        cmd->add_option("--threads", threads, "worker threads, 0 for all cores");
        cmd->callback([&] {
            oracle::RunOptions opts;
            opts.seed = seed_arg.empty() ? default_seed() : parse_u64_arg(seed_arg, "seed");
            opts.budget = parse_duration(budget_arg);
            opts.threads = threads;
            const auto report = oracle::run_suite(suite_arg, opts);
            result = encode_report(report);
            if (!report.clean()) code = negative;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return budget;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }

    out << (output == "pretty" ? result.dump(2) : result.dump()) << "\n";
    return code;
}

} // namespace conglat::cli
