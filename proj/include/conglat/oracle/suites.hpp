#pragma once

// Seeded oracle suites: each compares a library route against the
// brute-force references in brute.hpp over a randomized corpus.
//
// Case i of a suite draws from its own generator seeded by (seed, i), so the
// outcome does not depend on how cases are spread over worker threads.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "conglat/antichain.hpp"
#include "conglat/crt.hpp"
#include "conglat/divisibility.hpp"
#include "conglat/error.hpp"
#include "conglat/filter_lab.hpp"
#include "conglat/oracle/brute.hpp"
#include "conglat/periodic_set.hpp"
#include "conglat/residue_geometry.hpp"

namespace conglat::oracle {

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::uint64_t planned = 0;
    std::uint64_t mismatches = 0;
    double wall_seconds = 0;
    bool truncated = false;
    // first few mismatches, ordered by case index
    std::vector<std::string> examples;

    bool clean() const { return mismatches == 0 && !truncated; }
};

struct RunOptions {
    std::uint64_t seed = 42;
    std::chrono::milliseconds budget{60'000};
    unsigned threads = 0;  // 0: hardware concurrency
};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index)
{
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

using CaseFn = std::function<std::optional<std::string>(std::uint64_t index)>;

inline SuiteReport run_cases(const std::string& name, std::uint64_t count, const RunOptions& opts, const CaseFn& run_case)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto deadline = start + opts.budget;

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> done{0};
    std::atomic<bool> out_of_time{false};
    std::mutex mu;
    std::vector<std::pair<std::uint64_t, std::string>> bad;

    auto worker = [&] {
        for (;;) {
            if (clock::now() > deadline) {
                out_of_time = true;
                return;
            }
            const std::uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            std::optional<std::string> mismatch;
            try {
                mismatch = run_case(i);
            } catch (const std::exception& e) {
                mismatch = std::string("exception: ") + e.what();
            }
            ++done;
            if (mismatch) {
                std::lock_guard lock(mu);
                bad.emplace_back(i, std::move(*mismatch));
            }
        }
    };

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(bad.begin(), bad.end());
    SuiteReport report;
    report.suite = name;
    report.seed = opts.seed;
    report.planned = count;
    report.cases = done;
    report.mismatches = bad.size();
    report.truncated = out_of_time && done < count;
    for (std::size_t k = 0; k < bad.size() && k < 10; ++k)
        report.examples.push_back("case " + std::to_string(bad[k].first) + ": " + bad[k].second);
    report.wall_seconds = std::chrono::duration<double>(clock::now() - start).count();
    return report;
}

// --- crt --------------------------------------------------------------------

// Random systems of at most three congruences with moduli <= 30: batch,
// stream, shuffled stream and pairwise compatibility against a scan of
// [0, lcm).
inline SuiteReport crt_suite(const RunOptions& opts, std::uint64_t count = 10'000)
{
    return run_cases("crt", count, opts, [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(opts.seed, i);
        const auto k = uniform(rng, 0, 3);
        std::vector<Congruence> system;
        std::vector<brute::Constraint> raw;
        for (std::uint64_t j = 0; j < k; ++j) {
            const auto m = uniform(rng, 1, 30);
            const auto a = uniform(rng, 0, m - 1);
            system.push_back(Congruence::make(m, a));
            raw.push_back({m, a});
        }
        std::ostringstream desc;
        for (const auto& c : raw) desc << "(" << c.modulus << "," << c.residue << ")";

        const auto fast = solve_system(system);
        const auto slow = brute::solve(raw);
        if (fast.has_value() != slow.has_value()) return "feasibility differs on " + desc.str();
        if (fast && (fast->modulus != slow->first || fast->residue != slow->second))
            return "solution differs on " + desc.str();

        FeasibilityStream stream;
        for (const auto& c : system) stream.push(c);
        if (stream.state() != fast) return "stream disagrees with batch on " + desc.str();

        std::shuffle(system.begin(), system.end(), rng);
        FeasibilityStream shuffled;
        for (const auto& c : system) shuffled.push(c);
        if (shuffled.state() != fast) return "push order changed the result on " + desc.str();

        bool pairwise = true;
        for (std::size_t a = 0; a < raw.size(); ++a)
            for (std::size_t b = a + 1; b < raw.size(); ++b)
                if (!brute::solve({raw[a], raw[b]})) pairwise = false;
        if (pairwise != fast.has_value()) return "pairwise compatibility differs on " + desc.str();
        return std::nullopt;
    });
}

// --- geom -------------------------------------------------------------------

// For every prime p <= 31: the structure-route recognizer against the
// exhaustive (s, r) family, on the whole family and on random subsets.
inline SuiteReport geom_suite(const RunOptions& opts, std::uint64_t random_per_prime = 10'000)
{
    const auto primes = brute::primes_up_to(31);
    std::vector<std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>>> families;
    for (auto p : primes) families.push_back(brute::geometric_family(p));
    const std::uint64_t per_prime = random_per_prime + 1;

    auto check = [](std::uint64_t p, const std::vector<std::uint64_t>& subset,
                    const std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>>& family)
        -> std::optional<std::string> {
        std::ostringstream desc;
        desc << "p=" << p << " S={";
        for (auto x : subset) desc << x << ",";
        desc << "}";
        const ResidueSet rs(p, subset);
        const auto got = is_geometric(rs);
        const auto it = family.find(subset);
        if (got.has_value() != (it != family.end())) return "recognition differs on " + desc.str();
        if (got && (got->seed != it->second.first || got->ratio != it->second.second))
            return "descriptor differs on " + desc.str();
        if (!rs.contains(0)) {
            const bool structured = structure_check(rs).all();
            if (structured != got.has_value()) return "structure properties disagree with recognition on " + desc.str();
        }
        return std::nullopt;
    };

    return run_cases("geom", primes.size() * per_prime, opts, [&](std::uint64_t i) -> std::optional<std::string> {
        const std::size_t pi = i / per_prime;
        const std::uint64_t p = primes[pi];
        const auto& family = families[pi];
        if (i % per_prime == 0) {
            for (const auto& [subset, sr] : family)
                if (auto bad = check(p, subset, family)) return bad;
            std::vector<std::vector<std::uint64_t>> enumerated;
            for (const auto& rs : enumerate_geometric(p)) enumerated.push_back(rs.elements());
            std::vector<std::vector<std::uint64_t>> expected;
            for (const auto& [subset, sr] : family) expected.push_back(subset);
            if (enumerated != expected) return "enumerate_geometric differs for p=" + std::to_string(p);
            return std::nullopt;
        }
        auto rng = case_rng(opts.seed, i);
        const auto size = uniform(rng, 1, p);
        std::vector<std::uint64_t> all(p);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::uint64_t> subset(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(subset.begin(), subset.end());
        return check(p, subset, family);
    });
}

// --- upward -----------------------------------------------------------------

inline std::vector<bool> random_pattern(std::mt19937_64& rng, std::uint64_t m)
{
    std::vector<bool> pattern(m, false);
    switch (uniform(rng, 0, 2)) {
    case 0:
        for (std::uint64_t x = 0; x < m; ++x) pattern[x] = uniform(rng, 0, 1) == 1;
        break;
    default: {
        // multiples of a few random divisors of m, sometimes with one flip
        const auto picks = uniform(rng, 1, 3);
        for (std::uint64_t k = 0; k < picks; ++k) {
            std::uint64_t d;
            do d = uniform(rng, 1, m);
            while (m % d != 0);
            for (std::uint64_t x = 0; x < m; x += d) pattern[x] = true;
        }
        if (uniform(rng, 0, 1) == 1) {
            const auto x = uniform(rng, 0, m - 1);
            pattern[x] = !pattern[x];
        }
    }
    }
    return pattern;
}

// is_upward_closed on random pure sets with period <= 36 against a scan of
// multiples up to 10 m^2.
inline SuiteReport upward_suite(const RunOptions& opts, std::uint64_t count = 1'000)
{
    return run_cases("upward", count, opts, [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(opts.seed, i);
        const auto m = uniform(rng, 1, 36);
        const auto pattern = random_pattern(rng, m);
        std::vector<Integer> rs;
        for (std::uint64_t x = 0; x < m; ++x)
            if (pattern[x]) rs.emplace_back(x);
        const auto set = PeriodicSet::make(m, rs);
        if (is_upward_closed(set) != brute::upward_closed(pattern)) {
            std::ostringstream desc;
            desc << "m=" << m << " R={";
            for (const auto& r : rs) desc << r << ",";
            desc << "}";
            return "upward-closedness differs on " + desc.str();
        }
        return std::nullopt;
    });
}

// --- fip --------------------------------------------------------------------

struct RandomMember {
    PeriodicSet set;
    brute::RawSet raw;
};

inline RandomMember random_member(std::mt19937_64& rng, std::uint64_t max_modulus)
{
    brute::RawSet raw;
    raw.modulus = uniform(rng, 1, max_modulus);
    raw.pattern.assign(raw.modulus, false);
    switch (uniform(rng, 0, 3)) {
    case 0:  // progression
        raw.pattern[uniform(rng, 0, raw.modulus - 1)] = true;
        break;
    case 1:  // random residues
        for (std::uint64_t x = 0; x < raw.modulus; ++x) raw.pattern[x] = uniform(rng, 0, 2) != 0;
        break;
    case 2:  // non-divisibility
        for (std::uint64_t x = 1; x < raw.modulus; ++x) raw.pattern[x] = true;
        break;
    default:  // multiples of a divisor
        for (std::uint64_t d = uniform(rng, 1, raw.modulus); ; d = uniform(rng, 1, raw.modulus))
            if (raw.modulus % d == 0) {
                for (std::uint64_t x = 0; x < raw.modulus; x += d) raw.pattern[x] = true;
                break;
            }
    }
    if (uniform(rng, 0, 2) == 0) {
        const auto edits = uniform(rng, 1, 3);
        for (std::uint64_t k = 0; k < edits; ++k) {
            const auto x = uniform(rng, 0, 60);
            if (std::find(raw.added.begin(), raw.added.end(), x) != raw.added.end() ||
                std::find(raw.removed.begin(), raw.removed.end(), x) != raw.removed.end())
                continue;
            (uniform(rng, 0, 1) == 0 ? raw.added : raw.removed).push_back(x);
        }
    }
    std::vector<Integer> rs, add, rem;
    for (std::uint64_t x = 0; x < raw.modulus; ++x)
        if (raw.pattern[x]) rs.emplace_back(x);
    for (auto x : raw.added) add.emplace_back(x);
    for (auto x : raw.removed) rem.emplace_back(x);
    return {PeriodicSet::make(raw.modulus, rs, add, rem), std::move(raw)};
}

// has_fip on random bases of at most five members with moduli <= 24 against
// a common-element scan; on FIP bases also checks that feasible_residues is
// nonempty for every m <= 30, and equal to a scan when periods are small.
inline SuiteReport fip_suite(const RunOptions& opts, std::uint64_t count = 1'000)
{
    return run_cases("fip", count, opts, [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(opts.seed, i);
        const auto k = uniform(rng, 0, 5);
        std::vector<PeriodicSet> members;
        std::vector<brute::RawSet> raws;
        for (std::uint64_t j = 0; j < k; ++j) {
            auto [set, raw] = random_member(rng, 24);
            members.push_back(std::move(set));
            raws.push_back(std::move(raw));
        }
        const bool fast = has_fip(members);
        const bool slow = brute::infinite_intersection(raws);
        if (fast != slow) return "has_fip differs with " + std::to_string(k) + " members";
        if (!fast) return std::nullopt;
        if (std::any_of(members.begin(), members.end(), [](const PeriodicSet& s) { return s.is_empty(); }))
            return "FIP family with an empty member";

        const FilterBase base(members);
        std::uint64_t period = 1, edge = 0;
        for (const auto& r : raws) {
            period = std::lcm(period, r.modulus);
            edge = std::max(edge, r.max_edit());
        }
        for (std::uint64_t m = 2; m <= 30; ++m) {
            const auto residues = feasible_residues(base, m);
            if (residues.empty()) return "feasible_residues empty for m=" + std::to_string(m);
            const std::uint64_t window = std::lcm(period, m);
            if (window > 5'000) continue;
            std::vector<bool> seen(m, false);
            for (std::uint64_t x = edge + 1; x <= edge + window; ++x) {
                bool all = true;
                for (const auto& r : raws)
                    if (!r.contains(x)) {
                        all = false;
                        break;
                    }
                if (all) seen[x % m] = true;
            }
            std::vector<std::uint64_t> expected;
            for (std::uint64_t r = 0; r < m; ++r)
                if (seen[r]) expected.push_back(r);
            if (expected != residues) return "feasible_residues differs from scan for m=" + std::to_string(m);
        }
        return std::nullopt;
    });
}

// --- antichain --------------------------------------------------------------

inline std::vector<Integer> random_chain(std::mt19937_64& rng, std::uint64_t p, std::size_t depth)
{
    // digits below the first nonzero level are zero
    const auto first_nonzero = uniform(rng, 1, 2);
    std::vector<Integer> chain;
    Integer value = 0, power = 1;
    for (std::size_t n = 1; n <= depth; ++n) {
        std::uint64_t digit = 0;
        if (n == first_nonzero) digit = uniform(rng, 1, p - 1);
        else if (n > first_nonzero) digit = uniform(rng, 0, p - 1);
        value += power * digit;
        power *= p;
        chain.push_back(value);
    }
    return chain;
}

inline AntichainSpec random_antichain_spec(std::mt19937_64& rng, std::size_t& last_index)
{
    std::vector<std::uint64_t> t_pool{3, 5, 7, 11, 13};
    std::vector<std::uint64_t> q_pool{2, 17, 19, 23};
    std::shuffle(t_pool.begin(), t_pool.end(), rng);
    std::shuffle(q_pool.begin(), q_pool.end(), rng);
    const auto t_count = uniform(rng, 2, 4);
    const auto q_count = uniform(rng, 1, 2);
    last_index = uniform(rng, 0, std::min<std::uint64_t>(4, t_count - 1));

    AntichainSpec spec;
    for (std::uint64_t i = 0; i < t_count; ++i)
        spec.t.push_back({t_pool[i], random_chain(rng, t_pool[i], 2 + last_index)});
    for (std::uint64_t j = 0; j < q_count; ++j) spec.q.emplace_back(q_pool[j]);
    const bool room = spec.t.size() >= 2 * last_index;
    spec.substitution = room && uniform(rng, 0, 1) == 1 ? Substitution::safe : Substitution::strict;
    return spec;
}

// build on random specs passes verify, and each step is the least solution
// above its predecessor whenever the step period is at most 10^6.
inline SuiteReport antichain_suite(const RunOptions& opts, std::uint64_t count = 100)
{
    return run_cases("antichain", count, opts, [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(opts.seed, i);
        std::size_t last = 0;
        const auto spec = random_antichain_spec(rng, last);
        const auto prefix = build(spec, last);
        const auto report = verify(prefix, spec);
        if (!report.passed()) return "verify failed: " + report.failures.front();
        if (build(spec, last) != prefix) return "build is not deterministic";

        const auto s = s_values(spec);
        std::uint64_t previous = 0;
        for (std::size_t n = 0; n <= last; ++n) {
            std::vector<brute::Constraint> raw;
            std::uint64_t period = 1;
            bool small = true;
            for (const auto& c : step_system(spec, s, n)) {
                if (c.modulus > 1'000'000) {
                    small = false;
                    break;
                }
                raw.push_back({c.modulus.convert_to<std::uint64_t>(), c.residue.convert_to<std::uint64_t>()});
                period = std::lcm(period, raw.back().modulus);
                if (period > 1'000'000) small = false;
            }
            if (!small) break;
            const auto expected = brute::least_above(raw, previous, previous + period);
            if (!expected || Integer(*expected) != prefix.values[n])
                return "a_" + std::to_string(n) + " is not the least solution";
            previous = *expected;
        }
        return std::nullopt;
    });
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"crt", "geom", "upward", "fip", "antichain"};
    return names;
}

// Throws DomainError for an unknown suite name.
inline SuiteReport run_suite(const std::string& name, const RunOptions& opts)
{
    if (name == "crt") return crt_suite(opts);
    if (name == "geom") return geom_suite(opts);
    if (name == "upward") return upward_suite(opts);
    if (name == "fip") return fip_suite(opts);
    if (name == "antichain") return antichain_suite(opts);
    throw DomainError("unknown oracle suite '" + name + "'");
}

} // namespace conglat::oracle
