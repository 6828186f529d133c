#pragma once

// Recursive CRT construction of an infinite antichain A = {a_0 < a_1 < ...}
// from residue chains at a sequence of primes t_0, t_1, ... and a sequence
// of "always divisible" primes q_0, q_1, .... The element a_n satisfies
//
//   (1) a_n = r_{t_i, s_i + n}  (mod t_i^(s_i + n))   for i < n
//   (2) t_n^(s_n) | a_n
//   (3) q_j^n | a_n                                   for j < min(n, |Q|)
//
// where s_i is the first depth at which t_i's chain is nonzero, and each a_n
// is the least such integer above a_{n-1}. (1) and (2) make the sequence an
// antichain; (3) pushes the number of prime factors of a_n to infinity.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "conglat/crt.hpp"
#include "conglat/divisibility.hpp"
#include "conglat/error.hpp"
#include "conglat/integer.hpp"

namespace conglat {

// What to do once the Q primes run out before step n does.
//   strict: condition (3) only ranges over the available q_j.
//   safe:   each missing q_j (j >= |Q|) is replaced by t_{n+j} to the first
//           power. Those primes carry no residue condition at step n, so the
//           system stays solvable, and later residue conditions only
//           constrain later elements.
enum class Substitution { strict, safe };

struct TPrime {
    Integer prime;
    std::vector<Integer> chain;  // r_{p,1}, r_{p,2}, ...
};

struct AntichainSpec {
    std::vector<TPrime> t;
    std::vector<Integer> q;
    Substitution substitution = Substitution::strict;
};

struct AntichainPrefix {
    std::vector<Integer> values;
    friend bool operator==(const AntichainPrefix&, const AntichainPrefix&) = default;
};

inline void validate(const AntichainSpec& spec)
{
    std::vector<Integer> primes;
    for (const auto& [p, chain] : spec.t) {
        validate_chain(p, chain);
        if (std::all_of(chain.begin(), chain.end(), [](const Integer& r) { return r == 0; }))
            throw DomainError("chain for t = " + p.str() + " has no nonzero entry, s is undefined");
        primes.push_back(p);
    }
    for (const auto& p : spec.q) {
        if (!is_prime(p)) throw DomainError("q = " + p.str() + " is not prime");
        primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    if (auto it = std::adjacent_find(primes.begin(), primes.end()); it != primes.end())
        throw DomainError("prime " + it->str() + " listed twice");
}

// s_i = least n with r_{t_i, n} != 0 (1-based depth).
inline std::vector<std::size_t> s_values(const AntichainSpec& spec)
{
    validate(spec);
    std::vector<std::size_t> out;
    for (const auto& tp : spec.t) {
        auto it = std::find_if(tp.chain.begin(), tp.chain.end(), [](const Integer& r) { return r != 0; });
        out.push_back(static_cast<std::size_t>(it - tp.chain.begin()) + 1);
    }
    return out;
}

// Index into spec.t of each prime substituted for a missing q_j at step n.
inline std::vector<std::size_t> substitute_indices(const AntichainSpec& spec, std::size_t n)
{
    std::vector<std::size_t> out;
    if (spec.substitution == Substitution::safe)
        for (std::size_t j = spec.q.size(); j < n; ++j) out.push_back(n + j);
    return out;
}

// The congruences defining a_n, in the order (1), (2), (3).
inline std::vector<Congruence> step_system(const AntichainSpec& spec, const std::vector<std::size_t>& s, std::size_t n)
{
    if (n >= spec.t.size())
        throw DomainError("a_" + std::to_string(n) + " needs t_" + std::to_string(n) + " but only " +
                          std::to_string(spec.t.size()) + " T-primes are given");
    std::vector<Congruence> system;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [p, chain] = spec.t[i];
        const std::size_t depth = s[i] + n;
        if (chain.size() < depth)
            throw DomainError("a_" + std::to_string(n) + " needs r_{" + p.str() + "," + std::to_string(depth) +
                              "} but the chain has depth " + std::to_string(chain.size()));
        system.push_back(Congruence::make(pow(p, static_cast<unsigned>(depth)), chain[depth - 1]));
    }
    system.push_back(Congruence::make(pow(spec.t[n].prime, static_cast<unsigned>(s[n])), 0));
    const std::size_t available = std::min(n, spec.q.size());
    for (std::size_t j = 0; j < available; ++j)
        system.push_back(Congruence::make(pow(spec.q[j], static_cast<unsigned>(n)), 0));
    for (auto idx : substitute_indices(spec, n)) {
        if (idx >= spec.t.size())
            throw DomainError("substitution at step " + std::to_string(n) + " needs t_" + std::to_string(idx) +
                              " but only " + std::to_string(spec.t.size()) + " T-primes are given");
        system.push_back(Congruence::make(spec.t[idx].prime, 0));
    }
    return system;
}

inline std::vector<Congruence> step_system(const AntichainSpec& spec, std::size_t n)
{
    return step_system(spec, s_values(spec), n);
}

// a_0 .. a_N
inline AntichainPrefix build(const AntichainSpec& spec, std::size_t last_index)
{
    const auto s = s_values(spec);
    AntichainPrefix prefix;
    Integer previous = 0;
    for (std::size_t n = 0; n <= last_index; ++n) {
        const auto solved = solve_system(step_system(spec, s, n));
        // distinct primes throughout, so the system is always solvable
        if (!solved) throw InternalError("step " + std::to_string(n) + " system is infeasible");
        previous = least_above(*solved, previous);
        prefix.values.push_back(previous);
    }
    return prefix;
}

struct VerificationReport {
    bool monotone = true;
    bool antichain = true;
    bool condition1 = true;
    bool condition2 = true;
    bool condition3 = true;
    // omega_lower_bound(a_n, Q) >= n * min(n, |Q|)
    bool level_growth = true;
    std::vector<std::string> failures;

    bool passed() const { return monotone && antichain && condition1 && condition2 && condition3 && level_growth; }
};

inline VerificationReport verify(const AntichainPrefix& prefix, const AntichainSpec& spec)
{
    VerificationReport report;
    const auto s = s_values(spec);
    const auto& a = prefix.values;
    auto fail = [&](bool& flag, std::string message) {
        flag = false;
        report.failures.push_back(std::move(message));
    };
    auto name = [](std::size_t n) { return "a_" + std::to_string(n); };

    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] < 1) fail(report.monotone, name(n) + " is not positive");
        else if (n > 0 && a[n] <= a[n - 1]) fail(report.monotone, name(n) + " <= " + name(n - 1));
    }
    if (report.monotone && !is_antichain(FiniteSet(a))) {
        for (std::size_t m = 0; m < a.size(); ++m)
            for (std::size_t n = m + 1; n < a.size(); ++n)
                if (a[n] % a[m] == 0) fail(report.antichain, name(m) + " divides " + name(n));
    }

    FiniteSet q_primes(spec.q);
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t i = 0; i < n && i < spec.t.size(); ++i) {
            const auto& [p, chain] = spec.t[i];
            const std::size_t depth = s[i] + n;
            if (chain.size() < depth) {
                fail(report.condition1, "no r_{" + p.str() + "," + std::to_string(depth) + "} to check " + name(n));
                continue;
            }
            if (mod_floor(a[n], pow(p, static_cast<unsigned>(depth))) != chain[depth - 1])
                fail(report.condition1, name(n) + " != r_{" + p.str() + "," + std::to_string(depth) + "} mod " +
                                            p.str() + "^" + std::to_string(depth));
        }
        if (n >= spec.t.size()) fail(report.condition2, "no t_" + std::to_string(n) + " to check " + name(n));
        else if (a[n] % pow(spec.t[n].prime, static_cast<unsigned>(s[n])) != 0)
            fail(report.condition2, "t_" + std::to_string(n) + "^s_" + std::to_string(n) + " does not divide " + name(n));

        for (std::size_t j = 0; j < std::min(n, spec.q.size()); ++j)
            if (a[n] % pow(spec.q[j], static_cast<unsigned>(n)) != 0)
                fail(report.condition3, "q_" + std::to_string(j) + "^" + std::to_string(n) + " does not divide " + name(n));
        for (auto idx : substitute_indices(spec, n)) {
            if (idx >= spec.t.size()) fail(report.condition3, "no t_" + std::to_string(idx) + " to check " + name(n));
            else if (a[n] % spec.t[idx].prime != 0)
                fail(report.condition3, "substitute t_" + std::to_string(idx) + " does not divide " + name(n));
        }

        if (a[n] >= 1) {
            const std::size_t need = n * std::min(n, spec.q.size());
            if (omega_lower_bound(a[n], q_primes) < need)
                fail(report.level_growth, name(n) + " has fewer than " + std::to_string(need) + " Q-prime factors");
        }
    }
    return report;
}

} // namespace conglat
