#pragma once

// Brute-force references. Nothing in here calls into the library's solving
// routines: each answer comes from scanning or exhaustive enumeration over
// plain machine integers, so the oracle suites compare two independent
// routes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace conglat::brute {

struct Constraint {
    std::uint64_t modulus;
    std::uint64_t residue;
};

// Least x in [0, lcm) satisfying every constraint, found by scanning.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> solve(const std::vector<Constraint>& cs)
{
    std::uint64_t l = 1;
    for (const auto& c : cs) l = std::lcm(l, c.modulus);
    for (std::uint64_t x = 0; x < l; ++x) {
        bool ok = true;
        for (const auto& c : cs)
            if (x % c.modulus != c.residue) {
                ok = false;
                break;
            }
        if (ok) return std::pair{l, x};
    }
    return std::nullopt;
}

// A residue pattern plus explicit exceptions, mirrored independently of
// PeriodicSet so the oracle never leans on its canonical form.
struct RawSet {
    std::uint64_t modulus = 1;
    std::vector<bool> pattern;  // size modulus
    std::vector<std::uint64_t> added;
    std::vector<std::uint64_t> removed;

    bool contains(std::uint64_t n) const
    {
        if (std::find(added.begin(), added.end(), n) != added.end()) return true;
        if (!pattern[n % modulus]) return false;
        return std::find(removed.begin(), removed.end(), n) == removed.end();
    }

    std::uint64_t max_edit() const
    {
        std::uint64_t e = 0;
        for (auto x : added) e = std::max(e, x);
        for (auto x : removed) e = std::max(e, x);
        return e;
    }
};

// Common elements of all sets in [1, bound].
inline std::uint64_t count_common(const std::vector<RawSet>& sets, std::uint64_t bound, std::uint64_t above = 0)
{
    std::uint64_t count = 0;
    for (std::uint64_t n = std::max<std::uint64_t>(1, above + 1); n <= bound; ++n) {
        bool all = true;
        for (const auto& s : sets)
            if (!s.contains(n)) {
                all = false;
                break;
            }
        if (all) ++count;
    }
    return count;
}

// Infinite intersection iff a common element appears past every exception
// within three full periods.
inline bool infinite_intersection(const std::vector<RawSet>& sets)
{
    std::uint64_t l = 1, e = 0;
    for (const auto& s : sets) {
        l = std::lcm(l, s.modulus);
        e = std::max(e, s.max_edit());
    }
    return count_common(sets, 3 * l + e, e) > 0;
}

// Upward closed (ignoring 0, nonempty) by scanning multiples up to 10 m^2.
inline bool upward_closed(const std::vector<bool>& pattern)
{
    const std::uint64_t m = pattern.size();
    const std::uint64_t bound = 10 * m * m;
    bool any = false;
    for (std::uint64_t a = 1; a <= bound; ++a) {
        if (!pattern[a % m]) continue;
        any = true;
        for (std::uint64_t ka = 2 * a; ka <= bound; ka += a)
            if (!pattern[ka % m]) return false;
    }
    return any;
}

// Sorted {s * r^k mod p : k >= 1} by direct iteration over k < p.
inline std::vector<std::uint64_t> geometric_set(std::uint64_t p, std::uint64_t s, std::uint64_t r)
{
    std::vector<bool> seen(p, false);
    std::uint64_t x = s % p;
    for (std::uint64_t k = 1; k <= p; ++k) {
        x = x * r % p;
        seen[x] = true;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v < p; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

// Every geometric set mod p mapped to its lexicographically least (s, r).
inline std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>> geometric_family(std::uint64_t p)
{
    std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>> family;
    for (std::uint64_t s = 0; s < p; ++s)
        for (std::uint64_t r = 1; r < p; ++r) family.try_emplace(geometric_set(p, s, r), s, r);
    return family;
}

inline std::uint64_t order_by_iteration(std::uint64_t p, std::uint64_t a)
{
    std::uint64_t x = a % p, k = 1;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

inline bool is_prime_trial(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; k <= n; ++k)
        if (is_prime_trial(k)) out.push_back(k);
    return out;
}

// Least x > lower with x % m_i == r_i for all i, scanning up to `cap`.
inline std::optional<std::uint64_t> least_above(const std::vector<Constraint>& cs, std::uint64_t lower, std::uint64_t cap)
{
    for (std::uint64_t x = lower + 1; x <= cap; ++x) {
        bool ok = true;
        for (const auto& c : cs)
            if (x % c.modulus != c.residue) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

} // namespace conglat::brute
