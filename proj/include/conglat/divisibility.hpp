#pragma once

// The divisibility order on positive integers: closures, antichains,
// convexity, prime-factor levels, and upward-closedness of periodic sets.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "conglat/error.hpp"
#include "conglat/integer.hpp"
#include "conglat/periodic_set.hpp"

namespace conglat {

// A finite, sorted, duplicate-free set of positive integers.
class FiniteSet {
public:
    FiniteSet() = default;
    FiniteSet(std::initializer_list<Integer> xs) : FiniteSet(std::vector<Integer>(xs)) {}
    explicit FiniteSet(std::vector<Integer> xs) : elements_(std::move(xs))
    {
        for (const auto& x : elements_)
            if (x < 1) throw DomainError("finite set elements must be >= 1, got " + x.str());
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const std::vector<Integer>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const Integer& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<Integer> elements_;
};

// Trial division runs over candidate divisors up to this bound by default.
inline constexpr std::uint64_t default_factor_budget = 1'000'000;

struct PrimePower {
    Integer prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization by trial division up to `budget`. A leftover cofactor
// is accepted when it is provably prime (below budget^2, or passes the
// primality test); otherwise BudgetExceeded is thrown.
inline std::vector<PrimePower> factorize(Integer n, std::uint64_t budget = default_factor_budget)
{
    if (n < 1) throw DomainError("factorize expects a positive integer, got " + n.str());
    std::vector<PrimePower> out;
    if (fits_u64(n)) {
        auto m = n.convert_to<std::uint64_t>();
        for (std::uint64_t d = 2; d <= budget && d <= m / d; d += (d == 2 ? 1 : 2)) {
            if (m % d != 0) continue;
            unsigned e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            out.push_back({d, e});
        }
        n = m;
    } else {
        for (std::uint64_t d = 2; d <= budget && Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
            if (n % d != 0) continue;
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.push_back({d, e});
        }
    }
    if (n > 1) {
        const Integer b = budget;
        if (n > b * b && !is_prime(n))
            throw BudgetExceeded("factorization budget exceeded (cofactor " + n.str() + ")");
        out.push_back({n, 1});
    }
    return out;
}

inline std::vector<Integer> divisors(const Integer& n, std::uint64_t budget = default_factor_budget)
{
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : factorize(n, budget)) {
        const std::size_t base = ds.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline bool divides(const Integer& a, const Integer& b) { return a != 0 && b % a == 0; }

// {n > 0 : some a in A divides n}
inline PeriodicSet up_closure(const FiniteSet& a)
{
    if (a.empty()) throw DomainError("up_closure of the empty set is undefined");
    Integer period = 1;
    for (const auto& x : a) {
        period = lcm(period, x);
        if (period > PeriodicSet::max_period)
            throw BudgetExceeded("lcm " + period.str() + " exceeds the supported maximum period");
    }
    const auto m = period.convert_to<std::uint64_t>();
    std::vector<bool> mask(m, false);
    for (const auto& x : a) {
        const auto step = x.convert_to<std::uint64_t>();
        for (std::uint64_t k = 0; k < m; k += step) mask[k] = true;
    }
    std::vector<Integer> rs;
    for (std::uint64_t k = 0; k < m; ++k)
        if (mask[k]) rs.emplace_back(k);
    return PeriodicSet::make(period, rs, {}, {0});
}

// All divisors of elements of A.
inline FiniteSet down_closure(const FiniteSet& a, std::uint64_t budget = default_factor_budget)
{
    if (a.empty()) throw DomainError("down_closure of the empty set is undefined");
    std::vector<Integer> out;
    for (const auto& x : a) {
        auto ds = divisors(x, budget);
        out.insert(out.end(), ds.begin(), ds.end());
    }
    return FiniteSet(std::move(out));
}

inline bool is_antichain(const FiniteSet& a)
{
    const auto& xs = a.elements();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[j] % xs[i] == 0) return false;
    return true;
}

// Every z with x | z | y for x, y in C lies in C.
inline bool is_convex(const FiniteSet& c, std::uint64_t budget = default_factor_budget)
{
    const auto& xs = c.elements();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[j] % xs[i] != 0) continue;
            for (const auto& e : divisors(xs[j] / xs[i], budget))
                if (!c.contains(xs[i] * e)) return false;
        }
    }
    return true;
}

inline FiniteSet convex_hull(const FiniteSet& a, std::uint64_t budget = default_factor_budget)
{
    const auto& xs = a.elements();
    std::vector<Integer> out(xs.begin(), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[j] % xs[i] != 0) continue;
            for (const auto& e : divisors(xs[j] / xs[i], budget)) out.push_back(xs[i] * e);
        }
    }
    return FiniteSet(std::move(out));
}

// Number of prime factors counted with multiplicity.
inline unsigned omega(const Integer& n, std::uint64_t budget = default_factor_budget)
{
    unsigned total = 0;
    for (const auto& pp : factorize(n, budget)) total += pp.exponent;
    return total;
}

// Sum of the valuations of n at the given primes; a lower bound for omega(n)
// that needs no factorization.
inline unsigned omega_lower_bound(const Integer& n, const FiniteSet& primes)
{
    if (n < 1) throw DomainError("omega_lower_bound expects a positive integer");
    unsigned total = 0;
    for (const auto& p : primes) {
        if (p < 2) throw DomainError("omega_lower_bound: " + p.str() + " is not prime");
        total += valuation(n, p);
    }
    return total;
}

// Integers in [1, bound] with exactly `level` prime factors.
inline FiniteSet level_members(unsigned level, const Integer& bound)
{
    if (bound < 1) throw DomainError("level_members bound must be positive");
    if (bound > Integer(100'000'000)) throw BudgetExceeded("level_members bound above 10^8");
    const auto b = bound.convert_to<std::uint64_t>();
    // Omega sieve: divide out the smallest prime factor.
    std::vector<std::uint32_t> spf(b + 1, 0);
    for (std::uint64_t i = 2; i <= b; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= b; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    std::vector<std::uint8_t> big_omega(b + 1, 0);
    std::vector<Integer> out;
    for (std::uint64_t n = 1; n <= b; ++n) {
        if (n >= 2) big_omega[n] = static_cast<std::uint8_t>(big_omega[n / spf[n]] + 1);
        if (big_omega[n] == level) out.emplace_back(n);
    }
    return FiniteSet(std::move(out));
}

// Decides whether A (ignoring 0) is nonempty and closed under taking
// multiples. A pattern with residues R mod m is closed iff for each r in R
// the whole subgroup gcd(r, m) * Z_m is in R, because the residues of the
// multiples of r are exactly that subgroup; gcd(0, m) is taken as m.
// Exceptions other than at 0 are refused.
inline bool is_upward_closed(const PeriodicSet& a)
{
    for (const auto* list : {&a.added(), &a.removed()})
        for (const auto& x : *list)
            if (x != 0) throw DomainError("is_upward_closed is undecidable under edits; set has exception at " + x.str());
    const auto m = a.modulus();
    const auto& rs = a.residues();
    if (rs.empty()) return false;
    std::vector<bool> mask(m, false);
    for (auto r : rs) mask[r] = true;
    for (auto r : rs) {
        const std::uint64_t d = r == 0 ? m : std::gcd(r, m);
        for (std::uint64_t k = 0; k < m; k += d)
            if (!mask[k]) return false;
    }
    return true;
}

} // namespace conglat
