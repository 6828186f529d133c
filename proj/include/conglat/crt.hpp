#pragma once

// Congruence systems with arbitrary (not necessarily coprime) moduli.
//
// Infeasibility is an ordinary result, reported as an empty optional.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "conglat/error.hpp"
#include "conglat/integer.hpp"

namespace conglat {

// x = residue (mod modulus), 0 <= residue < modulus
struct Congruence {
    Integer modulus = 1;
    Integer residue = 0;

    // Reduces any integer residue into [0, modulus).
    static Congruence make(const Integer& modulus, const Integer& residue)
    {
        if (modulus < 1) throw DomainError("congruence modulus must be >= 1, got " + modulus.str());
        return {modulus, mod_floor(residue, modulus)};
    }

    bool satisfied_by(const Integer& x) const { return mod_floor(x, modulus) == residue; }

    friend bool operator==(const Congruence&, const Congruence&) = default;
};

// The full solution set {x : x = residue (mod modulus)} of a feasible system.
using SolutionClass = Congruence;

inline std::optional<SolutionClass> solve_pair(const Congruence& a, const Congruence& b)
{
    const Integer g = gcd(a.modulus, b.modulus);
    const Integer diff = b.residue - a.residue;
    if (diff % g != 0) return std::nullopt;
    // x = a.residue + a.modulus * k with a.modulus * k = diff (mod b.modulus)
    const Integer step = b.modulus / g;
    const auto eg = extended_gcd(a.modulus / g, step);
    const Integer k = mod_floor((diff / g) * eg.x, step);
    const Integer modulus = a.modulus * step;
    return SolutionClass{modulus, mod_floor(a.residue + a.modulus * k, modulus)};
}

inline std::optional<SolutionClass> solve_system(std::span<const Congruence> system)
{
    SolutionClass acc{1, 0};
    for (const auto& c : system) {
        auto next = solve_pair(acc, c);
        if (!next) return std::nullopt;
        acc = std::move(*next);
    }
    return acc;
}

inline std::optional<SolutionClass> solve_system(const std::vector<Congruence>& system)
{
    return solve_system(std::span<const Congruence>(system));
}

// Least element of the class strictly greater than `bound`.
inline Integer least_above(const SolutionClass& c, const Integer& bound)
{
    const Integer start = bound + 1;
    return start + mod_floor(c.residue - start, c.modulus);
}

// Incremental feasibility: pushes congruences one at a time and keeps the
// solved form of everything seen so far. Once infeasible it stays so.
class FeasibilityStream {
public:
    const std::optional<SolutionClass>& push(const Congruence& c)
    {
        ++pushed_;
        if (state_) state_ = solve_pair(*state_, c);
        return state_;
    }

    const std::optional<SolutionClass>& state() const { return state_; }
    bool feasible() const { return state_.has_value(); }
    std::size_t pushed() const { return pushed_; }

private:
    std::optional<SolutionClass> state_ = SolutionClass{1, 0};
    std::size_t pushed_ = 0;
};

// prime p -> (r_{p,1}, ..., r_{p,d}) with r_{p,n} in [0, p^n)
using ResidueChainTable = std::map<Integer, std::vector<Integer>>;

// Throws DomainError unless every key is prime, every entry lies in
// [0, p^n), and consecutive entries agree: r_{p,n+1} = r_{p,n} (mod p^n).
inline void validate_chain(const Integer& p, const std::vector<Integer>& chain)
{
    if (!is_prime(p)) throw DomainError("chain key " + p.str() + " is not prime");
    Integer pn = 1;
    for (std::size_t n = 0; n < chain.size(); ++n) {
        const Integer prev_power = pn;
        pn *= p;
        const auto& r = chain[n];
        if (r < 0 || r >= pn)
            throw DomainError("r_{" + p.str() + "," + std::to_string(n + 1) + "} = " + r.str() +
                              " outside [0, " + pn.str() + ")");
        if (n > 0 && r % prev_power != chain[n - 1])
            throw DomainError("chain for " + p.str() + " inconsistent at depth " + std::to_string(n + 1));
    }
}

inline void validate_table(const ResidueChainTable& table)
{
    for (const auto& [p, chain] : table) validate_chain(p, chain);
}

struct PrimeSupport {
    enum class Kind { ZeroToDepth, NonZero };
    Kind kind;
    // depth of the all-zero chain, or the least n with r_{p,n} != 0
    std::size_t value;

    friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
};

// Splits the primes of a finite-depth table into candidates for the
// always-divisible part (every listed residue is 0, known only up to the
// table's depth) and those with a first nonzero level s.
inline std::map<Integer, PrimeSupport> classify_prime_support(const ResidueChainTable& table)
{
    validate_table(table);
    std::map<Integer, PrimeSupport> out;
    for (const auto& [p, chain] : table) {
        PrimeSupport support{PrimeSupport::Kind::ZeroToDepth, chain.size()};
        for (std::size_t n = 0; n < chain.size(); ++n) {
            if (chain[n] != 0) {
                support = {PrimeSupport::Kind::NonZero, n + 1};
                break;
            }
        }
        out.emplace(p, support);
    }
    return out;
}

} // namespace conglat
