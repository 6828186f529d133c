#pragma once

// Geometric sets of residues modulo a prime p: sets of the form
// {s * r^k mod p : k >= 1}. Away from 0 these are exactly the cosets of
// subgroups of Z_p^*, which is what the recognizer exploits: in discrete-log
// coordinates a coset is an arithmetic progression of exponents whose step
// divides p - 1.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "conglat/error.hpp"
#include "conglat/integer.hpp"

namespace conglat {

struct GeometricDescriptor {
    std::uint64_t p = 2;
    std::uint64_t seed = 0;
    std::uint64_t ratio = 1;

    friend auto operator<=>(const GeometricDescriptor&, const GeometricDescriptor&) = default;
};

// A nonempty subset of Z_p, kept sorted.
class ResidueSet {
public:
    ResidueSet(std::uint64_t p, std::vector<std::uint64_t> elements) : p_(p), elements_(std::move(elements))
    {
        if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        if (elements_.empty()) throw DomainError("residue set must be nonempty");
        if (elements_.back() >= p)
            throw DomainError("residue " + std::to_string(elements_.back()) + " outside Z_" + std::to_string(p));
    }

    std::uint64_t p() const { return p_; }
    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(std::uint64_t x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

    friend auto operator<=>(const ResidueSet&, const ResidueSet&) = default;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> elements_;
};

struct ExponentOffsets {
    // least k >= 1 with q^k = s_i, sorted ascending; q the least primitive root
    std::vector<std::uint64_t> exponents;
    std::uint64_t base_exponent = 0;
    // k_i - k_0 for i > 0
    std::vector<std::uint64_t> offsets;
};

struct StructureReport {
    bool gcd_closed = true;
    bool multiples_closed = true;
    bool arithmetic_progression = true;
    ExponentOffsets offsets;

    bool all() const { return gcd_closed && multiples_closed && arithmetic_progression; }
};

namespace detail {

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d != 0) continue;
        ps.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

inline void require_unit(std::uint64_t p, std::uint64_t a, const char* what)
{
    if (a == 0 || a >= p)
        throw DomainError(std::string(what) + " = " + std::to_string(a) + " must lie in [1, " + std::to_string(p) + ")");
}

} // namespace detail

inline ResidueSet expand(const GeometricDescriptor& d)
{
    detail::require_prime(d.p);
    if (d.seed >= d.p) throw DomainError("seed must lie in [0, p)");
    detail::require_unit(d.p, d.ratio, "ratio");
    if (d.seed == 0) return ResidueSet(d.p, {0});
    std::vector<std::uint64_t> out;
    std::uint64_t x = d.seed;
    do {
        x = detail::mul_mod(x, d.ratio, d.p);
        out.push_back(x);
    } while (x != d.seed);
    return ResidueSet(d.p, std::move(out));
}

inline std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t a)
{
    detail::require_prime(p);
    detail::require_unit(p, a, "a");
    std::uint64_t order = p - 1;
    for (auto q : detail::distinct_prime_factors(p - 1)) {
        while (order % q == 0 && detail::pow_mod(a, order / q, p) == 1) order /= q;
    }
    return order;
}

// Least generator of Z_p^*.
inline std::uint64_t primitive_root(std::uint64_t p)
{
    detail::require_prime(p);
    if (p == 2) return 1;
    const auto factors = detail::distinct_prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto q : factors) {
            if (detail::pow_mod(g, (p - 1) / q, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw InternalError("no primitive root found for " + std::to_string(p));
}

// Least k >= 1 with base^k = x (mod p), or nullopt when x is not a power of
// base. Plain scan for small p, baby-step giant-step above.
inline std::optional<std::uint64_t> discrete_log(std::uint64_t p, std::uint64_t base, std::uint64_t x)
{
    detail::require_prime(p);
    detail::require_unit(p, base, "base");
    detail::require_unit(p, x, "x");
    if (p < 10'000) {
        std::uint64_t y = 1;
        for (std::uint64_t k = 1; k < p; ++k) {
            y = detail::mul_mod(y, base, p);
            if (y == x) return k;
            if (y == 1) break;
        }
        return std::nullopt;
    }
    if (x == 1) return multiplicative_order(p, base);
    // base^(i*n + j) = x  <=>  x * base^(-n*i) = base^j
    auto n = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<long double>(p - 1))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(n);
    std::uint64_t y = 1;
    for (std::uint64_t j = 0; j < n; ++j) {
        baby.try_emplace(y, j);
        y = detail::mul_mod(y, base, p);
    }
    const std::uint64_t giant = detail::pow_mod(detail::pow_mod(base, p - 2, p), n, p);
    std::uint64_t gamma = x;
    for (std::uint64_t i = 0; i <= n; ++i) {
        if (auto it = baby.find(gamma); it != baby.end()) return i * n + it->second;
        gamma = detail::mul_mod(gamma, giant, p);
    }
    return std::nullopt;
}

inline ExponentOffsets exponent_offsets(const ResidueSet& rs)
{
    const auto p = rs.p();
    if (rs.contains(0)) throw DomainError("exponent offsets are undefined for a set containing 0");
    const auto q = primitive_root(p);
    ExponentOffsets out;
    for (auto s : rs.elements()) {
        auto k = discrete_log(p, q, s);
        if (!k) throw InternalError("primitive root failed to generate " + std::to_string(s));
        out.exponents.push_back(*k);
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    out.base_exponent = out.exponents.front();
    for (std::size_t i = 1; i < out.exponents.size(); ++i) out.offsets.push_back(out.exponents[i] - out.base_exponent);
    return out;
}

// The three structural properties every geometric set away from 0 has:
// offsets closed under gcd, closed under multiples of the least offset
// (mod p - 1, landing on 0 allowed), and equal to {i * r_1 : 0 < i < |S|}.
inline StructureReport structure_check(const ResidueSet& rs)
{
    StructureReport report;
    report.offsets = exponent_offsets(rs);
    const auto& offs = report.offsets.offsets;
    if (offs.empty()) return report;

    auto in_offsets = [&](std::uint64_t v) { return std::binary_search(offs.begin(), offs.end(), v); };
    for (std::size_t i = 0; i < offs.size() && report.gcd_closed; ++i)
        for (std::size_t j = i + 1; j < offs.size(); ++j)
            if (!in_offsets(std::gcd(offs[i], offs[j]))) {
                report.gcd_closed = false;
                break;
            }

    const std::uint64_t group = rs.p() - 1;
    const std::uint64_t r1 = offs.front();
    for (std::uint64_t t = 1; t < group; ++t) {
        const std::uint64_t v = detail::mul_mod(t, r1, group);
        if (v != 0 && !in_offsets(v)) {
            report.multiples_closed = false;
            break;
        }
    }

    for (std::size_t i = 0; i < offs.size(); ++i) {
        if (offs[i] != (i + 1) * r1) {
            report.arithmetic_progression = false;
            break;
        }
    }
    return report;
}

// Lexicographically least (seed, ratio) generating rs, if any.
inline std::optional<GeometricDescriptor> is_geometric(const ResidueSet& rs)
{
    const auto p = rs.p();
    if (rs.contains(0)) {
        if (rs.size() == 1) return GeometricDescriptor{p, 0, 1};
        return std::nullopt;
    }
    const std::uint64_t seed = rs.elements().front();
    const std::uint64_t l = rs.size();
    if (l == 1) return GeometricDescriptor{p, seed, 1};

    const auto offs = exponent_offsets(rs).offsets;
    const std::uint64_t r1 = offs.front();
    if (r1 * l != p - 1) return std::nullopt;
    for (std::size_t i = 0; i < offs.size(); ++i)
        if (offs[i] != (i + 1) * r1) return std::nullopt;

    // rs = seed * H for the subgroup H of order l; the ratio must generate H.
    const std::uint64_t seed_inv = detail::pow_mod(seed, p - 2, p);
    std::vector<std::uint64_t> subgroup;
    for (auto x : rs.elements()) subgroup.push_back(detail::mul_mod(x, seed_inv, p));
    std::sort(subgroup.begin(), subgroup.end());
    for (auto r : subgroup)
        if (multiplicative_order(p, r) == l) return GeometricDescriptor{p, seed, r};
    throw InternalError("cyclic subgroup without generator");
}

// Every geometric set mod p: {0} and the cosets of each subgroup of Z_p^*.
inline std::vector<ResidueSet> enumerate_geometric(std::uint64_t p)
{
    detail::require_prime(p);
    std::vector<ResidueSet> out;
    out.emplace_back(p, std::vector<std::uint64_t>{0});
    const auto q = primitive_root(p);
    const std::uint64_t group = p - 1;
    for (std::uint64_t step = 1; step <= group; ++step) {
        if (group % step != 0) continue;
        // cosets of <q^step> are the exponent classes mod step
        for (std::uint64_t c = 0; c < step; ++c) {
            std::vector<std::uint64_t> coset;
            for (std::uint64_t k = c; k < group; k += step) coset.push_back(detail::pow_mod(q, k, p));
            out.emplace_back(p, std::move(coset));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Least prime congruent to r mod m. Terminates by Dirichlet's theorem.
inline Integer prime_in_progression(const Integer& m, const Integer& r)
{
    if (m < 1) throw DomainError("modulus must be positive");
    if (r < 0 || r >= m) throw DomainError("residue " + r.str() + " outside [0, " + m.str() + ")");
    if (gcd(m, r) != 1)
        throw DomainError("gcd(" + m.str() + ", " + r.str() + ") = " + gcd(m, r).str() + " != 1");
    for (Integer x = r;; x += m)
        if (is_prime(x)) return x;
}

// First `count` elements of {s * b^k : k >= 0} with s, b the least primes
// in the classes s0 and r mod p.
inline std::vector<Integer> witness_class_set(std::uint64_t p, std::uint64_t s0, std::uint64_t r, std::size_t count)
{
    detail::require_prime(p);
    detail::require_unit(p, s0, "s0");
    detail::require_unit(p, r, "r");
    if (count == 0) throw DomainError("count must be positive");
    const Integer s = prime_in_progression(p, s0);
    const Integer b = prime_in_progression(p, r);
    std::vector<Integer> out;
    Integer x = s;
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(x);
        x *= b;
    }
    return out;
}

} // namespace conglat
