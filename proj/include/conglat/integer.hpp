#pragma once

// Arbitrary precision integers and the handful of number-theoretic
// primitives every other header leans on.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

namespace conglat {

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0) return 0;
    Integer g = gcd(a, b);
    Integer l = (a / g) * b;
    return l < 0 ? Integer(-l) : l;
}

// Least non-negative residue, also for negative a.
inline Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

struct ExtendedGcd {
    Integer g;
    Integer x;
    Integer y;
};

// g = a*x + b*y, g >= 0
inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline Integer pow(Integer base, unsigned exponent)
{
    Integer result = 1;
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

inline bool fits_u64(const Integer& a)
{
    return a >= 0 && a <= Integer(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_u64(const Integer& a)
{
    if (!fits_u64(a)) throw std::overflow_error("integer does not fit in 64 bits: " + a.str());
    return a.convert_to<std::uint64_t>();
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline Integer parse_integer(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("bad integer literal '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw std::invalid_argument("bad integer literal '" + text + "'");
    return Integer(text);
}

// How many times p divides n (n > 0, p >= 2).
inline unsigned valuation(Integer n, const Integer& p)
{
    unsigned v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1u) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

// Deterministic for all 64-bit inputs with this witness set.
inline bool miller_rabin_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

inline bool is_prime(std::uint64_t n) { return detail::miller_rabin_u64(n); }

// Exact below 2^64; above that a 40-round Miller-Rabin with fixed seed.
inline bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    if (fits_u64(n)) return detail::miller_rabin_u64(n.convert_to<std::uint64_t>());
    boost::random::mt19937 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(n, 40, gen);
}

} // namespace conglat
