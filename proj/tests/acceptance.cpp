// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "conglat/antichain.hpp"
#include "conglat/filter_lab.hpp"
#include "conglat/json_io.hpp"
#include "conglat/oracle/brute.hpp"
#include "conglat/oracle/suites.hpp"
#include "conglat/residue_geometry.hpp"

using namespace conglat;
using namespace std::chrono_literals;
using Clock = std::chrono::steady_clock;

namespace {

int failed = 0;

struct Outcome {
    bool ok;
    std::string detail;
};

void criterion(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!o.ok) ++failed;
    std::printf("%s %d %s: %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome from_suite(const oracle::SuiteReport& r, double limit_seconds)
{
    std::ostringstream d;
    d << r.cases << "/" << r.planned << " cases, " << r.mismatches << " mismatches, seed " << r.seed;
    if (r.truncated) d << ", truncated";
    if (!r.examples.empty()) d << ", first: " << r.examples.front();
    const bool fast = r.wall_seconds < limit_seconds;
    if (!fast) d << ", over the " << limit_seconds << "s limit";
    return {r.clean() && fast, d.str()};
}

oracle::RunOptions with(std::uint64_t seed, std::chrono::milliseconds budget)
{
    oracle::RunOptions o;
    o.seed = seed;
    o.budget = budget;
    return o;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    for (; e; e >>= 1, b = b * b % m)
        if (e & 1) r = r * b % m;
    return r;
}

} // namespace

int main()
{
    criterion(1, "geometric recognizer vs exhaustive (s,r) oracle, p <= 31", [] {
        return from_suite(oracle::run_suite("geom", with(42, 60s)), 60);
    });

    criterion(2, "offsets R = {i*r1} with gcd and multiples closure, geometric S without 0", [] {
        std::size_t sets = 0, bad = 0;
        std::string first;
        for (auto p : brute::primes_up_to(31)) {
            for (const auto& [elements, sr] : brute::geometric_family(p)) {
                if (elements.front() == 0) continue;
                ++sets;
                const ResidueSet s(p, elements);
                const auto report = structure_check(s);
                const auto& R = report.offsets.offsets;
                std::vector<std::uint64_t> expected;
                if (!R.empty())
                    for (std::uint64_t i = 1; i < elements.size(); ++i) expected.push_back(i * R.front());
                const bool ok = R == expected && R.size() + 1 == elements.size() && report.gcd_closed &&
                                report.multiples_closed;
                if (!ok && bad++ == 0) first = "p=" + std::to_string(p) + " s=" + std::to_string(sr.first);
            }
        }
        return Outcome{bad == 0 && sets > 0,
                       std::to_string(sets) + " sets, " + std::to_string(bad) + " failures" + (first.empty() ? "" : ", first " + first)};
    });

    criterion(3, "CRT solver vs [0, lcm) scan with stream/batch coherence", [] {
        return from_suite(oracle::run_suite("crt", with(1, 10s)), 10);
    });

    criterion(4, "worked antichain spec: a_0 = 3, a_1 = 40, build(spec, 4) verifies", [] {
        std::ifstream in(CONGLAT_DATA_DIR "/worked_spec.json");
        std::stringstream text;
        text << in.rdbuf();
        const auto spec = json_io::decode_antichain_spec(json_io::parse_text(text.str(), "spec"), "spec");
        const auto a0 = brute::least_above({{3, 0}}, 0, 1000);
        const auto a1 = brute::least_above({{9, 4}, {5, 0}, {2, 0}}, 3, 1000);
        const auto prefix = build(spec, 4);
        const auto report = verify(prefix, spec);
        std::string values;
        for (const auto& v : prefix.values) values += (values.empty() ? "" : ",") + v.str();
        const bool ok = a0 == 3u && a1 == 40u && prefix.values.size() == 5 && prefix.values[0] == *a0 &&
                        prefix.values[1] == *a1 && report.passed() && report.failures.empty();
        return Outcome{ok, "prefix [" + values + "], " + std::to_string(report.failures.size()) + " verify failures"};
    });

    criterion(5, "upward-closedness residue criterion vs scan to 10 m^2", [] {
        return from_suite(oracle::run_suite("upward", with(42, 60s)), 60);
    });

    criterion(6, "has_fip vs common-element scan, feasible residues nonempty", [] {
        return from_suite(oracle::run_suite("fip", with(42, 60s)), 60);
    });

    criterion(7, "NMAX witnesses verified independently", [] {
        std::mt19937_64 rng(oracle::splitmix64(42));
        std::size_t done = 0, bad = 0;
        while (done < 100) {
            const std::uint64_t m = oracle::uniform(rng, 2, 30);
            const std::uint64_t r = oracle::uniform(rng, 1, m - 1);
            if (std::gcd(m, r) != 1) continue;
            std::vector<Integer> forbidden, pool;
            for (auto k = oracle::uniform(rng, 1, 3); k; --k) forbidden.emplace_back(oracle::uniform(rng, 2, 30));
            for (auto k = oracle::uniform(rng, 1, 3); k; --k) pool.emplace_back(oracle::uniform(rng, 2, 60));
            const bool has_source = std::any_of(pool.begin(), pool.end(), [&](const Integer& a) {
                return gcd(a, Integer(m)) == 1 &&
                       std::all_of(forbidden.begin(), forbidden.end(), [&](const Integer& n) { return gcd(a, n) == 1; });
            });
            if (!has_source) continue;
            ++done;
            const Integer x = nmax_witness(m, r, forbidden, pool);
            bool ok = x > 0 && x % m == r;
            for (const auto& n : forbidden) ok = ok && x % n != 0;
            ok = ok && std::any_of(pool.begin(), pool.end(), [&](const Integer& a) { return x % a == 0; });
            if (!ok) ++bad;
        }
        return Outcome{bad == 0, std::to_string(done) + " inputs, " + std::to_string(bad) + " failures"};
    });

    criterion(8, "sum and product respect congruence mod m", [] {
        std::mt19937_64 rng(oracle::splitmix64(8));
        std::size_t bad = 0;
        for (int i = 0; i < 10'000; ++i) {
            const Integer m = oracle::uniform(rng, 1, 50);
            // operands up to ~2^128 so the check is not confined to machine words
            const Integer a1 = (Integer(rng()) << 64) + rng(), b1 = (Integer(rng()) << 64) + rng();
            const Integer a2 = a1 + m * Integer(rng()), b2 = b1 - m * Integer(rng());
            const bool sum = mod_floor(a1 + b1, m) == mod_floor(a2 + b2, m);
            const bool prod = mod_floor(a1 * b1, m) == mod_floor(a2 * b2, m);
            // reduction first, then the operation
            const bool hom = mod_floor(a1 + b1, m) == mod_floor(mod_floor(a1, m) + mod_floor(b1, m), m) &&
                             mod_floor(a1 * b1, m) == mod_floor(mod_floor(a1, m) * mod_floor(b1, m), m);
            if (!(sum && prod && hom)) ++bad;
        }
        return Outcome{bad == 0, "10000 cases, " + std::to_string(bad) + " failures"};
    });

    criterion(9, "q^(p-1) = 1 and ord(q) = p-1 for the primitive root, all p <= 10^4", [] {
        const auto start = Clock::now();
        std::size_t primes = 0, bad = 0;
        for (auto p : brute::primes_up_to(10'000)) {
            ++primes;
            const auto q = primitive_root(p);
            const bool fermat = powmod(q, p - 1, p) == 1;
            const bool order = brute::order_by_iteration(p, q) == p - 1;
            if (!fermat || !order) ++bad;
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        return Outcome{bad == 0 && secs < 30, std::to_string(primes) + " primes, " + std::to_string(bad) + " failures"};
    });

    std::printf("%d criteria failed\n", failed);
    return failed;
}
