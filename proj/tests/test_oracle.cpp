#include <gtest/gtest.h>

#include "conglat/oracle/suites.hpp"

using namespace conglat;
using namespace std::chrono_literals;

namespace {

oracle::RunOptions opts(std::uint64_t seed)
{
    oracle::RunOptions o;
    o.seed = seed;
    o.budget = 120s;
    return o;
}

void expect_clean(const oracle::SuiteReport& r)
{
    EXPECT_FALSE(r.truncated) << r.suite;
    EXPECT_EQ(r.cases, r.planned) << r.suite;
    EXPECT_EQ(r.mismatches, 0u) << r.suite;
    for (const auto& e : r.examples) ADD_FAILURE() << r.suite << ": " << e;
}

} // namespace

TEST(Oracle, CrtOtherSeed) { expect_clean(oracle::crt_suite(opts(1), 2000)); }

TEST(Oracle, GeomSmall) { expect_clean(oracle::geom_suite(opts(5), 500)); }

TEST(Oracle, Upward) { expect_clean(oracle::upward_suite(opts(8), 300)); }

TEST(Oracle, Fip) { expect_clean(oracle::fip_suite(opts(13), 300)); }

TEST(Oracle, Antichain) { expect_clean(oracle::antichain_suite(opts(21), 40)); }

TEST(Oracle, SameSeedSameCases)
{
    auto a = oracle::run_suite("crt", opts(99));
    auto b = oracle::run_suite("crt", opts(99));
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.mismatches, b.mismatches);
}

TEST(Oracle, Unknown) { EXPECT_THROW(oracle::run_suite("bogus", opts(1)), DomainError); }

TEST(Oracle, BudgetTruncates)
{
    oracle::RunOptions o;
    o.budget = 0ms;
    const auto r = oracle::geom_suite(o);
    EXPECT_TRUE(r.truncated);
    EXPECT_FALSE(r.clean());
}
