#include <gtest/gtest.h>

#include "conglat/antichain.hpp"
#include "conglat/oracle/brute.hpp"

using namespace conglat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

AntichainSpec worked()
{
    AntichainSpec spec;
    spec.t = {{3, ints({1, 4, 13, 40, 121})},
              {5, ints({2, 7, 57, 57, 57})},
              {7, ints({3, 10, 59, 59, 59})},
              {11, ints({5, 5, 5, 5, 5})},
              {13, ints({1, 1, 1, 1, 1})}};
    spec.q = ints({2});
    return spec;
}

} // namespace

TEST(Antichain, SValues)
{
    AntichainSpec spec;
    spec.t = {{3, ints({1, 4})}, {5, ints({0, 5})}};
    EXPECT_EQ(s_values(spec), (std::vector<std::size_t>{1, 2}));
    spec.t.push_back({7, ints({0, 0, 0})});
    EXPECT_THROW(s_values(spec), DomainError);
}

TEST(Antichain, WorkedPrefix)
{
    const auto spec = worked();
    EXPECT_EQ(build(spec, 1).values, ints({3, 40}));

    // a_0: least positive multiple of 3; a_1: scan past 3
    EXPECT_EQ(brute::least_above({{3, 0}}, 0, 100), 3u);
    EXPECT_EQ(brute::least_above({{9, 4}, {5, 0}, {2, 0}}, 3, 1000), 40u);

    // a_2 from the scan over one full period (27 * 125 * 7 * 4 = 94500)
    const auto a2 = brute::least_above({{27, 13}, {125, 57}, {7, 0}, {4, 0}}, 40, 40 + 94500);
    ASSERT_TRUE(a2);
    EXPECT_EQ(build(spec, 2).values, (std::vector<Integer>{3, 40, *a2}));
    EXPECT_EQ(*a2, 40432u);
}

TEST(Antichain, BuildPassesVerify)
{
    const auto spec = worked();
    const auto prefix = build(spec, 4);
    EXPECT_EQ(prefix.values.size(), 5u);
    const auto report = verify(prefix, spec);
    EXPECT_TRUE(report.passed());
    EXPECT_TRUE(report.failures.empty());
    EXPECT_EQ(build(spec, 4), prefix);
}

TEST(Antichain, VerifyCatchesFailures)
{
    const auto spec = worked();
    EXPECT_TRUE(verify({ints({3, 40})}, spec).passed());
    const auto bad = verify({ints({3, 39})}, spec);
    EXPECT_FALSE(bad.passed());
    EXPECT_FALSE(bad.antichain);
    EXPECT_FALSE(bad.failures.empty());
    EXPECT_TRUE(verify({{}}, spec).passed());
    EXPECT_FALSE(verify({ints({40, 3})}, spec).monotone);
}

TEST(Antichain, Preconditions)
{
    AntichainSpec one;
    one.t = {{3, ints({1, 4, 13})}};
    one.q = ints({2});
    EXPECT_NO_THROW(build(one, 0));
    EXPECT_THROW(build(one, 1), DomainError);

    auto shallow = worked();
    shallow.t[0].chain = ints({1, 4});
    EXPECT_THROW(build(shallow, 3), DomainError);

    auto clash = worked();
    clash.q = ints({3});
    EXPECT_THROW(validate(clash), DomainError);
}

TEST(Antichain, SafeSubstitution)
{
    // no Q primes at all: safe mode borrows later T primes for growth
    AntichainSpec spec;
    for (long p : {3, 5, 7, 11, 13, 17, 19}) {
        std::vector<Integer> chain(8, 1);
        spec.t.push_back({p, chain});
    }
    spec.substitution = Substitution::safe;
    const auto prefix = build(spec, 3);
    EXPECT_TRUE(verify(prefix, spec).passed());
    // step 2 substitutes t_2 and t_3 to the first power
    EXPECT_EQ(substitute_indices(spec, 2), (std::vector<std::size_t>{2, 3}));
}
