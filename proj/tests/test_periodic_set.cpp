#include <random>

#include <gtest/gtest.h>

#include "conglat/periodic_set.hpp"

using namespace conglat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// brute scan of [0, bound]
std::vector<Integer> scan(const PeriodicSet& s, long bound)
{
    std::vector<Integer> out;
    for (long n = 0; n <= bound; ++n)
        if (s.contains(n)) out.emplace_back(n);
    return out;
}

PeriodicSet random_set(std::mt19937_64& rng)
{
    const long m = 1 + static_cast<long>(rng() % 12);
    std::vector<Integer> rs, add, rem;
    for (long r = 0; r < m; ++r)
        if (rng() % 2) rs.emplace_back(r);
    for (int i = 0; i < 3; ++i) {
        const long x = static_cast<long>(rng() % 40);
        if (rng() % 2) add.emplace_back(x);
        else rem.emplace_back(x);
    }
    std::erase_if(rem, [&](const Integer& x) { return std::find(add.begin(), add.end(), x) != add.end(); });
    return PeriodicSet::make(m, rs, add, rem);
}

} // namespace

TEST(PeriodicSet, CanonicalForms)
{
    const auto evens = PeriodicSet::make(2, ints({0}));
    EXPECT_EQ(evens.modulus(), 2u);
    EXPECT_EQ(evens.residues(), std::vector<std::uint64_t>{0});

    const auto coarse = PeriodicSet::make(4, ints({0, 2}));
    EXPECT_EQ(coarse, evens);

    const auto finite = PeriodicSet::make(1, {}, ints({1, 2}));
    EXPECT_EQ(finite.modulus(), 1u);
    EXPECT_TRUE(finite.residues().empty());
    EXPECT_EQ(finite.added(), ints({1, 2}));
    EXPECT_EQ(PeriodicSet::finite(ints({2, 1})), finite);
}

TEST(PeriodicSet, RedundantEditsDropped)
{
    // adding an element already in the pattern, removing one outside it
    const auto s = PeriodicSet::make(3, ints({1}), ints({4}), ints({5}));
    EXPECT_EQ(s, progression(3, 1));
}

TEST(PeriodicSet, RejectsBadInput)
{
    EXPECT_THROW(PeriodicSet::make(0, {}), DomainError);
    EXPECT_THROW(PeriodicSet::make(3, ints({3})), DomainError);
    EXPECT_THROW(PeriodicSet::make(3, ints({-1})), DomainError);
    EXPECT_THROW(PeriodicSet::make(3, {}, ints({1}), ints({1})), DomainError);
    EXPECT_THROW(PeriodicSet::make(3, {}, ints({-2})), DomainError);
    EXPECT_THROW(PeriodicSet::make(Integer(1) << 30, {}), BudgetExceeded);
}

TEST(PeriodicSet, Membership)
{
    EXPECT_TRUE(member(progression(3, 1), 7));
    EXPECT_FALSE(member(divisibility_union(ints({2, 3})), 7));
    EXPECT_TRUE(member(complement(progression(2, 0)), 5));
    EXPECT_FALSE(member(progression(3, 1), -2));
    // far beyond 64 bits
    const Integer big = (Integer(1) << 200) + 1;
    EXPECT_TRUE(member(progression(2, 1), big));
}

TEST(PeriodicSet, Intersections)
{
    EXPECT_EQ(intersect(progression(4, 2), progression(6, 2)), progression(12, 2));
    EXPECT_EQ(scan(intersect(progression(4, 2), progression(6, 2)), 24), ints({2, 14}));
    EXPECT_TRUE(intersect(progression(2, 0), progression(2, 1)).is_empty());
    EXPECT_EQ(intersect(progression(3, 0), progression(5, 0)), progression(15, 0));
}

TEST(PeriodicSet, Cardinality)
{
    EXPECT_TRUE(is_infinite(progression(5, 3)));
    EXPECT_FALSE(is_infinite(PeriodicSet::make(1, {}, ints({1, 2}))));
    EXPECT_TRUE(is_empty(intersect(progression(2, 0), progression(2, 1))));
    EXPECT_TRUE(is_empty(PeriodicSet()));
}

TEST(PeriodicSet, Generators)
{
    const auto u = divisibility_union(ints({6, 10}));
    EXPECT_EQ(u.modulus(), 30u);
    EXPECT_EQ(u.residues(), (std::vector<std::uint64_t>{0, 6, 10, 12, 18, 20, 24}));
    std::vector<Integer> expected;
    for (long n = 0; n <= 60; ++n)
        if (n % 6 == 0 || n % 10 == 0) expected.emplace_back(n);
    EXPECT_EQ(scan(u, 60), expected);

    EXPECT_EQ(non_divisibility(2), progression(2, 1));
    EXPECT_EQ(progression(1, 0), all_naturals());
    EXPECT_THROW(progression(0, 0), DomainError);
    EXPECT_THROW(progression(3, 3), DomainError);
}

TEST(PeriodicSet, Enumerate)
{
    EXPECT_EQ(enumerate_up_to(progression(4, 1), 10), ints({1, 5, 9}));
    EXPECT_TRUE(enumerate_up_to(PeriodicSet(), 100).empty());
    EXPECT_EQ(enumerate_up_to(divisibility_union(ints({6, 10})), 30), ints({0, 6, 10, 12, 18, 20, 24, 30}));
    EXPECT_EQ(enumerate_up_to(PeriodicSet::make(2, ints({1}), ints({4}), ints({3})), 8), ints({1, 4, 5, 7}));
}

TEST(PeriodicSet, BooleanAlgebraLaws)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_set(rng);
        const auto b = random_set(rng);
        EXPECT_EQ(complement(unite(a, b)), intersect(complement(a), complement(b)));
        EXPECT_EQ(complement(complement(a)), a);
        EXPECT_EQ(intersect(a, a), a);
        EXPECT_EQ(unite(a, a), a);
        EXPECT_EQ(difference(a, b), intersect(a, complement(b)));
        for (long n = 0; n < 120; ++n) {
            ASSERT_EQ(intersect(a, b).contains(n), a.contains(n) && b.contains(n));
            ASSERT_EQ(unite(a, b).contains(n), a.contains(n) || b.contains(n));
        }
    }
}

TEST(PeriodicSet, CanonicalFormIsUnique)
{
    // the same set written with a multiple of its period compares equal
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_set(rng);
        const std::uint64_t k = 1 + rng() % 4;
        std::vector<Integer> rs;
        for (std::uint64_t r = 0; r < a.modulus() * k; ++r)
            if (a.in_pattern(r)) rs.emplace_back(r);
        const auto b = PeriodicSet::make(a.modulus() * k, rs, a.added(), a.removed());
        EXPECT_EQ(a, b);
    }
}
