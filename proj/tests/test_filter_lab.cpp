#include <random>

#include <gtest/gtest.h>

#include "conglat/filter_lab.hpp"

using namespace conglat;

namespace {

PeriodicSet ap(long m, long r) { return progression(m, r); }

FilterBase base(std::vector<PeriodicSet> xs) { return FilterBase(std::move(xs)); }

} // namespace

TEST(FilterLab, Fip)
{
    EXPECT_TRUE(has_fip({ap(2, 0), ap(3, 0)}));
    EXPECT_FALSE(has_fip({ap(2, 0), ap(2, 1)}));
    EXPECT_TRUE(has_fip({ap(4, 1), ap(6, 5)}));
    EXPECT_EQ(intersect_all(std::vector{ap(4, 1), ap(6, 5)}), ap(12, 5));
    // a finite intersection is not enough
    EXPECT_FALSE(has_fip({ap(2, 0), PeriodicSet::make(2, {1}, {4})}));
}

TEST(FilterLab, BaseValidation)
{
    EXPECT_THROW(base({ap(2, 0), ap(2, 1)}), DomainError);
    EXPECT_THROW(base({PeriodicSet()}), DomainError);
    EXPECT_THROW(base({PeriodicSet::finite({1, 2, 3})}), DomainError);
}

TEST(FilterLab, Extend)
{
    const auto b = base({ap(2, 0)});
    const auto e = extend(b, ap(4, 0));
    ASSERT_TRUE(e);
    EXPECT_EQ(e->members(), (std::vector{ap(2, 0), ap(4, 0)}));
    EXPECT_FALSE(extend(b, ap(2, 1)));
    const auto empty = extend(FilterBase{}, ap(5, 3));
    ASSERT_TRUE(empty);
    EXPECT_EQ(empty->members(), std::vector{ap(5, 3)});
}

TEST(FilterLab, FeasibleResidues)
{
    using V = std::vector<std::uint64_t>;
    EXPECT_EQ(feasible_residues(base({ap(2, 0)}), 4), (V{0, 2}));
    EXPECT_EQ(feasible_residues(FilterBase{}, 3), (V{0, 1, 2}));
    EXPECT_EQ(feasible_residues(base({ap(6, 3)}), 4), (V{1, 3}));
}

TEST(FilterLab, FeasibleResiduesMatchExtension)
{
    // r is feasible exactly when m*N + r extends the base
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        std::vector<PeriodicSet> members;
        for (int k = 0; k < 2; ++k) {
            const long m = 1 + static_cast<long>(rng() % 12);
            members.push_back(ap(m, static_cast<long>(rng() % m)));
        }
        if (!has_fip(members)) continue;
        const auto b = base(members);
        const long m = 2 + static_cast<long>(rng() % 20);
        const auto rs = feasible_residues(b, m);
        for (long r = 0; r < m; ++r) {
            const bool listed = std::find(rs.begin(), rs.end(), static_cast<std::uint64_t>(r)) != rs.end();
            EXPECT_EQ(listed, b.extend(ap(m, r)).has_value());
        }
    }
}

TEST(FilterLab, Congruent)
{
    EXPECT_EQ(congruent_mod(base({ap(4, 1)}), base({ap(4, 1)}), 4), ResidueVerdict::congruent);
    EXPECT_EQ(congruent_mod(base({ap(4, 1)}), base({ap(4, 3)}), 4), ResidueVerdict::not_congruent);
    EXPECT_EQ(congruent_mod(base({ap(2, 0)}), base({ap(2, 0)}), 4), ResidueVerdict::undetermined);
}

TEST(FilterLab, Divides)
{
    EXPECT_EQ(divides_check(base({ap(6, 0)}), base({ap(12, 0)})).kind, DividesResult::Kind::passes);
    const auto f = divides_check(base({ap(6, 0)}), base({ap(4, 1)}));
    EXPECT_EQ(f.kind, DividesResult::Kind::fails);
    EXPECT_EQ(f.witness, ap(6, 0));
    EXPECT_EQ(divides_check(base({ap(2, 1)}), base({ap(3, 0)})).kind, DividesResult::Kind::vacuous);
}

// a principal filter at n divides the one at k*n: every upward-closed set
// holding n holds k*n
TEST(FilterLab, PrincipalShadow)
{
    for (long n = 1; n < 30; ++n)
        for (long k = 1; k < 6; ++k) {
            const auto up = up_closure({n});
            EXPECT_TRUE(up.contains(n * k));
        }
}

// adding members can only shrink the feasible residues
TEST(FilterLab, Monotone)
{
    const auto b = base({ap(2, 0)});
    const auto c = *b.extend(ap(3, 1));
    for (long m = 2; m < 30; ++m) {
        const auto rb = feasible_residues(b, m);
        for (auto r : feasible_residues(c, m)) EXPECT_NE(std::find(rb.begin(), rb.end(), r), rb.end());
    }
}

TEST(FilterLab, Nmax)
{
    EXPECT_EQ(nmax_witness(4, 1, {3}, {5, 7}), 5);
    EXPECT_EQ(nmax_witness(3, 1, {2}, {5}), 25);
    EXPECT_THROW(nmax_witness(4, 2, {3}, {5}), DomainError);
    EXPECT_THROW(nmax_witness(4, 1, {5}, {5, 10}), NoWitnessSource);
    EXPECT_THROW(nmax_witness(4, 1, {3}, {}), DomainError);
}
