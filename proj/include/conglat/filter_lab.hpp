#pragma once

// Finite filter bases of eventually periodic sets.
//
// A base is valid when every finite intersection of its members is
// infinite, i.e. it extends to a nonprincipal ultrafilter. Since the members
// are periodic the whole question reduces to one exact intersection.
// Everything here is a sound finitary approximation: nothing decides a
// statement about the ultrafilters themselves.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "conglat/crt.hpp"
#include "conglat/divisibility.hpp"
#include "conglat/error.hpp"
#include "conglat/integer.hpp"
#include "conglat/periodic_set.hpp"

namespace conglat {

inline PeriodicSet intersect_all(std::span<const PeriodicSet> members)
{
    PeriodicSet acc = all_naturals();
    for (const auto& s : members) acc = intersect(acc, s);
    return acc;
}

// True iff the intersection of all members is infinite; for a finite family
// that makes every sub-intersection infinite too.
inline bool has_fip(std::span<const PeriodicSet> members) { return intersect_all(members).is_infinite(); }

inline bool has_fip(const std::vector<PeriodicSet>& members) { return has_fip(std::span<const PeriodicSet>(members)); }

class FilterBase {
public:
    FilterBase() = default;

    // Throws DomainError if a member is empty or the family lacks the
    // (infinite) finite intersection property.
    explicit FilterBase(std::vector<PeriodicSet> members) : members_(std::move(members))
    {
        for (std::size_t i = 0; i < members_.size(); ++i)
            if (members_[i].is_empty()) throw DomainError("filter base member " + std::to_string(i) + " is empty");
        core_ = intersect_all(members_);
        if (!core_.is_infinite()) throw DomainError("filter base has a finite intersection");
    }

    const std::vector<PeriodicSet>& members() const { return members_; }

    // Intersection of all members.
    const PeriodicSet& core() const { return core_; }

    // The base with s appended, or nullopt if that breaks the property.
    std::optional<FilterBase> extend(const PeriodicSet& s) const
    {
        PeriodicSet next = intersect(core_, s);
        if (!next.is_infinite()) return std::nullopt;
        FilterBase out;
        out.members_ = members_;
        out.members_.push_back(s);
        out.core_ = std::move(next);
        return out;
    }

private:
    std::vector<PeriodicSet> members_;
    PeriodicSet core_ = all_naturals();
};

inline std::optional<FilterBase> extend(const FilterBase& base, const PeriodicSet& s) { return base.extend(s); }

// Residues r mod m such that m*N + r can join the base; every ultrafilter
// extending the base has its residue mod m in this set. The core class
// x mod L meets r mod m infinitely often iff x = r (mod gcd(L, m)).
inline std::vector<std::uint64_t> feasible_residues(const FilterBase& base, const Integer& m)
{
    if (m < 2) throw DomainError("feasible_residues needs m >= 2");
    if (m > PeriodicSet::max_period) throw BudgetExceeded("modulus too large");
    const auto mm = m.convert_to<std::uint64_t>();
    const auto& core = base.core();
    const std::uint64_t g = std::gcd(core.modulus(), mm);
    std::vector<bool> hit(g, false);
    for (auto x : core.residues()) hit[x % g] = true;
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < mm; ++r)
        if (hit[r % g]) out.push_back(r);
    return out;
}

enum class ResidueVerdict { congruent, not_congruent, undetermined };

inline ResidueVerdict congruent_mod(const FilterBase& f, const FilterBase& g, const Integer& m)
{
    const auto rf = feasible_residues(f, m);
    const auto rg = feasible_residues(g, m);
    if (rf.size() == 1 && rf == rg) return ResidueVerdict::congruent;
    std::vector<std::uint64_t> common;
    std::set_intersection(rf.begin(), rf.end(), rg.begin(), rg.end(), std::back_inserter(common));
    if (common.empty()) return ResidueVerdict::not_congruent;
    return ResidueVerdict::undetermined;
}

struct DividesResult {
    enum class Kind { passes, fails, vacuous };
    Kind kind = Kind::vacuous;
    // the upward-closed member of the left base that the right base rejects
    std::optional<PeriodicSet> witness;
};

// Necessary condition for some ultrafilter over f to divide some ultrafilter
// over g: each upward-closed member of f must be compatible with g. Members
// with exceptions away from 0 are skipped since upward-closedness is not
// decided for them.
inline DividesResult divides_check(const FilterBase& f, const FilterBase& g)
{
    DividesResult result;
    for (const auto& s : f.members()) {
        const bool pure = std::all_of(s.added().begin(), s.added().end(), [](const Integer& x) { return x == 0; }) &&
                          std::all_of(s.removed().begin(), s.removed().end(), [](const Integer& x) { return x == 0; });
        if (!pure || !is_upward_closed(s)) continue;
        if (!g.extend(s)) return {DividesResult::Kind::fails, s};
        result.kind = DividesResult::Kind::passes;
    }
    return result;
}

// No element of the pool is coprime to m and to all forbidden divisors.
class NoWitnessSource : public DomainError {
public:
    using DomainError::DomainError;
};

// Least positive x with x = r (mod m), a | x and n_i not dividing x, where a
// is the least pool element coprime to m and every n_i.
inline Integer nmax_witness(const Integer& m, const Integer& r, const std::vector<Integer>& forbidden,
                            const std::vector<Integer>& pool)
{
    if (m < 2) throw DomainError("m must be >= 2");
    if (r <= 0 || r >= m) throw DomainError("r must lie in (0, m)");
    if (gcd(m, r) != 1) throw DomainError("gcd(" + m.str() + ", " + r.str() + ") = " + gcd(m, r).str() + " != 1");
    if (pool.empty()) throw DomainError("pool must be nonempty");
    for (const auto& n : forbidden)
        if (n < 2) throw DomainError("forbidden divisors must be >= 2, got " + n.str());

    std::vector<Integer> sorted_pool = pool;
    std::sort(sorted_pool.begin(), sorted_pool.end());
    std::optional<Integer> source;
    for (const auto& a : sorted_pool) {
        if (a < 2) throw DomainError("pool elements must be >= 2, got " + a.str());
        if (gcd(a, m) != 1) continue;
        if (std::any_of(forbidden.begin(), forbidden.end(), [&](const Integer& n) { return gcd(a, n) != 1; })) continue;
        source = a;
        break;
    }
    if (!source) throw NoWitnessSource("no pool element is coprime to m and every forbidden divisor");

    const auto cls = solve_pair(Congruence::make(m, r), Congruence::make(*source, 0));
    if (!cls) throw InternalError("coprime moduli gave an infeasible system");
    Integer window = cls->modulus;
    for (const auto& n : forbidden) window = lcm(window, n);
    for (Integer x = cls->residue; x <= window + cls->residue; x += cls->modulus) {
        if (x == 0) continue;
        if (std::none_of(forbidden.begin(), forbidden.end(), [&](const Integer& n) { return x % n == 0; })) return x;
    }
    throw InternalError("no witness within one full period");
}

} // namespace conglat
