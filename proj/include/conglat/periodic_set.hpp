#pragma once

// Eventually periodic subsets of the non-negative integers.
//
// A set is stored as a residue pattern modulo a period plus two finite
// lists of exceptions: points added on top of the pattern and points
// removed from it. Every constructor returns the canonical form (least
// period, minimal exception lists), so structural equality coincides with
// set equality.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "conglat/error.hpp"
#include "conglat/integer.hpp"

namespace conglat {

class PeriodicSet {
public:
    using Residue = std::uint64_t;

    // Largest period an operation may materialize. Residue patterns are
    // stored explicitly, so anything bigger is refused up front.
    static constexpr std::uint64_t max_period = std::uint64_t{1} << 24;

    // The empty set.
    PeriodicSet() = default;

    // Validates and canonicalizes. Throws DomainError for modulus 0,
    // residues outside [0, modulus), negative exceptions, or a point listed
    // as both added and removed.
    static PeriodicSet make(const Integer& modulus,
                            const std::vector<Integer>& residues,
                            const std::vector<Integer>& added = {},
                            const std::vector<Integer>& removed = {})
    {
        if (modulus < 1) throw DomainError("modulus must be >= 1, got " + modulus.str());
        if (modulus > max_period)
            throw BudgetExceeded("period " + modulus.str() + " exceeds the supported maximum");
        const auto m = modulus.convert_to<Residue>();

        std::vector<Residue> rs;
        rs.reserve(residues.size());
        for (const auto& r : residues) {
            if (r < 0 || r >= modulus)
                throw DomainError("residue " + r.str() + " outside [0, " + modulus.str() + ")");
            rs.push_back(r.convert_to<Residue>());
        }
        normalize(rs);

        auto add = sorted_unique(added);
        auto rem = sorted_unique(removed);
        for (const auto& x : add)
            if (x < 0) throw DomainError("added element " + x.str() + " is negative");
        for (const auto& x : rem)
            if (x < 0) throw DomainError("removed element " + x.str() + " is negative");
        std::vector<Integer> both;
        std::set_intersection(add.begin(), add.end(), rem.begin(), rem.end(), std::back_inserter(both));
        if (!both.empty())
            throw DomainError("element " + both.front().str() + " is both added and removed");

        std::vector<std::pair<Integer, bool>> points;
        points.reserve(add.size() + rem.size());
        for (auto& x : add) points.emplace_back(std::move(x), true);
        for (auto& x : rem) points.emplace_back(std::move(x), false);
        return from_points(m, std::move(rs), std::move(points));
    }

    // The finite set with exactly these elements.
    static PeriodicSet finite(const std::vector<Integer>& elements) { return make(1, {}, elements, {}); }

    const Residue& modulus() const { return modulus_; }
    const std::vector<Residue>& residues() const { return residues_; }
    const std::vector<Integer>& added() const { return added_; }
    const std::vector<Integer>& removed() const { return removed_; }

    bool contains(const Integer& n) const
    {
        if (n < 0) return false;
        if (std::binary_search(added_.begin(), added_.end(), n)) return true;
        if (!in_pattern(n)) return false;
        return !std::binary_search(removed_.begin(), removed_.end(), n);
    }

    // Membership in the residue pattern alone, ignoring exceptions.
    bool in_pattern(const Integer& n) const
    {
        if (n < 0) return false;
        const auto r = (n % modulus_).convert_to<Residue>();
        return std::binary_search(residues_.begin(), residues_.end(), r);
    }

    bool is_empty() const { return residues_.empty() && added_.empty(); }

    // Removing finitely many points never makes an infinite pattern finite.
    bool is_infinite() const { return !residues_.empty(); }

    bool is_pure() const { return added_.empty() && removed_.empty(); }

    // Largest listed exception, or 0 when there are none.
    Integer max_edit() const
    {
        Integer best = 0;
        if (!added_.empty()) best = std::max(best, added_.back());
        if (!removed_.empty()) best = std::max(best, removed_.back());
        return best;
    }

    friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

    // Combines two sets pointwise with `op` over a common period.
    template <typename Op>
    static PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, Op op)
    {
        const Integer period = lcm(Integer(a.modulus_), Integer(b.modulus_));
        if (period > max_period)
            throw BudgetExceeded("combined period " + period.str() + " exceeds the supported maximum");
        const auto m = period.convert_to<Residue>();

        const auto mask_a = a.pattern_mask();
        const auto mask_b = b.pattern_mask();
        std::vector<Residue> rs;
        for (Residue x = 0; x < m; ++x)
            if (op(mask_a[x % a.modulus_], mask_b[x % b.modulus_])) rs.push_back(x);

        std::vector<std::pair<Integer, bool>> points;
        for (const auto* s : {&a, &b}) {
            for (const auto* list : {&s->added_, &s->removed_})
                for (const auto& x : *list) points.emplace_back(x, op(a.contains(x), b.contains(x)));
        }
        return from_points(m, std::move(rs), std::move(points));
    }

    PeriodicSet complement() const
    {
        const auto mask = pattern_mask();
        std::vector<Residue> rs;
        for (Residue x = 0; x < modulus_; ++x)
            if (!mask[x]) rs.push_back(x);
        std::vector<std::pair<Integer, bool>> points;
        for (const auto& x : added_) points.emplace_back(x, false);
        for (const auto& x : removed_) points.emplace_back(x, true);
        return from_points(modulus_, std::move(rs), std::move(points));
    }

private:
    Residue modulus_ = 1;
    std::vector<Residue> residues_;
    std::vector<Integer> added_;
    std::vector<Integer> removed_;

    static void normalize(std::vector<Residue>& rs)
    {
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    }

    static std::vector<Integer> sorted_unique(std::vector<Integer> xs)
    {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return xs;
    }

    std::vector<bool> pattern_mask() const
    {
        std::vector<bool> mask(modulus_, false);
        for (auto r : residues_) mask[r] = true;
        return mask;
    }

    static std::vector<Residue> prime_divisors(Residue m)
    {
        std::vector<Residue> ps;
        for (Residue p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                ps.push_back(p);
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) ps.push_back(m);
        return ps;
    }

    // Shrinks the period while the pattern is a union of full cosets of a
    // proper divisor. Trying each prime quotient until none applies reaches
    // the least period, since the set of periods is closed under gcd.
    void minimize_period()
    {
        bool shrunk = true;
        while (shrunk && modulus_ > 1) {
            shrunk = false;
            const auto mask = pattern_mask();
            for (auto p : prime_divisors(modulus_)) {
                const Residue d = modulus_ / p;
                bool invariant = true;
                for (auto r : residues_) {
                    if (!mask[(r + d) % modulus_]) {
                        invariant = false;
                        break;
                    }
                }
                if (!invariant) continue;
                for (auto& r : residues_) r %= d;
                normalize(residues_);
                modulus_ = d;
                shrunk = true;
                break;
            }
        }
    }

    // Builds the canonical set whose pattern is `rs` mod `m` and whose
    // membership at each listed point is the given flag.
    static PeriodicSet from_points(Residue m, std::vector<Residue> rs, std::vector<std::pair<Integer, bool>> points)
    {
        PeriodicSet s;
        s.modulus_ = m;
        s.residues_ = std::move(rs);
        s.minimize_period();
        for (auto& [x, member] : points) {
            const bool pattern = s.in_pattern(x);
            if (member && !pattern) s.added_.push_back(std::move(x));
            else if (!member && pattern) s.removed_.push_back(std::move(x));
        }
        s.added_ = sorted_unique(std::move(s.added_));
        s.removed_ = sorted_unique(std::move(s.removed_));
        return s;
    }
};

inline bool member(const PeriodicSet& a, const Integer& n) { return a.contains(n); }

inline PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b)
{
    return PeriodicSet::combine(a, b, std::logical_and<>{});
}

inline PeriodicSet unite(const PeriodicSet& a, const PeriodicSet& b)
{
    return PeriodicSet::combine(a, b, std::logical_or<>{});
}

inline PeriodicSet complement(const PeriodicSet& a) { return a.complement(); }

inline PeriodicSet difference(const PeriodicSet& a, const PeriodicSet& b)
{
    return PeriodicSet::combine(a, b, [](bool x, bool y) { return x && !y; });
}

inline bool is_empty(const PeriodicSet& a) { return a.is_empty(); }
inline bool is_infinite(const PeriodicSet& a) { return a.is_infinite(); }

inline PeriodicSet all_naturals() { return PeriodicSet::make(1, {0}); }

// m*N + r
inline PeriodicSet progression(const Integer& m, const Integer& r)
{
    if (m < 1) throw DomainError("progression modulus must be >= 1");
    if (r < 0 || r >= m) throw DomainError("progression residue " + r.str() + " outside [0, " + m.str() + ")");
    return PeriodicSet::make(m, {r});
}

// Multiples of at least one of ns, 0 included.
inline PeriodicSet divisibility_union(const std::vector<Integer>& ns)
{
    Integer period = 1;
    for (const auto& n : ns) {
        if (n < 2) throw DomainError("divisibility_union expects integers >= 2, got " + n.str());
        period = lcm(period, n);
        if (period > PeriodicSet::max_period)
            throw BudgetExceeded("lcm " + period.str() + " exceeds the supported maximum period");
    }
    const auto m = period.convert_to<PeriodicSet::Residue>();
    std::vector<bool> mask(m, false);
    for (const auto& n : ns) {
        const auto step = n.convert_to<PeriodicSet::Residue>();
        for (PeriodicSet::Residue x = 0; x < m; x += step) mask[x] = true;
    }
    std::vector<Integer> rs;
    for (PeriodicSet::Residue x = 0; x < m; ++x)
        if (mask[x]) rs.emplace_back(x);
    return PeriodicSet::make(period, rs);
}

// Complement of n*N.
inline PeriodicSet non_divisibility(const Integer& n)
{
    if (n < 2) throw DomainError("non_divisibility expects n >= 2, got " + n.str());
    return complement(progression(n, 0));
}

inline std::vector<Integer> enumerate_up_to(const PeriodicSet& a, const Integer& bound)
{
    std::vector<Integer> out;
    for (Integer n = 0; n <= bound; ++n)
        if (a.contains(n)) out.push_back(n);
    return out;
}

} // namespace conglat
