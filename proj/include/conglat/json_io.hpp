#pragma once

// JSON encodings for every value type that crosses the CLI boundary.
//
// Integers up to 2^53 - 1 in magnitude are written as JSON numbers and
// anything larger as a decimal string; both forms are accepted on input.
// Decoders report the offending field by its path.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "conglat/antichain.hpp"
#include "conglat/crt.hpp"
#include "conglat/divisibility.hpp"
#include "conglat/error.hpp"
#include "conglat/filter_lab.hpp"
#include "conglat/integer.hpp"
#include "conglat/periodic_set.hpp"
#include "conglat/residue_geometry.hpp"

namespace conglat::json_io {

using nlohmann::json;

class ParseError : public DomainError {
public:
    ParseError(const std::string& field, const std::string& what)
        : DomainError("field '" + field + "': " + what), field_(field)
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

inline const Integer& safe_limit()
{
    static const Integer limit = (Integer(1) << 53) - 1;
    return limit;
}

inline json encode(const Integer& x)
{
    if (x <= safe_limit() && x >= -safe_limit()) return x.convert_to<std::int64_t>();
    return x.str();
}

// Always a decimal string, for outputs whose consumers expect one type.
inline json encode_string(const Integer& x) { return x.str(); }

inline json encode(const std::vector<Integer>& xs)
{
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode(x));
    return out;
}

inline json encode(const std::vector<std::uint64_t>& xs)
{
    json out = json::array();
    for (auto x : xs) out.push_back(encode(Integer(x)));
    return out;
}

inline json parse_text(const std::string& text, const std::string& field)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(field, std::string("malformed JSON: ") + e.what());
    }
}

inline Integer decode_integer(const json& j, const std::string& field)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(field, e.what());
        }
    }
    throw ParseError(field, "expected an integer, got " + std::string(j.type_name()));
}

inline std::vector<Integer> decode_integers(const json& j, const std::string& field)
{
    if (!j.is_array()) throw ParseError(field, "expected an array of integers");
    std::vector<Integer> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(decode_integer(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

inline const json& require(const json& j, const char* key, const std::string& field)
{
    if (!j.is_object()) throw ParseError(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(field + "." + key, "missing");
    return *it;
}

// Rewraps a domain violation found while building a value so the message
// names where it came from.
template <typename F>
auto with_field(const std::string& field, F&& build)
{
    try {
        return build();
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(field, e.what());
    } catch (const BudgetExceeded& e) {
        throw ParseError(field, e.what());
    }
}

// --- PeriodicSet ----------------------------------------------------------

inline json encode(const PeriodicSet& s)
{
    return {{"modulus", encode(Integer(s.modulus()))},
            {"residues", encode(s.residues())},
            {"add", encode(s.added())},
            {"remove", encode(s.removed())}};
}

inline PeriodicSet decode_periodic_set(const json& j, const std::string& field)
{
    const Integer m = decode_integer(require(j, "modulus", field), field + ".modulus");
    const auto rs = decode_integers(require(j, "residues", field), field + ".residues");
    std::vector<Integer> add, remove;
    if (j.contains("add")) add = decode_integers(j["add"], field + ".add");
    if (j.contains("remove")) remove = decode_integers(j["remove"], field + ".remove");
    return with_field(field, [&] { return PeriodicSet::make(m, rs, add, remove); });
}

inline std::vector<PeriodicSet> decode_periodic_sets(const json& j, const std::string& field)
{
    if (!j.is_array()) throw ParseError(field, "expected an array of periodic sets");
    std::vector<PeriodicSet> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(decode_periodic_set(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

inline FilterBase decode_filter_base(const json& j, const std::string& field)
{
    auto members = decode_periodic_sets(j, field);
    return with_field(field, [&] { return FilterBase(std::move(members)); });
}

inline json encode(const FilterBase& base)
{
    json out = json::array();
    for (const auto& s : base.members()) out.push_back(encode(s));
    return out;
}

// --- FiniteSet ------------------------------------------------------------

inline json encode(const FiniteSet& s) { return encode(s.elements()); }

inline FiniteSet decode_finite_set(const json& j, const std::string& field)
{
    auto xs = decode_integers(j, field);
    return with_field(field, [&] { return FiniteSet(std::move(xs)); });
}

// --- CRT ------------------------------------------------------------------

inline std::vector<Congruence> decode_system(const json& j, const std::string& field)
{
    if (!j.is_array()) throw ParseError(field, "expected an array of {\"m\":..,\"a\":..} objects");
    std::vector<Congruence> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        const Integer m = decode_integer(require(j[i], "m", f), f + ".m");
        const Integer a = decode_integer(require(j[i], "a", f), f + ".a");
        if (m < 1) throw ParseError(f + ".m", "modulus must be >= 1, got " + m.str());
        out.push_back(Congruence::make(m, a));
    }
    return out;
}

inline json encode_solution(const std::optional<SolutionClass>& c)
{
    if (!c) return {{"infeasible", true}};
    return {{"M", encode(c->modulus)}, {"x0", encode(c->residue)}};
}

inline ResidueChainTable decode_chain_table(const json& j, const std::string& field)
{
    if (!j.is_object()) throw ParseError(field, "expected an object mapping primes to residue chains");
    ResidueChainTable table;
    for (const auto& [key, chain] : j.items()) {
        const std::string f = field + "." + key;
        Integer p;
        try {
            p = parse_integer(key);
        } catch (const std::invalid_argument& e) {
            throw ParseError(f, e.what());
        }
        table[p] = decode_integers(chain, f);
        with_field(f, [&] {
            validate_chain(p, table[p]);
            return 0;
        });
    }
    return table;
}

inline json encode(const std::map<Integer, PrimeSupport>& classes)
{
    json out = json::object();
    for (const auto& [p, c] : classes) {
        if (c.kind == PrimeSupport::Kind::NonZero)
            out[p.str()] = {{"kind", "nonzero"}, {"s", c.value}};
        else
            out[p.str()] = {{"kind", "zero_to_depth"}, {"depth", c.value}};
    }
    return out;
}

// --- residue geometry -----------------------------------------------------

inline json encode(const ResidueSet& rs) { return {{"p", rs.p()}, {"set", rs.elements()}}; }

inline json encode(const GeometricDescriptor& d) { return {{"p", d.p}, {"s", d.seed}, {"r", d.ratio}}; }

inline json encode(const ExponentOffsets& e)
{
    return {{"exponents", e.exponents}, {"k0", e.base_exponent}, {"R", e.offsets}};
}

inline json encode(const StructureReport& r)
{
    return {{"gcd_closed", r.gcd_closed},
            {"multiples_closed", r.multiples_closed},
            {"arithmetic_progression", r.arithmetic_progression},
            {"offsets", encode(r.offsets)}};
}

// --- antichain ------------------------------------------------------------

inline AntichainSpec decode_antichain_spec(const json& j, const std::string& field)
{
    AntichainSpec spec;
    const auto& t = require(j, "T", field);
    if (!t.is_array()) throw ParseError(field + ".T", "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string f = field + ".T[" + std::to_string(i) + "]";
        TPrime tp;
        tp.prime = decode_integer(require(t[i], "prime", f), f + ".prime");
        tp.chain = decode_integers(require(t[i], "chain", f), f + ".chain");
        spec.t.push_back(std::move(tp));
    }
    if (j.contains("Q")) spec.q = decode_integers(j["Q"], field + ".Q");
    if (j.contains("substitution")) {
        const auto& sub = j["substitution"];
        if (sub == "strict") spec.substitution = Substitution::strict;
        else if (sub == "safe") spec.substitution = Substitution::safe;
        else throw ParseError(field + ".substitution", "expected \"strict\" or \"safe\"");
    }
    with_field(field, [&] {
        validate(spec);
        return 0;
    });
    return spec;
}

inline json encode(const AntichainSpec& spec)
{
    json t = json::array();
    for (const auto& tp : spec.t) t.push_back({{"prime", encode(tp.prime)}, {"chain", encode(tp.chain)}});
    return {{"T", t},
            {"Q", encode(spec.q)},
            {"substitution", spec.substitution == Substitution::safe ? "safe" : "strict"}};
}

inline json encode(const AntichainPrefix& prefix)
{
    json out = json::array();
    for (const auto& x : prefix.values) out.push_back(encode_string(x));
    return out;
}

inline AntichainPrefix decode_prefix(const json& j, const std::string& field)
{
    return AntichainPrefix{decode_integers(j, field)};
}

inline json encode(const VerificationReport& r)
{
    return {{"passed", r.passed()},
            {"monotone", r.monotone},
            {"antichain", r.antichain},
            {"condition1", r.condition1},
            {"condition2", r.condition2},
            {"condition3", r.condition3},
            {"level_growth", r.level_growth},
            {"failures", r.failures}};
}

} // namespace conglat::json_io
