#include <gtest/gtest.h>

#include "conglat/json_io.hpp"

using namespace conglat;
using namespace conglat::json_io;

TEST(JsonIo, IntegerEncoding)
{
    EXPECT_EQ(encode(Integer(42)), json(42));
    const Integer limit = (Integer(1) << 53) - 1;
    EXPECT_TRUE(encode(limit).is_number());
    EXPECT_TRUE(encode(limit + 1).is_string());
    EXPECT_EQ(decode_integer(json("123456789012345678901234567890"), "x"), Integer("123456789012345678901234567890"));
    EXPECT_THROW(decode_integer(json(1.5), "x"), ParseError);
    EXPECT_THROW(decode_integer(json("12a"), "x"), ParseError);
}

TEST(JsonIo, PeriodicSetRoundTrip)
{
    const auto s = PeriodicSet::make(6, {1, 5}, {2}, {7});
    EXPECT_EQ(decode_periodic_set(encode(s), "s"), s);
}

TEST(JsonIo, FieldNamedInErrors)
{
    try {
        decode_system(json::parse(R"([{"m":3,"a":1},{"m":0,"a":1}])"), "system");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.field(), "system[1].m");
    }
    try {
        decode_system(json::parse(R"([{"m":3}])"), "system");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.field(), "system[0].a");
    }
    try {
        decode_periodic_set(json::parse(R"({"modulus":4,"residues":[5]})"), "set");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.field(), "set");
    }
}

TEST(JsonIo, SolutionEncoding)
{
    EXPECT_EQ(encode_solution(SolutionClass{15, 8}).dump(), R"({"M":15,"x0":8})");
    EXPECT_EQ(encode_solution(std::nullopt).dump(), R"({"infeasible":true})");
}

TEST(JsonIo, SpecRoundTrip)
{
    const auto j = json::parse(R"({"T":[{"prime":3,"chain":[1,4]},{"prime":5,"chain":[0,5]}],"Q":[2],"substitution":"safe"})");
    const auto spec = decode_antichain_spec(j, "spec");
    EXPECT_EQ(spec.substitution, Substitution::safe);
    EXPECT_EQ(encode(spec), j);
    EXPECT_THROW(decode_antichain_spec(json::parse(R"({"T":[{"prime":4,"chain":[1]}]})"), "spec"), ParseError);
}

TEST(JsonIo, PrefixAsStrings)
{
    EXPECT_EQ(encode(AntichainPrefix{{3, 40}}).dump(), R"(["3","40"])");
    EXPECT_EQ(decode_prefix(json::parse(R"(["3",40])"), "prefix").values, (std::vector<Integer>{3, 40}));
}
