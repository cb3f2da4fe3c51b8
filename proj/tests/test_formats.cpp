#include "doctest.h"

#include <string>

#include "rp/formats.hpp"

TEST_SUITE_BEGIN("formats");

TEST_CASE("code display order") {
    const auto code = rp::parse_code("A0B0C");
    using Level = std::optional<char>;
    CHECK(code.levels() == std::vector<Level>{'C', std::nullopt, 'B', std::nullopt, 'A'});
    CHECK(rp::format_code(code) == "A0B0C");
    CHECK(rp::format_code(rp::parse_code("")) == "");
    CHECK(rp::format_code(rp::encode_word("AABAAAABAACAABAAAABAA")) == "A0B0C");
    // a leading 0 would be a leading zero digit of the length
    CHECK_THROWS_AS(rp::parse_code("0A"), std::invalid_argument);
}

TEST_CASE("composition syntax") {
    CHECK(rp::parse_composition("2+1+2+6+2+1+2").parts() ==
          std::vector<rp::Part>{2, 1, 2, 6, 2, 1, 2});
    CHECK(rp::parse_composition("").parts().empty());
    CHECK(rp::format_composition(rp::parse_composition("10+3")) == "10+3");
    CHECK(rp::format_composition(rp::Composition{}) == "");
    CHECK_THROWS_AS(rp::parse_composition("1++2"), std::invalid_argument);
    CHECK_THROWS_AS(rp::parse_composition("1+0+1"), std::invalid_argument);
    CHECK_THROWS_AS(rp::parse_composition("1+x"), std::invalid_argument);
    CHECK_THROWS_AS(rp::parse_composition("+1"), std::invalid_argument);
}

TEST_CASE("partition syntax") {
    CHECK(rp::parse_partition("16,4,4,4,4,1,1,1,1,1").multiplicities() ==
          std::vector<std::uint64_t>{5, 0, 4, 0, 1});
    CHECK(rp::parse_partition("m=[5,0,4,0,1]").multiplicities() ==
          std::vector<std::uint64_t>{5, 0, 4, 0, 1});
    CHECK(rp::parse_partition("m=[1,0]").multiplicities() == std::vector<std::uint64_t>{1});
    CHECK(rp::parse_partition("").multiplicities().empty());
    CHECK(rp::parse_partition("m=[]").multiplicities().empty());
    CHECK(rp::format_partition(rp::parse_partition("m=[5,0,4,0,1]")) == "16,4,4,4,4,1,1,1,1,1");
    CHECK(rp::format_partition(rp::BinaryPartition{}) == "");
    CHECK_THROWS_AS(rp::parse_partition("5"), std::invalid_argument);
    CHECK_THROWS_AS(rp::parse_partition("4,,1"), std::invalid_argument);
    CHECK_THROWS_AS(rp::parse_partition("m=[1,2"), std::invalid_argument);
    CHECK_THROWS_AS(rp::parse_partition("0"), std::invalid_argument);
}

TEST_CASE("word helpers") {
    CHECK(rp::pair_word("MADAMIMADAM") == "AMDMAIAMDMA");
    CHECK(rp::is_rp_word("ABACABA"));
    CHECK(rp::decode_code(rp::parse_code("A0B0C")) == "AABAAAABAACAABAAAABAA");
    CHECK(rp::string_from_word(rp::word_from_string("abc")) == "abc");
}

TEST_SUITE_END();
