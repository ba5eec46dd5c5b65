#include <doctest.h>

#include "mt/money.hpp"

using namespace mt;

TEST_CASE("parse_money handles whole and fractional amounts exactly") {
    CHECK(parse_money("35") == Money{3500});
    CHECK(parse_money("35.2") == Money{3520});
    CHECK(parse_money("35.25") == Money{3525});
    CHECK(parse_money("0.05") == Money{5});
    CHECK(parse_money("-6.49") == Money{-649});
    CHECK(parse_money("+1.00") == Money{100});
    CHECK(parse_money("0") == Money{0});
    CHECK(parse_money("111.91") == Money{11191});
}

TEST_CASE("parse_money rejects malformed input") {
    CHECK_FALSE(parse_money(""));
    CHECK_FALSE(parse_money("."));
    CHECK_FALSE(parse_money("-"));
    CHECK_FALSE(parse_money("100."));
    CHECK_FALSE(parse_money("1.234")); // more precision than a cent
    CHECK_FALSE(parse_money("1e2"));
    CHECK_FALSE(parse_money(" 35"));
    CHECK_FALSE(parse_money("35 "));
    CHECK_FALSE(parse_money("12,50"));
    CHECK_FALSE(parse_money("abc"));
}

TEST_CASE("parse_money rejects values beyond the 64-bit cent range") {
    CHECK(parse_money("92233720368547758.07") ==
          Money{9223372036854775807LL}); // largest representable
    CHECK_FALSE(parse_money("92233720368547758.08"));
    CHECK_FALSE(parse_money("99999999999999999999"));
}

TEST_CASE("format_money renders two decimals and round-trips") {
    CHECK(format_money(3500) == "35.00");
    CHECK(format_money(-649) == "-6.49");
    CHECK(format_money(5) == "0.05");
    CHECK(format_money(0) == "0.00");
    CHECK(format_money(-5) == "-0.05");

    for (Money v : {Money{0}, Money{1}, Money{-1}, Money{12345}, Money{-99},
                    Money{9223372036854775807LL}}) {
        CHECK(parse_money(format_money(v)) == v);
    }
}

TEST_CASE("round_half_even ties go to the even cent") {
    CHECK(round_half_even(12.5) == 12);
    CHECK(round_half_even(13.5) == 14);
    CHECK(round_half_even(-12.5) == -12);
    CHECK(round_half_even(-13.5) == -14);
    CHECK(round_half_even(2.4999999) == 2);
    CHECK(round_half_even(2.5000001) == 3);
    CHECK(round_half_even(80.0) == 80);
}
