#include <doctest.h>

#include <cmath>

#include "simplexbound/errors.hpp"
#include "simplexbound/numeric.hpp"
#include "support.hpp"

using namespace simplexbound;

TEST_CASE("bitsize follows floor(log2)+1 with bit(0)=1") {
    CHECK(bitsize(Int(0)) == 1);
    CHECK(bitsize(Int(1)) == 1);
    CHECK(bitsize(Int(2)) == 2);
    CHECK(bitsize(Int(5)) == 3);
    CHECK(bitsize(Int(1) << 20) == 21);
    CHECK(bitsize((Int(1) << 20) - 1) == 20);
}

TEST_CASE("ceil_log2 on integers") {
    CHECK(ceil_log2(Int(1)) == 0);
    CHECK(ceil_log2(Int(2)) == 1);
    CHECK(ceil_log2(Int(3)) == 2);
    CHECK(ceil_log2(Int(1024)) == 10);
    CHECK(ceil_log2(Int(1025)) == 11);
}

TEST_CASE("ceil_log2 on rationals, including values below one") {
    CHECK(ceil_log2(Rat(4)) == 2);
    CHECK(ceil_log2(Rat(1, 4)) == -2);
    CHECK(ceil_log2(Rat(1, 3)) == -1);
    CHECK(ceil_log2(Rat(8, 3)) == 2);
    CHECK(ceil_log2(Rat(5, 4)) == 1);
    // exhaustive against direct power comparison on a small range
    for (long num = 1; num <= 40; ++num)
        for (long den = 1; den <= 40; ++den) {
            Rat q = make_rat(Int(num), Int(den));
            long e = ceil_log2(q);
            // 2^e >= q > 2^(e-1)
            Rat hi = e >= 0 ? Rat(pow2(static_cast<unsigned long>(e)))
                            : make_rat(1, pow2(static_cast<unsigned long>(-e)));
            CHECK(hi >= q);
            CHECK(hi / 2 < q);
        }
}

TEST_CASE("make_rat canonicalizes and parse_rat accepts all documented forms") {
    CHECK(make_rat(Int(2), Int(4)) == Rat(1, 2));
    CHECK(make_rat(Int(-2), Int(-4)) == Rat(1, 2));
    CHECK(rat_string(Rat(3, 4)) == "3/4");
    CHECK(rat_string(Rat(7)) == "7");
    CHECK(rat_string(Rat(-7, 2)) == "-7/2");

    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-3/4") == Rat(-3, 4));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("0.25") == Rat(1, 4));
    CHECK(parse_rat("-1.5") == Rat(-3, 2));

    CHECK_THROWS_AS(parse_rat(""), InputError);
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("1.5/2"), InputError);
    CHECK_THROWS_AS(parse_rat("abc"), InputError);
}

TEST_CASE("isqrt floor and ceiling") {
    CHECK(isqrt_floor(Int(10)) == 3);
    CHECK(isqrt_ceil(Int(10)) == 4);
    CHECK(isqrt_floor(Int(16)) == 4);
    CHECK(isqrt_ceil(Int(16)) == 4);
    CHECK(isqrt_floor(Int(0)) == 0);
}

TEST_CASE("log2 enclosures are correct and tight") {
    for (long n : {2L, 3L, 5L, 7L, 100L, 12345L}) {
        Rat up = log2_upper(Int(n));
        Rat down = log2_lower(Int(n));
        CHECK(down <= up);
        // reference from binary64, whose error on these inputs is ~1e-15
        double ref = std::log2(static_cast<double>(n));
        CHECK(down.get_d() <= ref + 1e-9);
        CHECK(up.get_d() >= ref - 1e-9);
        CHECK(up - down < make_rat(1, pow2(48)));
        // floor/ceil agreement with the exact integer ceil_log2
        CHECK(ceil_log2(Int(n)) >= down.get_d() - 1e-9);
    }
    // exact on powers of two
    CHECK(log2_upper(Int(4)) == Rat(2));
    CHECK(log2_lower(Int(4)) == Rat(2));
    CHECK(log2_upper(Int(1)) == Rat(0));
}

TEST_CASE("pow_upper: exact on integer exponents, sound on fractional ones") {
    CHECK(pow_upper(Int(3), Rat(2)) == Rat(9));
    CHECK(pow_upper(Int(7), Rat(3)) == Rat(343));
    CHECK(pow_upper(Int(2), Rat(0)) == Rat(1));
    Rat r = pow_upper(Int(2), Rat(1, 2));
    CHECK(r * r >= Rat(2));          // upper bound
    CHECK(r < Rat(3, 2));            // not wildly loose
    Rat s = pow_upper(Int(10), Rat(3, 2));
    CHECK(s * s >= Rat(1000));
    CHECK(s <= Rat(32));
}

TEST_CASE("decimal_string_round_up pads and rounds toward +inf") {
    CHECK(decimal_string_round_up(Rat(1, 2), 6) == "0.500000");
    CHECK(decimal_string_round_up(Rat(1, 3), 6) == "0.333334");
    CHECK(decimal_string_round_up(Rat(3), 6) == "3.000000");
    CHECK(decimal_string_round_up(Rat(2, 3), 2) == "0.67");
    CHECK(decimal_string_round_up(Rat(686), 6) == "686.000000");
}

TEST_CASE("sturm support self-check: the test oracle counts roots correctly") {
    using namespace sbtest;
    // (T^2 - 2)(T - 3) has roots -sqrt2, sqrt2, 3
    simplexbound::UniPoly p(std::vector<Int>{Int(6), Int(-2), Int(-3), Int(1)});
    CHECK(sturm_count_all(p) == 3);
    RPoly rp = rpoly_from(p);
    CHECK(sturm_count(rp, Rat(0), Rat(2)) == 1);
    CHECK(sturm_count(rp, Rat(-2), Rat(2)) == 2);
    CHECK(sturm_count(rp, Rat(2), Rat(4)) == 1);
}
