#include <doctest.h>

#include "test_util.hpp"
#include "wallscope/stability.hpp"

using namespace wallscope;

namespace {

const Char3 kV = make_char(rat(1), rat(0), rat(-6), rat(15));

Char3 line_bundle(long n) {
    return tensor_line(make_char(rat(1), rat(0), rat(0), rat(0)), n);
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("tilt_charge") {
    const ChargeValue z = tilt_charge(kV, StabPoint(rat(2), rat(-4)));
    CHECK(z.re == 0);
    CHECK(z.im == 4);
    const ChargeValue zo = tilt_charge(make_char(rat(1), rat(0), rat(0), rat(0)),
                                       StabPoint(rat(1), rat(0)));
    CHECK(zo.re == rat(1, 2));
    CHECK(zo.im == 0);
    const ChargeValue zq = tilt_charge(make_char(rat(0), rat(2), rat(-8), rat(49, 3)),
                                       StabPoint(rat(1), rat(-4)));
    CHECK(zq.re == 0);
    CHECK(zq.im == 2);
}

TEST_CASE("tilt_slope") {
    CHECK(tilt_slope(kV, StabPoint(rat(2), rat(-4))) == Slope::of(rat(0)));
    // at (alpha,beta) = (2,-4) the structure-sheaf twist O(-2) has the same
    // slope: the point sits on the smallest wall
    CHECK(tilt_slope(line_bundle(-2), StabPoint(rat(2), rat(-4))) == Slope::of(rat(0)));
    CHECK(tilt_slope(make_char(rat(0), rat(0), rat(3), rat(1)), StabPoint(rat(1), rat(2))) ==
          Slope::inf());
}

TEST_CASE("bridgeland charge and slope") {
    // on beta^2 - alpha^2 = 12 the charge of v is real
    const StabPoint apex1(rat(2), rat(-4));  // (-4)^2 - 2^2 = 12
    CHECK(bridgeland_charge(kV, apex1).im == 0);
    CHECK(bridgeland_slope(kV, apex1) == Slope::inf());
    const StabPoint apex4(rat(11, 2), rat(-13, 2));  // (13/2)^2 - (11/2)^2 = 12
    CHECK(bridgeland_charge(kV, apex4).im == 0);

    const ChargeValue zp = bridgeland_charge(make_char(rat(0), rat(0), rat(0), rat(7)),
                                             StabPoint(rat(3), rat(-2)));
    CHECK(zp.re == -7);
    CHECK(zp.im == 0);

    // im is independent of s
    for (int i = 0; i < 200; ++i) {
        const Char3 c = testutil::random_char();
        const Rat alpha = abs(testutil::random_rat()) + 1;
        const Rat beta = testutil::random_rat();
        const ChargeValue z1 = bridgeland_charge(c, StabPoint(alpha, beta, rat(1)));
        const ChargeValue z2 = bridgeland_charge(c, StabPoint(alpha, beta, rat(17, 5)));
        CHECK(z1.im == z2.im);
    }
}

TEST_CASE("slopes are scale-invariant") {
    for (int i = 0; i < 200; ++i) {
        const Char3 c = testutil::random_char();
        const Rat alpha = abs(testutil::random_rat()) + 1;
        const StabPoint p(alpha, testutil::random_rat());
        for (long k : {2L, 3L, 7L}) {
            CHECK(tilt_slope(rat(k) * c, p) == tilt_slope(c, p));
            CHECK(bridgeland_slope(rat(k) * c, p) == bridgeland_slope(c, p));
        }
    }
}

TEST_CASE("bg_discriminant") {
    CHECK(bg_discriminant(kV) == 12);
    CHECK(bg_discriminant(make_char(rat(0), rat(2), rat(-8), rat(49, 3))) == 4);
    for (long n = -5; n <= 5; ++n) CHECK(bg_discriminant(line_bundle(n)) == 0);
    // twist-invariance
    for (int i = 0; i < 500; ++i) {
        const Char3 c = testutil::random_char();
        CHECK(bg_discriminant(twist(c, testutil::random_rat())) == bg_discriminant(c));
    }
}

TEST_CASE("bmt_quantity") {
    CHECK(bmt_quantity(kV, StabPoint(rat(1), rat(-4))) == -12);
    CHECK(bmt_quantity(make_char(rat(0), rat(0), rat(1), rat(-1)), StabPoint(rat(1), rat(0))) ==
          4);
    for (long n = -4; n <= 4; ++n)
        for (int i = 0; i < 50; ++i) {
            const Rat alpha = abs(testutil::random_rat()) + 1;
            CHECK(bmt_quantity(line_bundle(n), StabPoint(alpha, testutil::random_rat())) == 0);
        }
}

TEST_CASE("stab point validation") {
    CHECK_THROWS_AS(StabPoint(rat(0), rat(1)), std::domain_error);
    CHECK_THROWS_AS(StabPoint(rat(-1), rat(1)), std::domain_error);
    CHECK_THROWS_AS(StabPoint(rat(1), rat(1), rat(0)), std::domain_error);
    CHECK(StabPoint(rat(1), rat(0)).s == 1);
}

}  // TEST_SUITE
