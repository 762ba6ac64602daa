#include <doctest.h>

#include <cmath>

#include "plap/constants.hpp"
#include "plap/errors.hpp"
#include "plap/regimes.hpp"

using namespace plap;

TEST_CASE("validate rejects out-of-range parameters") {
    CHECK_THROWS_AS(validate(Params{2.5, 1, 0.25, 2, 1}), RangeError);
    CHECK_THROWS_AS(validate(Params{1.0, 1, 0.25, 2, 1}), RangeError);
    CHECK_THROWS_AS(validate(Params{1.5, 1, -0.25, 2, 1}), PositivityError);
    CHECK_THROWS_AS(validate(Params{1.5, 1, 0.25, -2, 1}), PositivityError);
    CHECK_THROWS_AS(validate(Params{1.5, 1, 0.25, 2, 0}), PositivityError);
    // b < 0 requires beta >= 1 (otherwise no global solution theory applies)
    CHECK_THROWS_AS(validate(Params{1.5, -1, 0.5, 2, 1}), AdmissibilityError);
    CHECK_NOTHROW(validate(Params{1.5, -1, 1.2, 2, 1}));
    CHECK_NOTHROW(validate(Params{1.5, 0, 1.0, 2, 1}));
}

TEST_CASE("five-region classification") {
    CHECK(classify(Params{1.5, 1, 0.25, 2, 1}).region == Region::I);
    CHECK(classify(Params{1.5, 1, 0.25, 6, 1}).region == Region::II);
    CHECK(classify(Params{1.5, 1, 0.25, 8, 1}).region == Region::III);
    CHECK(classify(Params{1.8, 1, 0.5, 8, 1}).region == Region::III);
    // beta = p-1 < 1: region IV
    const RegimeLabel r4 = classify(Params{1.5, 1, 0.5, 2, 1});
    CHECK(r4.region == Region::IV);
    CHECK(r4.subcase == Subcase::infinite_speed_b_pos);
    // beta > p-1: region V
    CHECK(classify(Params{1.5, 1, 0.8, 2, 1}).region == Region::V);
    CHECK(classify(Params{1.5, -1, 1.2, 1, 1}).subcase ==
          Subcase::infinite_speed_b_neg);
    CHECK(classify(Params{1.5, 0, 1.0, 1, 1}).subcase ==
          Subcase::infinite_speed_b_zero);
}

TEST_CASE("region II trichotomy by amplitude") {
    Params base{1.5, 1, 0.25, 6, 1};
    const double cs = critical_amplitude(base);
    base.C = 2 * cs;
    CHECK(classify(base).subcase == Subcase::expanding);
    base.C = 0.5 * cs;
    CHECK(classify(base).subcase == Subcase::shrinking);
    base.C = cs;
    CHECK(classify(base).subcase == Subcase::stationary);
}

TEST_CASE("threshold manifold within relative tolerance 1e-12") {
    const double p = 1.5, beta = 0.25;
    const double thr = alpha_threshold(p, beta); // = 6
    CHECK(classify(Params{p, 1, beta, thr * (1 + 3e-13), 1}).region == Region::II);
    CHECK(classify(Params{p, 1, beta, thr * (1 + 1e-6), 1}).region == Region::III);
    CHECK(classify(Params{p, 1, beta, thr * (1 - 1e-6), 1}).region == Region::I);
}

TEST_CASE("predicted interface law per region") {
    SUBCASE("region I: right-moving with Appendix bracket") {
        const Params pr{1.5, 1, 0.25, 2, 1};
        const InterfaceLaw law = predicted_interface_law(pr);
        CHECK(law.direction == Direction::right);
        CHECK(law.exponent == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
        REQUIRE(law.coefficient.kind == CoefficientInfo::Kind::bracket);
        const Region1Bracket br = region1_bracket(pr);
        CHECK(law.coefficient.lo == doctest::Approx(br.zeta1));
        CHECK(law.coefficient.hi == doctest::Approx(br.zeta2));
    }
    SUBCASE("region III: left-moving with exact coefficient -ell*") {
        const Params pr{1.8, 1, 0.5, 8, 1};
        const InterfaceLaw law = predicted_interface_law(pr);
        CHECK(law.direction == Direction::left);
        CHECK(law.exponent == doctest::Approx(0.25).epsilon(1e-12));
        REQUIRE(law.coefficient.kind == CoefficientInfo::Kind::exact);
        CHECK(law.coefficient.value ==
              doctest::Approx(-0.840896415253715).epsilon(1e-12));
    }
    SUBCASE("regions IV and V: no interface") {
        for (const Params pr : {Params{1.5, 1, 0.5, 2, 1},
                                Params{1.5, 1, 0.8, 2, 1},
                                Params{1.5, 0, 1.0, 1, 1}}) {
            const InterfaceLaw law = predicted_interface_law(pr);
            CHECK(law.direction == Direction::no_interface);
            CHECK(std::isnan(law.exponent));
        }
    }
}
