#include "plustrace/bounds.hpp"

#include <doctest.h>

#include <cmath>

using namespace plustrace;

TEST_CASE("theorem2_rhs arithmetic") {
    TheoremParams p;
    p.m = 1;
    p.fd = {-3, 1, -3};
    p.Y = 0.1;
    p.dt = delta_table(1, 4);
    double z = p.dt.zeta_val;
    // m^{3/2} = 1, tau(D) = tau(-3) = 2, tau(m) = tau(1) = 1
    double expect = std::pow(3.0, 13.0 / 12 + 0.125) * 1.0 * 2.0 * 1.0 * std::pow(0.1, 1.0 / 12) * z * z *
                    8.447 * std::log(2 * std::sqrt(3.0) / 0.1) * std::fabs(std::log(0.25)) * 24957.0;
    CHECK(theorem2_rhs(p) == doctest::Approx(expect).epsilon(1e-12));

    // d < 0 selects the other case constant without the extra m factor
    TheoremParams q = p;
    q.fd = {-3, -3, 1};
    CHECK(theorem2_rhs(q) / theorem2_rhs(p) == doctest::Approx(106954.0 / 24957.0).epsilon(1e-12));

    TheoremParams bad = p;
    bad.Y = 0.5;  // > 1/(2 pi)
    CHECK_THROWS_AS(theorem2_rhs(bad), domain_error);
}

TEST_CASE("theorem2 end to end") {
    TheoremParams p;
    p.m = 1;
    p.fd = {-3, 1, -3};
    p.Y = 0.15;
    p.dt = delta_table(1, 4);
    auto rep = check_theorem2(p);
    CHECK(rep.certified);
    CHECK(rep.pass);
    CHECK(rep.lhs < 100);  // residual is the Kloosterman tail, small here

    // d != 1 zeroes the 24-term but the bound still holds
    p.fd = {-3, -3, 1};
    auto rep2 = check_theorem2(p);
    CHECK(rep2.pass);
}

TEST_CASE("theorem1 end to end") {
    auto rep = check_theorem1(1, {-3, 1, -3}, delta_table(1, 4));
    CHECK(rep.pass);
    CHECK(rep.rhs > 1e6);
    CHECK(rep.margin > 1000);
}

TEST_CASE("corollary threshold") {
    FactoredDiscriminant neg{-3, -3, 1};
    CHECK(corollary3_threshold(1, neg) == doctest::Approx(1e-100 * std::pow(3.0, -11.0)));
    FactoredDiscriminant pos{-12, 1, -12};
    CHECK(corollary3_threshold(2, pos) == doctest::Approx(1e-100 * std::pow(12.0, -11.0) * std::pow(2.0, -21.0)));
}

TEST_CASE("nearest integer recovery") {
    auto r = nearest_integer_recovery(1, {-3, 1, -3}, 0.05);
    CHECK(r.matches);
    CHECK(r.candidate == -248);
    CHECK(r.y_used > 0);
    CHECK(r.y_used < 0.05);  // the top of the ladder rounds to -247

    auto r2 = nearest_integer_recovery(1, {-4, 1, -4}, 0.05);
    CHECK(r2.matches);
    CHECK(r2.candidate == 492);

    // rectangle empty on the whole ladder top: candidate falls back to
    // round(-24 delta sigma1 h) = -8 (weighted h(-3) = 1/3), no match
    auto r3 = nearest_integer_recovery(1, {-3, 1, -3}, 5.0);
    CHECK(r3.candidate == -8);
    CHECK(!r3.matches);
}
