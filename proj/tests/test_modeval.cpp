#include "plustrace/modeval.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace plustrace;

TEST_CASE("j q-expansion coefficients") {
    QExpansion q = j_qexp(4);
    CHECK(q.c(-1) == 1);
    CHECK(q.c(0) == 744);
    CHECK(q.c(1) == 196884);
    CHECK(q.c(2) == 21493760);
    CHECK(q.c(3) == 864299970);
    CHECK(q.c(4) == mpz_class("20245856256"));
}

TEST_CASE("faber polynomials") {
    auto p1 = faber_poly(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == -744);
    CHECK(p1[1] == 1);
    auto p2 = faber_poly(2);
    REQUIRE(p2.size() == 3);
    CHECK(p2[0] == 159768);
    CHECK(p2[1] == -1488);
    CHECK(p2[2] == 1);
}

TEST_CASE("faber defining property checked symbolically") {
    // oracle: multiply out P_m(j) as an exact q-series, independent of the
    // elimination in faber_poly
    for (i64 m = 1; m <= 10; ++m) {
        auto p = faber_poly(m);
        QExpansion jq = j_qexp(m + 1);
        std::vector<mpz_class> jser(jq.coeffs.begin(), jq.coeffs.end());  // q^{-1}..q^{m+1}
        // acc = sum p_k j^k, tracked from q^{-m}; start with j^0
        std::vector<mpz_class> acc{p[0]};
        std::vector<mpz_class> power{1};  // j^k from q^{-k}
        for (i64 k = 1; k <= m; ++k) {
            std::vector<mpz_class> next(power.size() + jser.size() - 1);
            for (std::size_t i = 0; i < power.size(); ++i)
                for (std::size_t j = 0; j < jser.size(); ++j) next[i + j] += power[i] * jser[j];
            power = std::move(next);
            // align acc (offset -(k-1)) with power (offset -k)
            std::vector<mpz_class> merged(std::max(acc.size() + 1, power.size()));
            for (std::size_t i = 0; i < acc.size(); ++i) merged[i + 1] += acc[i];
            for (std::size_t i = 0; i < power.size() && i < merged.size(); ++i) merged[i] += p[std::size_t(k)] * power[i];
            acc = std::move(merged);
        }
        // acc[i] = coefficient of q^{i-m}; require q^{-m} coeff 1 and zeros through q^0
        REQUIRE(acc.size() > std::size_t(m));
        CHECK(acc[0] == 1);
        for (i64 i = 1; i <= m; ++i) CHECK(acc[std::size_t(i)] == 0);
    }
}

TEST_CASE("eval_j at classical CM points") {
    BigComplex i_pt(BigFloat(0.0, 256), BigFloat(1.0, 256));
    auto r = eval_j(i_pt, 1e-20);
    CHECK(std::fabs(r.value.re.to_double() - 1728.0) < 1e-18 + r.err);
    CHECK(std::fabs(r.value.im.to_double()) < r.err);
    CHECK(r.err < 1e-19);

    BigComplex rho(BigFloat(-0.5, 256), sqrt(BigFloat(3.0, 256)) / BigFloat(2.0, 256));
    auto r2 = eval_j(rho, 1e-20);
    CHECK(std::fabs(r2.value.re.to_double()) < 1e-18 + r2.err);

    BigComplex two_i(BigFloat(0.0, 256), BigFloat(2.0, 256));
    auto r3 = eval_j(two_i, 1e-15);
    CHECK(std::fabs(r3.value.re.to_double() - 287496.0) < 1e-12 + r3.err);

    CHECK_THROWS_AS(eval_j(BigComplex(BigFloat(0.0, 64), BigFloat(0.5, 64)), 1e-6), domain_error);
}

TEST_CASE("eval_j self-consistency under deeper truncation") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.87, 2.5);
    for (int i = 0; i < 100; ++i) {
        double x = ux(rng), y = uy(rng);
        BigComplex z(BigFloat(x, 128), BigFloat(y, 128));
        auto a = eval_j(z, 1e-10);
        auto b = eval_j(z, 1e-22);  // much deeper truncation
        double dx = (a.value.re - b.value.re).to_double();
        double dy = (a.value.im - b.value.im).to_double();
        CHECK(std::hypot(dx, dy) <= a.err + b.err);
    }
}

TEST_CASE("modular invariance spot check") {
    std::mt19937 rng(999);
    std::uniform_real_distribution<double> ux(-0.35, 0.35), uy(1.05, 1.15);
    int tested = 0;
    for (int i = 0; tested < 20 && i < 200; ++i) {
        double x = ux(rng), y = uy(rng);
        // -1/z = (-x + iy) / (x^2 + y^2)
        double n2 = x * x + y * y;
        double y2 = y / n2;
        if (y2 < 0.87) continue;
        BigComplex z(BigFloat(x, 192), BigFloat(y, 192));
        BigComplex w(BigFloat(-x / n2, 192), BigFloat(y2, 192));
        auto a = eval_j(z, 1e-12);
        auto b = eval_j(w, 1e-12);
        CHECK(std::fabs((a.value.re - b.value.re).to_double()) <= a.err + b.err + 1e-9);
        CHECK(std::fabs((a.value.im - b.value.im).to_double()) <= a.err + b.err + 1e-9);
        ++tested;
    }
    CHECK(tested == 20);
}

TEST_CASE("eval_jm") {
    BigComplex i_pt(BigFloat(0.0, 256), BigFloat(1.0, 256));
    auto r = eval_jm(1, i_pt, 1e-15);
    CHECK(std::fabs(r.value.re.to_double() - 984.0) < 1e-12 + r.err);
    auto r2 = eval_jm(2, i_pt, 1e-12);
    CHECK(std::fabs(r2.value.re.to_double() - 574488.0) < 1e-9 + r2.err);

    BigComplex rho(BigFloat(-0.5, 256), sqrt(BigFloat(3.0, 256)) / BigFloat(2.0, 256));
    auto r3 = eval_jm(1, rho, 1e-15);
    CHECK(std::fabs(r3.value.re.to_double() + 744.0) < 1e-12 + r3.err);
}

TEST_CASE("trace classical values") {
    auto t1 = trace(1, {-3, 1, -3});
    CHECK(t1.certified);
    CHECK(t1.rounded == -248);
    CHECK(t1.round_gap < 1e-6);

    auto t2 = trace(1, {-4, 1, -4});
    CHECK(t2.certified);
    CHECK(t2.rounded == 492);

    auto t3 = trace(1, {-7, 1, -7});
    CHECK(t3.certified);
    CHECK(t3.rounded == -4119);
}

TEST_CASE("twisted trace with d != 1") {
    auto t = trace(1, {-3, -3, 1});
    CHECK(t.certified);
    CHECK(t.rounded == -248);  // chi_{-3}([1,1,1]) = 1, same single form
}

TEST_CASE("rectangle_sum examples") {
    FactoredDiscriminant fd3{-3, 1, -3};
    auto empty = rectangle_sum(1, fd3, 2.0, true);
    CHECK(empty.value.to_double() == 0);

    auto one = rectangle_sum(1, fd3, 0.5, false);
    CHECK(one.value.to_double() == doctest::Approx(-230.76458831914587924).epsilon(1e-10));
    auto conj = rectangle_sum(1, fd3, 0.5, true);
    CHECK(conj.value.to_double() == doctest::Approx(-230.76025489863589611).epsilon(1e-10));
    CHECK(one.err < 1e-6);
}

TEST_CASE("rectangle_sum real-valuedness on a grid") {
    for (i64 D : {-3, -4, -20, -23, -40, -55}) {
        for (const auto& fd : factorizations(D))
            for (i64 m : {1, 2})
                for (double Y : {0.05, 0.2, 0.6}) {
                    auto r = rectangle_sum(m, fd, Y, true);
                    CHECK(std::isfinite(r.err));  // imaginary residue folded into err
                }
    }
}
