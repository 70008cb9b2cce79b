#include "plustrace/qform.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace plustrace;

TEST_CASE("reduce examples") {
    CHECK(reduce({1, 5, 7}) == QuadForm{1, 1, 1});
    CHECK(reduce({1, 0, 1}) == QuadForm{1, 0, 1});
    CHECK(reduce({2, -1, 3}) == QuadForm{2, -1, 3});
}

TEST_CASE("reduce is idempotent and preserves the discriminant") {
    for (i64 a = 1; a <= 12; ++a)
        for (i64 b = -25; b <= 25; ++b)
            for (i64 c = 1; c <= 12; ++c) {
                QuadForm q{a, b, c};
                if (q.disc() >= 0 || q.disc() < -10000) continue;
                QuadForm r = reduce(q);
                CHECK(r.is_reduced());
                CHECK(r.disc() == q.disc());
                CHECK(reduce(r) == r);
            }
}

TEST_CASE("reduced_forms examples") {
    auto f3 = reduced_forms(-3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == QuadForm{1, 1, 1});
    auto f4 = reduced_forms(-4);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0] == QuadForm{1, 0, 1});
    auto f23 = reduced_forms(-23);
    REQUIRE(f23.size() == 3);
    CHECK(f23[0] == QuadForm{1, 1, 6});
    CHECK(f23[1] == QuadForm{2, -1, 3});
    CHECK(f23[2] == QuadForm{2, 1, 3});
    CHECK_THROWS_AS(reduced_forms(-5), domain_error);
}

TEST_CASE("class_number matches brute-force scan") {
    for (i64 D = -3; D >= -10000; --D) {
        if (!is_discriminant(D)) continue;
        i64 count = 0;
        for (i64 a = 1; a * a <= -D / 3; ++a)
            for (i64 b = -a; b <= a; ++b) {
                i64 num = b * b - D;
                if (num % (4 * a) != 0) continue;
                i64 c = num / (4 * a);
                if (c < a) continue;
                if (b < 0 && (b == -a || a == c)) continue;
                ++count;
            }
        CHECK(class_number(D) == count);
    }
}

TEST_CASE("omega") {
    CHECK(omega({1, 0, 1}) == 2);
    CHECK(omega({1, 1, 1}) == 3);
    CHECK(omega({1, 1, 6}) == 1);
    CHECK(omega({2, 2, 2}) == 3);  // imprimitive [a,a,a]
    CHECK(omega({1, 5, 7}) == 3);  // reduces to [1,1,1]
}

TEST_CASE("genus_char examples") {
    CHECK(genus_char(1, {2, 1, 3}) == 1);
    CHECK(genus_char(-3, {1, 1, 1}) == 1);
    CHECK(genus_char(-4, {3, 2, 2}) == -1);
}

TEST_CASE("genus_char well-definedness across represented values") {
    for (i64 d = -50; d <= 50; ++d) {
        if (d == 0 || d == 1 || !is_fundamental(d)) continue;
        for (i64 D = -3; D >= -1000; --D) {
            if (!is_discriminant(D) || D % d != 0 || !is_discriminant(D / d)) continue;
            for (const QuadForm& q : reduced_forms(D)) {
                i64 ad = d < 0 ? -d : d;
                if (std::gcd(q.content(), ad) > 1) {
                    CHECK(genus_char(d, q) == 0);
                    continue;
                }
                int expected = genus_char(d, q);
                CHECK(expected * expected == 1);
                // the first five admissible represented values must agree
                int found = 0;
                for (i64 x = 0; x <= 12 && found < 5; ++x)
                    for (i64 y = -12; y <= 12 && found < 5; ++y) {
                        if (std::gcd(x, y < 0 ? -y : y) != 1) continue;
                        i64 n = q.eval(x, y);
                        if (n <= 0 || std::gcd(n, ad) != 1) continue;
                        CHECK(kronecker(d, n) == expected);
                        ++found;
                    }
            }
        }
    }
}

TEST_CASE("cm_point examples") {
    CMPoint p = cm_point({1, 1, 1});
    CHECK(p.re() == doctest::Approx(-0.5));
    CHECK(p.im() == doctest::Approx(std::sqrt(3.0) / 2));
    CMPoint q = cm_point({1, 0, 1});
    CHECK(q.re() == 0);
    CHECK(q.im() == doctest::Approx(1.0));
    CMPoint r = cm_point({2, 1, 3});
    CHECK(r.re() == doctest::Approx(-0.25));
    CHECK(r.im() == doctest::Approx(std::sqrt(23.0) / 4));
}

TEST_CASE("cm_point of a reduced form lies in the fundamental domain") {
    for (i64 D = -3; D >= -2000; --D) {
        if (!is_discriminant(D)) continue;
        for (const QuadForm& q : reduced_forms(D)) {
            CMPoint p = cm_point(q);
            CHECK(p.im() >= std::sqrt(3.0) / 2 - 1e-12);
            CHECK(p.re() >= -0.5 - 1e-12);
            CHECK(p.re() <= 0.5 + 1e-12);
            // a z^2 + b z + c = 0
            double x = p.re(), y = p.im();
            double re = q.a * (x * x - y * y) + q.b * x + q.c;
            double im = 2.0 * q.a * x * y + q.b * y;
            CHECK(std::fabs(re) < 1e-9 * (std::fabs((double)q.a) * (x * x + y * y) + 1));
            CHECK(std::fabs(im) < 1e-9 * (std::fabs((double)q.a) * y + 1) * (std::fabs(x) * 2 + 1));
        }
    }
}

TEST_CASE("forms_in_rectangle examples") {
    auto f = forms_in_rectangle(-3, 0.5);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == QuadForm{1, 1, 1});
    auto g = forms_in_rectangle(-4, 0.5);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == QuadForm{1, 0, 1});
    CHECK(forms_in_rectangle(-3, 2).empty());
}

TEST_CASE("forms_in_rectangle membership") {
    for (i64 D : {-3, -4, -23, -47, -400, -4075, -9999, -10000}) {
        if (!is_discriminant(D)) continue;
        for (double Y : {0.05, 0.3, 0.9}) {
            auto fs = forms_in_rectangle(D, Y);
            for (const QuadForm& q : fs) {
                CHECK(q.disc() == D);
                CMPoint p = cm_point(q);
                CHECK(p.im() > Y);
                CHECK(p.re() >= -0.5);
                CHECK(p.re() < 0.5);
            }
            // cross-check count against a direct (a, b) scan
            i64 count = 0;
            for (i64 a = 1; (double)(4 * a * a) * Y * Y < (double)-D; ++a)
                for (i64 b = -a + 1; b <= a; ++b)
                    if ((b * b - D) % (4 * a) == 0) ++count;
            CHECK((i64)fs.size() == count);
        }
    }
}

TEST_CASE("weighted class number") {
    CHECK(weighted_class_number_six(-3) == 2);   // single form, omega 3
    CHECK(weighted_class_number_six(-4) == 3);   // single form, omega 2
    CHECK(weighted_class_number_six(-7) == 6);
    CHECK(weighted_class_number_six(-12) == 8);  // [1,0,3] + imprimitive [2,2,2]
    CHECK(weighted_class_number_six(-16) == 9);  // [1,0,4], [2,0,2]
    for (i64 D = -3; D >= -200; --D) {
        if (!is_discriminant(D)) continue;
        i64 six = weighted_class_number_six(D);
        CHECK(six > 0);
        CHECK(six <= 6 * class_number(D));
        if (D < -4 && D % 3 != 0 && D % 4 != 0) CHECK(six == 6 * class_number(D));
    }
}
