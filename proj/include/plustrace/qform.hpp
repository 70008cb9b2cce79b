#pragma once

#include "plustrace/arith.hpp"

#include <vector>

namespace plustrace {

// Positive definite integral binary quadratic form [a,b,c] = ax^2+bxy+cy^2.
struct QuadForm {
    i64 a = 1, b = 0, c = 1;

    i64 disc() const { return b * b - 4 * a * c; }
    i64 content() const;
    i64 eval(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    bool is_reduced() const;
    bool operator==(const QuadForm&) const = default;
};

// CM point z_Q = (-b + i sqrt(|D|)) / (2a), real part kept exact.
struct CMPoint {
    i64 re_num = 0;  // re = re_num / re_den in lowest terms
    i64 re_den = 1;
    i64 abs_disc = 3;  // im = sqrt(abs_disc) / im_den
    i64 im_den = 2;

    double re() const { return double(re_num) / double(re_den); }
    double im() const;
};

// Unique PSL2(Z)-reduced representative: |b| <= a <= c, b >= 0 on boundary.
QuadForm reduce(QuadForm q);

// All reduced forms of discriminant D (primitive and imprimitive),
// ordered by (a, b).  Requires D < 0 a discriminant.
std::vector<QuadForm> reduced_forms(i64 D);

i64 class_number(i64 D);

// 6 * sum over reduced forms of 1/omega(Q); always an integer since
// omega in {1,2,3}.  This is the weighted form count entering the
// 24 delta_d sigma_1(m) h(D) trace shift (so the shift is 4 sigma_1(m)
// times this value).
i64 weighted_class_number_six(i64 D);

// 3 for [a,a,a]-equivalent, 2 for [a,0,a]-equivalent, else 1.
int omega(const QuadForm& q);

// Genus character chi_d(Q): 0 when gcd(a,b,c,d) > 1, else (d/n) for the
// first represented value n coprime to d found by the deterministic scan.
int genus_char(i64 d, const QuadForm& q);

CMPoint cm_point(const QuadForm& q);

// All forms [a,b,c] of discriminant D with z_Q in the rectangle
// {-1/2 <= x < 1/2, y > Y}, i.e. a < sqrt(|D|)/(2Y) and b in (-a, a].
// Ordered by (a, |b|, -sign(b)) so that b and -b are adjacent.
std::vector<QuadForm> forms_in_rectangle(i64 D, double Y);

}  // namespace plustrace
