#pragma once

#include "plustrace/arith.hpp"
#include "plustrace/bigfloat.hpp"
#include "plustrace/qform.hpp"

#include <gmpxx.h>

#include <vector>

namespace plustrace {

// Exact integer q-expansion coefficients c(-1)..c(N) of j.
struct QExpansion {
    std::vector<mpz_class> coeffs;  // coeffs[i] = c(i - 1)
    i64 order = 0;                  // N

    const mpz_class& c(i64 n) const { return coeffs.at(std::size_t(n + 1)); }
};

// q^{-1} prod (1-q^n)^{-24} (1 + 240 sum sigma_3(n) q^n)^3 through q^N.
QExpansion j_qexp(i64 N);

// Monic integer polynomial P_m with P_m(j) = q^{-m} + O(q).
// Returned coefficients are degree 0..m.
std::vector<mpz_class> faber_poly(i64 m);

struct EvalResult {
    BigComplex value;
    double err = 0;  // certified absolute error bound
};

// j(z) with absolute error <= target_err.  Requires Im(z) >= sqrt(3)/2.
EvalResult eval_j(const BigComplex& z, double target_err);

// j_m(z) = P_m(j(z)) with propagated error bound.
EvalResult eval_jm(i64 m, const BigComplex& z, double target_err);

struct PrecisionPolicy {
    mpfr_prec_t start_bits = 128;
    mpfr_prec_t max_bits = 4096;
};

struct TraceReport {
    i64 m = 1;
    i64 D = -3;
    i64 d = 1;
    BigFloat value{64};   // computed real trace
    double err = 0;       // total certified error (includes imaginary residue)
    mpz_class rounded;    // nearest integer
    double round_gap = 0; // |value - rounded|
    bool err_certified = false;  // err below the numeric target
    bool certified = false;      // integer rounding certified: round_gap + err < 1/4
};

// Twisted trace sum over reduced forms of disc D, with precision
// escalation until |value - rounded| + err < 1/4 or the policy cap.
// Twisted traces with d != 1 are generally not integers; for those the
// escalation stops once err is negligible, with err_certified set and
// certified left false.
TraceReport trace(i64 m, const FactoredDiscriminant& fd, PrecisionPolicy policy = {});

struct RectangleSum {
    BigFloat value{64};
    double err = 0;
};

// sum over forms with z_Q in R(Y) of chi_d(Q) (e(-m z_Q) [- e(-m conj z_Q)]).
RectangleSum rectangle_sum(i64 m, const FactoredDiscriminant& fd, double Y, bool with_conjugate);

// CM point as a BigComplex at the given precision.
BigComplex cm_point_big(const QuadForm& q, mpfr_prec_t prec);

}  // namespace plustrace
