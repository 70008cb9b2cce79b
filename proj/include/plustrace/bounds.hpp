#pragma once

#include "plustrace/arith.hpp"
#include "plustrace/modeval.hpp"
#include "plustrace/report.hpp"

#include <gmpxx.h>

namespace plustrace {

struct TheoremParams {
    i64 m = 1;
    FactoredDiscriminant fd{};
    double Y = 0.1;
    DeltaTable dt{};
};

// RHS of the two-sided rectangle approximation bound:
// |D|^{13/12+delta/2} m^{3/2} tau(D) tau(m) Y^{1/3-delta} zeta^2(1+delta)
//   ell(delta) log(2|D|^{1/2}/Y) |log delta| * {106954 (d<0) | 24957 m (d>0)}.
// Requires 0 < Y <= 1/(2 pi m).
double theorem2_rhs(const TheoremParams& p);

struct LhsValue {
    double value = 0;
    double err = 0;
    bool certified = true;
};

// |trace + 24 delta_d sigma_1(m) h(D) - rectangle_sum(m, fd, Y, conj)|,
// with h(D) the omega-weighted form count (weighted_class_number_six / 6).
LhsValue theorem2_lhs(const TheoremParams& p, PrecisionPolicy policy = {});

BoundReport check_theorem2(const TheoremParams& p, PrecisionPolicy policy = {});

// One-sided variant at Y = 1/m without the conjugate term; the case
// constants become 8.5e6 (d<0) and 2e6 m (d>0).
double theorem1_rhs(i64 m, const FactoredDiscriminant& fd, const DeltaTable& dt);
BoundReport check_theorem1(i64 m, const FactoredDiscriminant& fd, const DeltaTable& dt,
                           PrecisionPolicy policy = {});

// Sufficient rectangle height from the nearest-integer corollary:
// 10^{-100} |D|^{-11} * {m^{-13} (d<0) | m^{-21} (d>0)}.
// Far below any enumerable Y; kept as a reference value.
double corollary3_threshold(i64 m, const FactoredDiscriminant& fd);

struct RecoveryResult {
    mpz_class candidate;
    mpz_class trace_value;
    bool matches = false;
    bool certified = true;
    double y_used = 0;  // smallest tested Y at which rounding matched; 0 if none
};

// Rounds -24 delta_d sigma_1(m) h(D) + rectangle_sum(m,fd,Y,true) and
// compares against the certified trace, where h(D) is the omega-weighted
// form count.  Tests a halving ladder of heights starting at Y; candidate
// holds the matched value when recovery succeeds, otherwise the rounding
// at the requested Y.
RecoveryResult nearest_integer_recovery(i64 m, const FactoredDiscriminant& fd, double Y,
                                        PrecisionPolicy policy = {});

}  // namespace plustrace
