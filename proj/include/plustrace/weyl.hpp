#pragma once

#include "plustrace/arith.hpp"
#include "plustrace/kloosterman.hpp"
#include "plustrace/qform.hpp"
#include "plustrace/report.hpp"

namespace plustrace {

struct WeylSumValue {
    i64 m = 1;
    FactoredDiscriminant fd{};
    i64 c = 4;
    double value = 0;
    double err = 0;
    double imag_residue = 0;
};

// T_m(d,d';c) by the defining b-scan:
//   sum over b in [0,c), b^2 = D mod c, of chi_d([c/4, b, (b^2-D)/c]) e(2mb/c).
WeylSumValue weyl_direct(i64 m, const FactoredDiscriminant& fd, i64 c);

// The same sum via Kohnen's identity:
//   sum over n | (m, c/4) of (d/n) sqrt(2n/c) S^+_{1/2}(d', m^2 d / n^2, c/n).
WeylSumValue weyl_kohnen(i64 m, const FactoredDiscriminant& fd, i64 c);

BoundReport kohnen_identity_check(i64 m, const FactoredDiscriminant& fd, i64 c, double tol);

struct TailSeries {
    double sinh_part = 0;  // truncated sum of T sinh(4 pi m sqrt|D| / c), c >= 2 sqrt|D|/Y
    double exp_part = 0;   // finite sum of T exp(-4 pi m sqrt|D| / c), c < 2 sqrt|D|/Y
    double err = 0;
};

// Truncated trace-decomposition series.  The sinh side converges only
// conditionally; truncation at c_max is exploratory and NOT certified.
// The decomposition combines them as sinh_part - exp_part/2.
TailSeries tail_series(i64 m, const FactoredDiscriminant& fd, double Y, i64 c_max);

}  // namespace plustrace
