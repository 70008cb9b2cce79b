#pragma once

#include "plustrace/arith.hpp"
#include "plustrace/report.hpp"

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace plustrace {

// Plus-space Kloosterman sum value.  k2 = 2k in {1, -1} encodes the
// half-integral weight k = k2/2.
struct PlusKloostermanValue {
    int k2 = 1;
    i64 m = 0, n = 0, c = 4;
    double value = 0;
    double err = 0;            // certified numeric error bound
    double imag_residue = 0;   // |Im| of the raw complex sum (the sum is real)
};

// true iff (-1)^{k-1/2} m = 0,1 mod 4.
bool plus_admissible(int k2, i64 m);

// Reusable unit data mod c (4 | c): inverses, Kronecker symbols, eps_d and
// the root-of-unity table.  Building it costs O(c log c); each eval is then
// O(phi(c)) multiply-adds.
class PlusSumTable {
  public:
    explicit PlusSumTable(i64 c);
    PlusKloostermanValue eval(int k2, i64 m, i64 n) const;
    i64 modulus() const { return c_; }

  private:
    i64 c_;
    int factor_;  // 2 when 4||c, 1 when 8|c
    std::vector<i64> d_, dbar_;
    std::vector<std::complex<long double>> w_;      // kron(c,d) * eps_d
    std::vector<std::complex<long double>> roots_;  // e(r/c), r in [0, c)
};

// S_k^+(m,n,c).  Requires 4 | c and the plus-space congruences on m, n.
PlusKloostermanValue s_plus(int k2, i64 m, i64 n, i64 c);

// S_{infty,infty}(m,n,c,nu_theta) = e(1/8) S_{1/2}^+(m,n,c) / {1 or 2}.
std::complex<double> s_infty_infty(i64 m, i64 n, i64 c);

// Weil bound 2 tau(c) (m,n,c)^{1/2} c^{1/2}.
double weil_rhs(i64 m, i64 n, i64 c);

struct PartialSumPoint {
    i64 x;         // jump point, 4 | x
    double value;  // sum over 4|c <= x of S^+(1/2,m,n,c)/c
    double err;
};

// Running partial sums at every jump point 4|x <= x_max, for several (m,n)
// pairs sharing the per-c tables.  Requires m > 0, n < 0 admissible.
std::vector<std::vector<PartialSumPoint>> partial_sum_points(const std::vector<std::pair<i64, i64>>& pairs,
                                                             i64 x_max);

// Single-value partial sum over 4|c <= x (0 for x < 4).
double partial_sum(i64 m, i64 n, double x, double* err = nullptr);

// Right-hand side of the explicit partial-sum bound:
// 26 x^{1/6+delta} m^{3/4} |n|^{1/4} tau(m)^{1/2} tau(n)^{1/2}
//   zeta^2(1+delta) ell(delta) |log delta| log x.
double theorem51_rhs(i64 m, i64 n, double x, const DeltaTable& dt);

BoundReport check_theorem51(i64 m, i64 n, double x, const DeltaTable& dt);

// Truncated Selberg-Kloosterman zeta sum_{4|c<=c_max} S^+(m,n,c)/c^{2s}
// with a rigorous tail bound (infinite when Re(s) is too small for the
// elementary divisor-bound tail).  Requires Re(s) > 3/4.
std::pair<std::complex<double>, double> zeta_partial(i64 m, i64 n, std::complex<double> s, i64 c_max);

}  // namespace plustrace
