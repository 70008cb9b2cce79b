#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace plustrace {

using i64 = std::int64_t;

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Extended Kronecker symbol (a/n), total on Z x Z.
// (a/0) = 1 iff a = +-1, (a/-1) = -1 iff a < 0.
int kronecker(i64 a, i64 n);

// eps_d = 1 if d = 1 mod 4, i if d = 3 mod 4.  Requires d odd.
std::complex<double> epsilon(i64 d);

// Inverse of d mod c, in [0, c).  Requires gcd(d, c) = 1.
i64 mod_inverse(i64 d, i64 c);

// Number of positive divisors of |n|.  Requires n != 0.
i64 tau(i64 n);

// Sum of positive divisors of m.  Requires m > 0.
i64 sigma1(i64 m);

bool is_squarefree(i64 n);

// D = 0,1 mod 4 (sign-normalized residue).
bool is_discriminant(i64 D);

// 1, squarefree = 1 mod 4, or 4m with m squarefree = 2,3 mod 4.
bool is_fundamental(i64 d);

struct FactoredDiscriminant {
    i64 D;        // negative discriminant
    i64 d;        // fundamental discriminant
    i64 d_prime;  // discriminant, d * d_prime = D

    bool valid() const {
        return D < 0 && d * d_prime == D && is_fundamental(d) && is_discriminant(d_prime);
    }
};

// All factorizations D = d * d' with d fundamental, d' a discriminant.
// Ordered by |d| ascending, then d ascending.  Requires D < 0 discriminant.
std::vector<FactoredDiscriminant> factorizations(i64 D);

struct DeltaTable {
    i64 delta_num = 1;
    i64 delta_den = 4;
    double ell = 0;       // divisor-bound constant
    double zeta_val = 0;  // zeta(1 + delta)

    double delta() const { return double(delta_num) / double(delta_den); }
};

// Divisor-bound constant with tau(c) <= ell(delta) c^delta.
// Only delta = 1/4 (8.447) and delta = 1/5 (28.117) are available.
double ell_constant(i64 num, i64 den);

// zeta(1 + delta) by Euler-Maclaurin, absolute error <= 1e-12.
// Requires 0 < delta <= 1/4 (as a fraction num/den).
double zeta_one_plus(i64 num, i64 den);
double zeta_one_plus(double delta);

// Table lookup combining the two constants above.
DeltaTable delta_table(i64 num, i64 den);

}  // namespace plustrace
