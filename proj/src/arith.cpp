#include "plustrace/arith.hpp"

#include <cmath>
#include <numeric>

namespace plustrace {

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int k = 1;
    if (n < 0) {
        if (a < 0) k = -k;
        n = -n;
    }
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        i64 r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) k = -k;
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            i64 r = n % 8;
            if (r == 3 || r == 5) k = -k;
        }
        if ((a & 3) == 3 && (n & 3) == 3) k = -k;
        i64 t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? k : 0;
}

std::complex<double> epsilon(i64 d) {
    if ((d & 1) == 0) throw domain_error("epsilon: d must be odd");
    i64 r = ((d % 4) + 4) % 4;
    return r == 1 ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
}

i64 mod_inverse(i64 d, i64 c) {
    if (c <= 0) throw domain_error("mod_inverse: c must be positive");
    i64 a = ((d % c) + c) % c, b = c;
    i64 x0 = 1, x1 = 0;  // x0*d = a mod c
    while (b != 0) {
        i64 q = a / b;
        i64 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw domain_error("mod_inverse: gcd(d, c) != 1");
    return ((x0 % c) + c) % c;
}

i64 tau(i64 n) {
    if (n == 0) throw domain_error("tau: n = 0");
    if (n < 0) n = -n;
    i64 count = 1;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            i64 e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            count *= e + 1;
        }
    }
    if (n > 1) count *= 2;
    return count;
}

i64 sigma1(i64 m) {
    if (m <= 0) throw domain_error("sigma1: m must be positive");
    i64 s = 1;
    for (i64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            i64 pk = 1, sp = 1;
            while (m % p == 0) {
                m /= p;
                pk *= p;
                sp += pk;
            }
            s *= sp;
        }
    }
    if (m > 1) s *= 1 + m;
    return s;
}

bool is_squarefree(i64 n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

bool is_discriminant(i64 D) {
    i64 r = ((D % 4) + 4) % 4;
    return r == 0 || r == 1;
}

bool is_fundamental(i64 d) {
    if (d == 1) return true;
    i64 r = ((d % 4) + 4) % 4;
    if (r == 1) return is_squarefree(d);
    if (d % 4 != 0) return false;
    i64 m = d / 4;
    i64 rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

std::vector<FactoredDiscriminant> factorizations(i64 D) {
    if (D >= 0 || !is_discriminant(D)) throw domain_error("factorizations: D must be a negative discriminant");
    std::vector<FactoredDiscriminant> out;
    i64 A = -D;
    std::vector<i64> divs;
    for (i64 e = 1; e * e <= A; ++e) {
        if (A % e == 0) {
            divs.push_back(e);
            if (e != A / e) divs.push_back(A / e);
        }
    }
    for (i64 e : divs) {
        for (i64 d : {e, -e}) {
            i64 dp = D / d;
            if (is_fundamental(d) && is_discriminant(dp)) out.push_back({D, d, dp});
        }
    }
    std::sort(out.begin(), out.end(), [](const FactoredDiscriminant& a, const FactoredDiscriminant& b) {
        i64 aa = a.d < 0 ? -a.d : a.d, bb = b.d < 0 ? -b.d : b.d;
        if (aa != bb) return aa < bb;
        return a.d < b.d;
    });
    return out;
}

double ell_constant(i64 num, i64 den) {
    if (num == 1 && den == 4) return 8.447;
    if (num == 1 && den == 5) return 28.117;
    throw domain_error("ell_constant: only delta = 1/4 and 1/5 are supported");
}

double zeta_one_plus(double delta) {
    if (delta <= 0 || delta > 0.25 + 1e-15) throw domain_error("zeta_one_plus: need 0 < delta <= 1/4");
    // Euler-Maclaurin at s = 1 + delta with N = 2000 and three Bernoulli
    // terms; the first omitted term is < 1e-18 for s <= 1.25.
    const long double s = 1.0L + (long double)delta;
    const long double N = 2000.0L;
    long double sum = 0;
    for (long double n = N - 1; n >= 1; n -= 1) sum += powl(n, -s);
    long double Ns = powl(N, -s);
    sum += powl(N, 1 - s) / (s - 1);
    sum += Ns / 2;
    long double t = s * Ns / N;  // s * N^{-s-1}
    sum += t / 12;               // B2/2!
    t *= (s + 1) * (s + 2) / (N * N);
    sum -= t / 720;              // B4/4!
    t *= (s + 3) * (s + 4) / (N * N);
    sum += t / 30240;            // B6/6!
    return (double)sum;
}

double zeta_one_plus(i64 num, i64 den) {
    if (den <= 0 || num <= 0) throw domain_error("zeta_one_plus: delta must be positive");
    return zeta_one_plus(double(num) / double(den));
}

DeltaTable delta_table(i64 num, i64 den) {
    DeltaTable t;
    t.delta_num = num;
    t.delta_den = den;
    t.ell = ell_constant(num, den);
    t.zeta_val = zeta_one_plus(num, den);
    return t;
}

}  // namespace plustrace
