#include "plustrace/weyl.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace plustrace {

namespace {
constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();
}  // namespace

WeylSumValue weyl_direct(i64 m, const FactoredDiscriminant& fd, i64 c) {
    if (c <= 0 || c % 4 != 0) throw domain_error("weyl_direct: c must be a positive multiple of 4");
    if (!fd.valid()) throw domain_error("weyl_direct: invalid factored discriminant");
    const i64 D = fd.D;
    std::complex<long double> sum(0, 0);
    i64 terms = 0;
    for (i64 b = 0; b < c; ++b) {
        i64 r = (b * b - D) % c;
        if (r != 0) continue;
        i64 third = (b * b - D) / c;
        QuadForm q{c / 4, b, third};
        int chi = genus_char(fd.d, q);
        if (chi != 0) {
            long double ang = 2 * kPi * (long double)((2 * m * b) % c) / (long double)c;
            sum += (long double)chi * std::complex<long double>(std::cos(ang), std::sin(ang));
        }
        ++terms;
    }
    WeylSumValue v;
    v.m = m;
    v.fd = fd;
    v.c = c;
    v.value = (double)sum.real();
    v.imag_residue = std::fabs((double)sum.imag());
    v.err = (double)((terms + 8.0L) * 8 * kEps);
    return v;
}

WeylSumValue weyl_kohnen(i64 m, const FactoredDiscriminant& fd, i64 c) {
    if (c <= 0 || c % 4 != 0) throw domain_error("weyl_kohnen: c must be a positive multiple of 4");
    if (!fd.valid()) throw domain_error("weyl_kohnen: invalid factored discriminant");
    i64 g = std::gcd(m < 0 ? -m : m, c / 4);
    double sum = 0, err = 0, imag = 0;
    for (i64 n = 1; n <= g; ++n) {
        if (g % n != 0) continue;
        int chi = kronecker(fd.d, n);
        if (chi == 0) continue;
        double coef = chi * std::sqrt(2.0 * (double)n / (double)c);
        PlusKloostermanValue s = s_plus(1, fd.d_prime, (m / n) * (m / n) * fd.d, c / n);
        sum += coef * s.value;
        err += std::fabs(coef) * s.err;
        imag += std::fabs(coef) * s.imag_residue;
    }
    WeylSumValue v;
    v.m = m;
    v.fd = fd;
    v.c = c;
    v.value = sum;
    v.err = err;
    v.imag_residue = imag;
    return v;
}

BoundReport kohnen_identity_check(i64 m, const FactoredDiscriminant& fd, i64 c, double tol) {
    WeylSumValue a = weyl_direct(m, fd, c);
    WeylSumValue b = weyl_kohnen(m, fd, c);
    double diff = std::fabs(a.value - b.value);
    BoundReport r = make_report("kohnen_identity",
                                {{"m", (double)m},
                                 {"D", (double)fd.D},
                                 {"d", (double)fd.d},
                                 {"c", (double)c}},
                                diff, tol + a.err + b.err);
    return r;
}

TailSeries tail_series(i64 m, const FactoredDiscriminant& fd, double Y, i64 c_max) {
    if (m <= 0 || Y <= 0 || Y > 1.0 / (2 * M_PI * m)) throw domain_error("tail_series: need 0 < Y <= 1/(2 pi m)");
    if (c_max % 4 != 0) throw domain_error("tail_series: c_max must be a multiple of 4");
    double sqD = std::sqrt((double)-fd.D);
    double c0 = 2 * sqD / Y;  // series split point
    if ((double)c_max < c0) throw domain_error("tail_series: c_max below the series start");
    TailSeries t;
    for (i64 c = 4; c <= c_max; c += 4) {
        double arg = 4 * M_PI * m * sqD / c;
        WeylSumValue w = weyl_direct(m, fd, c);
        if ((double)c < c0) {
            t.exp_part += w.value * std::exp(-arg);
            t.err += w.err * std::exp(-arg);
        } else {
            t.sinh_part += w.value * std::sinh(arg);
            t.err += w.err * std::sinh(arg);
        }
    }
    return t;
}

}  // namespace plustrace
