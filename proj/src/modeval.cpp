#include "plustrace/modeval.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace plustrace {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kYMin = 0.86602540378443864676;  // sqrt(3)/2

using Series = std::vector<mpz_class>;

Series mul_trunc(const Series& a, const Series& b, std::size_t len) {
    Series r(std::min(len, a.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QExpansion compute_j_qexp(i64 N) {
    std::size_t len = std::size_t(N) + 2;  // degrees 0..N+1 before the q^{-1} shift
    // E4 = 1 + 240 sum sigma_3(n) q^n
    Series e(len);
    e[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        mpz_class s3 = 0;
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) s3 += mpz_class(d) * d * d;
        e[n] = 240 * s3;
    }
    Series e3 = mul_trunc(mul_trunc(e, e, len), e, len);
    // prod (1-q^n)^{-24} = prod sum_k C(23+k,23) q^{nk}
    Series p{1};
    for (std::size_t n = 1; n < len; ++n) {
        Series f;
        for (std::size_t k = 0; n * k < len; ++k) {
            f.resize(n * k + 1);
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), 23 + k, 23);
            f[n * k] = bin;
        }
        p = mul_trunc(p, f, len);
    }
    Series full = mul_trunc(e3, p, len);
    QExpansion q;
    q.order = N;
    q.coeffs.assign(full.begin(), full.begin() + len);  // coeffs[i] = c(i-1)
    return q;
}

std::mutex g_qexp_mutex;
QExpansion g_qexp_cache;

std::mutex g_faber_mutex;
std::map<i64, std::vector<mpz_class>> g_faber_cache;

}  // namespace

QExpansion j_qexp(i64 N) {
    if (N < 0) throw domain_error("j_qexp: N must be nonnegative");
    std::lock_guard lock(g_qexp_mutex);
    if (g_qexp_cache.order < N || g_qexp_cache.coeffs.empty()) g_qexp_cache = compute_j_qexp(N);
    QExpansion out;
    out.order = N;
    out.coeffs.assign(g_qexp_cache.coeffs.begin(), g_qexp_cache.coeffs.begin() + std::size_t(N) + 2);
    return out;
}

std::vector<mpz_class> faber_poly(i64 m) {
    if (m < 1) throw domain_error("faber_poly: m must be >= 1");
    {
        std::lock_guard lock(g_faber_mutex);
        auto it = g_faber_cache.find(m);
        if (it != g_faber_cache.end()) return it->second;
    }
    const i64 L = 1;  // orders needed in the final series
    QExpansion jq = j_qexp(m + L);
    // powers[k][x + k] = coefficient of q^{x} in j^k.  Each multiply by j
    // loses one order of accuracy at the top, so j^k is tracked up to order
    // L + (m - k): every power stays exact through q^L and all stored series
    // share the fixed length m + L + 1.
    std::vector<Series> powers(std::size_t(m) + 1);
    powers[0] = {1};
    Series jser(jq.coeffs.begin(), jq.coeffs.begin() + std::size_t(m + L) + 2);
    powers[1] = Series(jser.begin(), jser.begin() + std::size_t(m + L) + 1);
    for (i64 k = 2; k <= m; ++k) {
        // shift-free multiply: (j^{k-1} from q^{-(k-1)}) * (j from q^{-1})
        const Series& a = powers[std::size_t(k - 1)];
        Series r(std::size_t(m + L) + 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < jser.size() && i + j < r.size(); ++j) r[i + j] += a[i] * jser[j];
        }
        powers[std::size_t(k)] = std::move(r);
    }
    Series cur = powers[std::size_t(m)];  // cur[x + m] = coeff of q^x
    std::vector<mpz_class> poly(std::size_t(m) + 1);
    poly[std::size_t(m)] = 1;
    for (i64 e = m - 1; e >= 0; --e) {
        mpz_class a = cur[std::size_t(m - e)];  // coefficient of q^{-e}
        if (a == 0) {
            poly[std::size_t(e)] = 0;
            continue;
        }
        poly[std::size_t(e)] = -a;
        const Series& se = powers[std::size_t(e)];
        for (std::size_t i = 0; i < se.size() && std::size_t(m - e) + i < cur.size(); ++i)
            cur[std::size_t(m - e) + i] -= a * se[i];
    }
    std::lock_guard lock(g_faber_mutex);
    g_faber_cache[m] = poly;
    return poly;
}

EvalResult eval_j(const BigComplex& z, double target_err) {
    double y = z.im.to_double();
    if (y < kYMin - 1e-9) throw domain_error("eval_j: Im(z) must be >= sqrt(3)/2");
    if (target_err <= 0) throw domain_error("eval_j: target_err must be positive");

    // Truncation: tail sum_{n>N} |c(n)| e^{-2 pi y n} with |c(n)| <= e^{4 pi sqrt n}.
    auto term_bound = [&](double n) { return std::exp(4 * kPi * std::sqrt(n) - 2 * kPi * y * n); };
    i64 N = 8;
    double tail;
    while (true) {
        double ratio = std::exp(4 * kPi / (2 * std::sqrt((double)N + 1)) - 2 * kPi * y);
        tail = term_bound((double)N + 1) / (1 - ratio);
        if (ratio < 0.9 && tail <= target_err / 2) break;
        ++N;
        if (N > 100000) throw std::logic_error("eval_j: truncation order runaway");
    }

    // Precision from a magnitude estimate.
    double mag_est = std::exp(2 * kPi * y) + 1000;
    for (i64 n = 1; n <= N; ++n) mag_est += term_bound((double)n);
    mpfr_prec_t prec = std::max<mpfr_prec_t>(
        z.prec(), mpfr_prec_t(64 + std::ceil(std::log2((6.0 * (double)(N + 2) * mag_est) / target_err))));

    QExpansion jq = j_qexp(N);

    BigFloat pi2 = BigFloat::pi(prec) * BigFloat(2.0, prec);
    BigFloat ax = pi2 * z.re;
    BigFloat ay = pi2 * z.im;
    BigFloat c = cos(ax), s = sin(ax);
    BigFloat ey = exp(-ay), eyi = exp(ay);
    BigComplex q(ey * c, ey * s);
    BigComplex qinv(eyi * c, -(eyi * s));

    BigComplex sum(prec);
    BigComplex qp(BigFloat(1.0, prec), BigFloat(0.0, prec));
    double mag = eyi.to_double();  // |q^{-1}| term
    double aq = q.abs_double();
    double aqp = 1;
    sum = qinv;  // c(-1) = 1
    for (i64 n = 0; n <= N; ++n) {
        sum.re.add_prod_z(jq.c(n), qp.re);
        sum.im.add_prod_z(jq.c(n), qp.im);
        mag += std::fabs(mpz_get_d(jq.c(n).get_mpz_t())) * aqp;
        qp *= q;
        aqp *= aq;
    }
    double rounding = (4.0 * (double)(N + 2) + 8) * std::ldexp(1.0, 1 - (int)prec) * mag;
    return {sum, tail + rounding};
}

EvalResult eval_jm(i64 m, const BigComplex& z, double target_err) {
    std::vector<mpz_class> p = faber_poly(m);
    double y = z.im.to_double();
    long double jd = std::exp((long double)(2 * kPi * y)) + 746;
    long double dbound = 0, jp = 1;  // sum k |p_k| jd^{k-1}
    for (i64 k = 1; k <= m; ++k) {
        dbound += (long double)k * std::fabs(mpz_get_d(p[std::size_t(k)].get_mpz_t())) * jp;
        jp *= jd;
    }
    double target_j = target_err / (2.0 * std::max(1.0, (double)dbound));
    EvalResult j = eval_j(z, target_j);
    mpfr_prec_t prec = j.value.prec();

    BigComplex acc(BigFloat(p[std::size_t(m)], prec), BigFloat(0.0, prec));
    long double mag_acc = std::fabs(mpz_get_d(p[std::size_t(m)].get_mpz_t()));
    double rounding = 0;
    for (i64 k = m - 1; k >= 0; --k) {
        acc *= j.value;
        acc.re += BigFloat(p[std::size_t(k)], prec);
        mag_acc = mag_acc * jd + std::fabs(mpz_get_d(p[std::size_t(k)].get_mpz_t()));
        rounding += 8.0 * std::ldexp(1.0, 1 - (int)prec) * (double)mag_acc;
    }
    return {acc, 2.0 * (double)dbound * j.err + rounding};
}

BigComplex cm_point_big(const QuadForm& q, mpfr_prec_t prec) {
    CMPoint p = cm_point(q);
    BigFloat x = BigFloat((long)p.re_num, prec) / BigFloat((long)p.re_den, prec);
    BigFloat y = sqrt(BigFloat((long)p.abs_disc, prec)) / BigFloat((long)p.im_den, prec);
    return {x, y};
}

TraceReport trace(i64 m, const FactoredDiscriminant& fd, PrecisionPolicy policy) {
    if (m < 1) throw domain_error("trace: m must be >= 1");
    if (!fd.valid()) throw domain_error("trace: invalid factored discriminant");
    std::vector<QuadForm> forms = reduced_forms(fd.D);
    std::vector<int> chi(forms.size()), w(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        chi[i] = genus_char(fd.d, forms[i]);
        w[i] = omega(forms[i]);
    }
    TraceReport rep;
    rep.m = m;
    rep.D = fd.D;
    rep.d = fd.d;

    double mag = std::exp(kPi * m * std::sqrt((double)-fd.D));  // dominant form magnitude
    for (mpfr_prec_t bits = policy.start_bits; bits <= policy.max_bits; bits *= 2) {
        double target_total = std::ldexp(1.0, -(int)(bits / 4));
        double target_form = target_total / (2.0 * (double)forms.size());
        // cap check: estimated mantissa need for the dominant term
        if (64 + std::log2(mag / target_form) > (double)policy.max_bits) break;
        mpfr_prec_t zprec = std::max<mpfr_prec_t>(bits, mpfr_prec_t(80 + std::ceil(std::log2(mag / target_form))));
        BigComplex sum(zprec);
        double err = 0;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            if (chi[i] == 0) continue;
            EvalResult r = eval_jm(m, cm_point_big(forms[i], zprec), target_form);
            r.value.mul_z(mpz_class(chi[i]));
            r.value.re.div_si(w[i]);
            r.value.im.div_si(w[i]);
            sum += r.value;
            err += r.err / w[i];
        }
        err += std::fabs(sum.im.to_double());
        rep.value = sum.re;
        rep.err = err;
        rep.rounded = sum.re.round();
        rep.round_gap = std::fabs((sum.re - BigFloat(rep.rounded, zprec)).to_double());
        rep.err_certified = err <= target_total;
        if (rep.round_gap + err < 0.25) {
            rep.certified = true;
            return rep;
        }
        // error is negligible but the value sits away from an integer: a
        // genuine non-integer twisted trace, further precision cannot help
        if (rep.err_certified && err < 1e-9) return rep;
    }
    return rep;
}

RectangleSum rectangle_sum(i64 m, const FactoredDiscriminant& fd, double Y, bool with_conjugate) {
    if (m < 1) throw domain_error("rectangle_sum: m must be >= 1");
    if (!fd.valid()) throw domain_error("rectangle_sum: invalid factored discriminant");
    if (Y <= 0) throw domain_error("rectangle_sum: Y must be positive");
    std::vector<QuadForm> forms = forms_in_rectangle(fd.D, Y);
    double sqD = std::sqrt((double)-fd.D);
    mpfr_prec_t prec = mpfr_prec_t(64 + std::ceil(1.5 * kPi * (double)m * sqD / std::log(2.0)));
    double maxterm = std::exp(kPi * (double)m * sqD);

    BigFloat pi = BigFloat::pi(prec);
    BigComplex sum(prec);
    i64 terms = 0;
    for (const QuadForm& q : forms) {
        int chi = genus_char(fd.d, q);
        if (chi == 0) continue;
        // e(-mz) = e^{2 pi m y} (cos t - i sin t),  t = 2 pi m x = -pi m b / a
        BigFloat t = pi * BigFloat((long)(-m * q.b), prec) / BigFloat((long)q.a, prec);
        BigFloat c = cos(t), s = sin(t);
        BigFloat ey = pi * BigFloat((long)m, prec) * sqrt(BigFloat((long)(-fd.D), prec)) / BigFloat((long)q.a, prec);
        BigFloat grow = exp(ey);
        BigFloat radial = with_conjugate ? grow - exp(-ey) : grow;
        radial.mul_z(mpz_class(chi));
        sum.re += radial * c;
        sum.im += -(radial * s);
        ++terms;
    }
    RectangleSum out;
    out.value = sum.re;
    out.err = 16.0 * (double)(terms + 4) * std::ldexp(1.0, 1 - (int)prec) * maxterm +
              std::fabs(sum.im.to_double());
    return out;
}

}  // namespace plustrace
