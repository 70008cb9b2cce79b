#include "plustrace/kloosterman.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace plustrace {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// e(-k/4) for k = k2/2
std::complex<long double> quarter_phase(int k2) {
    long double r = kPi / 4;
    return k2 > 0 ? std::complex<long double>(std::cos(r), -std::sin(r))
                  : std::complex<long double>(std::cos(r), std::sin(r));
}

}  // namespace

bool plus_admissible(int k2, i64 m) {
    i64 v = k2 > 0 ? m : -m;
    i64 r = ((v % 4) + 4) % 4;
    return r == 0 || r == 1;
}

PlusSumTable::PlusSumTable(i64 c) : c_(c) {
    if (c <= 0 || c % 4 != 0) throw domain_error("PlusSumTable: c must be a positive multiple of 4");
    factor_ = (c % 8 == 0) ? 1 : 2;
    d_.reserve(c / 3);
    for (i64 d = 1; d < c; d += 2) {
        if (std::gcd(d, c) != 1) continue;
        d_.push_back(d);
        dbar_.push_back(mod_inverse(d, c));
        int chi = kronecker(c, d);
        // eps_d = 1 or i by d mod 4
        w_.push_back(d % 4 == 1 ? std::complex<long double>(chi, 0) : std::complex<long double>(0, chi));
    }
    // e(r/c) by repeated multiplication, refreshed every 256 steps
    roots_.resize(c);
    const long double step = 2 * kPi / c;
    std::complex<long double> w(std::cos(step), std::sin(step)), cur(1, 0);
    for (i64 r = 0; r < c; ++r) {
        if (r % 256 == 0) cur = {std::cos(step * r), std::sin(step * r)};
        roots_[r] = cur;
        cur *= w;
    }
}

PlusKloostermanValue PlusSumTable::eval(int k2, i64 m, i64 n) const {
    if (k2 != 1 && k2 != -1) throw domain_error("s_plus: k must be 1/2 or -1/2");
    if (!plus_admissible(k2, m) || !plus_admissible(k2, n))
        throw domain_error("s_plus: (-1)^{k-1/2} m, n must be 0,1 mod 4");
    const i64 c = c_;
    const i64 mm = ((m % c) + c) % c, nn = ((n % c) + c) % c;
    std::complex<long double> sum(0, 0);
    const std::size_t T = d_.size();
    if (k2 > 0) {
        for (std::size_t i = 0; i < T; ++i) {
            i64 r = (mm * dbar_[i] + nn * d_[i]) % c;
            sum += w_[i] * roots_[r];
        }
    } else {
        for (std::size_t i = 0; i < T; ++i) {
            i64 r = (mm * dbar_[i] + nn * d_[i]) % c;
            sum += std::conj(w_[i]) * roots_[r];
        }
    }
    sum *= quarter_phase(k2);
    sum *= (long double)factor_;

    PlusKloostermanValue v;
    v.k2 = k2;
    v.m = m;
    v.n = n;
    v.c = c;
    v.value = (double)sum.real();
    v.imag_residue = (double)std::fabs((double)sum.imag());
    // (terms)*(roundoff)*(max magnitude) model; quadratic term covers the
    // worst-case accumulation of addition errors.
    double model = (double)((0.5L * T * T + 16.0L * T + 64) * kEps * factor_);
    if (model > 1e-10 * (double)c)
        throw std::logic_error("s_plus: long double precision insufficient for target error");
    v.err = model;
    return v;
}

PlusKloostermanValue s_plus(int k2, i64 m, i64 n, i64 c) {
    return PlusSumTable(c).eval(k2, m, n);
}

std::complex<double> s_infty_infty(i64 m, i64 n, i64 c) {
    PlusKloostermanValue v = s_plus(1, m, n, c);
    double factor = (c % 8 == 0) ? 1.0 : 2.0;
    std::complex<double> e18(std::cos(M_PI / 4), std::sin(M_PI / 4));  // e(1/8)
    return e18 * (v.value / factor);
}

double weil_rhs(i64 m, i64 n, i64 c) {
    i64 g = std::gcd(std::gcd(m < 0 ? -m : m, n < 0 ? -n : n), c);
    return 2.0 * (double)tau(c) * std::sqrt((double)g) * std::sqrt((double)c);
}

std::vector<std::vector<PartialSumPoint>> partial_sum_points(const std::vector<std::pair<i64, i64>>& pairs,
                                                             i64 x_max) {
    for (auto& [m, n] : pairs) {
        if (m <= 0 || n >= 0 || !plus_admissible(1, m) || !plus_admissible(1, n))
            throw domain_error("partial_sum: need m > 0, n < 0 with m,n = 0,1 mod 4");
    }
    std::vector<std::vector<PartialSumPoint>> out(pairs.size());
    std::vector<double> acc(pairs.size(), 0), accerr(pairs.size(), 0);
    for (i64 c = 4; c <= x_max; c += 4) {
        PlusSumTable table(c);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            PlusKloostermanValue v = table.eval(1, pairs[i].first, pairs[i].second);
            acc[i] += v.value / (double)c;
            accerr[i] += v.err / (double)c;
            out[i].push_back({c, acc[i], accerr[i]});
        }
    }
    return out;
}

double partial_sum(i64 m, i64 n, double x, double* err) {
    if (err) *err = 0;
    if (x < 4) return 0;
    i64 xmax = (i64)std::floor(x);
    xmax -= xmax % 4;
    auto pts = partial_sum_points({{m, n}}, xmax);
    if (pts[0].empty()) return 0;
    if (err) *err = pts[0].back().err;
    return pts[0].back().value;
}

double theorem51_rhs(i64 m, i64 n, double x, const DeltaTable& dt) {
    if (m <= 0 || n >= 0) throw domain_error("theorem51_rhs: need m > 0, n < 0");
    double delta = dt.delta();
    return 26.0 * std::pow(x, 1.0 / 6 + delta) * std::pow((double)m, 0.75) * std::pow((double)-n, 0.25) *
           std::sqrt((double)tau(m)) * std::sqrt((double)tau(n)) * dt.zeta_val * dt.zeta_val * dt.ell *
           std::fabs(std::log(delta)) * std::log(x);
}

BoundReport check_theorem51(i64 m, i64 n, double x, const DeltaTable& dt) {
    double err = 0;
    double lhs = std::fabs(partial_sum(m, n, x, &err));
    double rhs = theorem51_rhs(m, n, x, dt);
    return make_report("theorem51",
                       {{"m", (double)m},
                        {"n", (double)n},
                        {"x", x},
                        {"delta", dt.delta()}},
                       lhs + err, rhs);
}

std::pair<std::complex<double>, double> zeta_partial(i64 m, i64 n, std::complex<double> s, i64 c_max) {
    if (s.real() <= 0.75) throw domain_error("zeta_partial: need Re(s) > 3/4");
    if (m == 0 && n == 0) throw domain_error("zeta_partial: m, n must not both vanish");
    std::complex<double> sum(0, 0);
    for (i64 c = 4; c <= c_max; c += 4) {
        PlusKloostermanValue v = s_plus(1, m, n, c);
        sum += v.value * std::pow(std::complex<double>((double)c, 0), -2.0 * s);
    }
    // Tail via tau(c) <= ell(delta) c^delta and integral comparison over 4|c:
    //   sum_{4|c > C} 2 tau(c) (m,n,c)^{1/2} c^{1/2-2sigma}
    //     <= 2 ell g^{1/2} 4^eta (C/4)^{eta+1} / (-1-eta),  eta = 1/2+delta-2sigma.
    double g = std::sqrt((double)std::gcd(m < 0 ? -m : m, n < 0 ? -n : n));
    double C = (double)std::max<i64>(c_max, 4);
    double tail = std::numeric_limits<double>::infinity();
    for (auto [num, den] : {std::pair<i64, i64>{1, 4}, {1, 5}}) {
        double delta = (double)num / (double)den;
        double eta = 0.5 + delta - 2.0 * s.real();
        if (eta >= -1) continue;
        double t = 2.0 * ell_constant(num, den) * g * std::pow(4.0, eta) * std::pow(C / 4, eta + 1) / (-1 - eta);
        tail = std::min(tail, t);
    }
    return {sum, tail};
}

}  // namespace plustrace
