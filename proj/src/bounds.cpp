#include "plustrace/bounds.hpp"

#include <cmath>

namespace plustrace {

namespace {

double common_factor(i64 m, const FactoredDiscriminant& fd, const DeltaTable& dt) {
    double absD = (double)-fd.D;
    double delta = dt.delta();
    return std::pow(absD, 13.0 / 12 + delta / 2) * (double)tau(fd.D) * (double)tau(m) * dt.zeta_val *
           dt.zeta_val * dt.ell * std::fabs(std::log(delta));
}

}  // namespace

double theorem2_rhs(const TheoremParams& p) {
    if (p.Y <= 0 || p.Y > 1.0 / (2 * M_PI * (double)p.m) + 1e-15)
        throw domain_error("theorem2_rhs: need 0 < Y <= 1/(2 pi m)");
    if (!p.fd.valid()) throw domain_error("theorem2_rhs: invalid factored discriminant");
    double delta = p.dt.delta();
    double cases = p.fd.d < 0 ? 106954.0 : 24957.0 * (double)p.m;
    return common_factor(p.m, p.fd, p.dt) * std::pow((double)p.m, 1.5) * std::pow(p.Y, 1.0 / 3 - delta) *
           std::log(2 * std::sqrt((double)-p.fd.D) / p.Y) * cases;
}

LhsValue theorem2_lhs(const TheoremParams& p, PrecisionPolicy policy) {
    TraceReport tr = trace(p.m, p.fd, policy);
    RectangleSum rect = rectangle_sum(p.m, p.fd, p.Y, true);
    i64 delta_d = p.fd.d == 1 ? 1 : 0;
    i64 shift = 4 * delta_d * sigma1(p.m) * weighted_class_number_six(p.fd.D);
    mpfr_prec_t prec = std::max(tr.value.prec(), rect.value.prec());
    BigFloat lhs = tr.value + BigFloat((long)shift, prec) - rect.value;
    LhsValue out;
    out.value = std::fabs(lhs.to_double());
    out.err = tr.err + rect.err;
    out.certified = tr.err_certified;
    return out;
}

BoundReport check_theorem2(const TheoremParams& p, PrecisionPolicy policy) {
    LhsValue lhs = theorem2_lhs(p, policy);
    double rhs = theorem2_rhs(p);
    return make_report("theorem2",
                       {{"m", (double)p.m},
                        {"D", (double)p.fd.D},
                        {"d", (double)p.fd.d},
                        {"Y", p.Y},
                        {"delta", p.dt.delta()}},
                       lhs.value + lhs.err, rhs, lhs.certified);
}

double theorem1_rhs(i64 m, const FactoredDiscriminant& fd, const DeltaTable& dt) {
    if (!fd.valid()) throw domain_error("theorem1_rhs: invalid factored discriminant");
    double delta = dt.delta();
    double cases = fd.d < 0 ? 8.5e6 : 2e6 * (double)m;
    return common_factor(m, fd, dt) * std::pow((double)m, 7.0 / 6 + delta) *
           std::log(2 * (double)m * std::sqrt((double)-fd.D)) * cases;
}

BoundReport check_theorem1(i64 m, const FactoredDiscriminant& fd, const DeltaTable& dt,
                           PrecisionPolicy policy) {
    TraceReport tr = trace(m, fd, policy);
    RectangleSum rect = rectangle_sum(m, fd, 1.0 / (double)m, false);
    i64 delta_d = fd.d == 1 ? 1 : 0;
    i64 shift = 4 * delta_d * sigma1(m) * weighted_class_number_six(fd.D);
    mpfr_prec_t prec = std::max(tr.value.prec(), rect.value.prec());
    BigFloat lhs = tr.value + BigFloat((long)shift, prec) - rect.value;
    double rhs = theorem1_rhs(m, fd, dt);
    return make_report("theorem1",
                       {{"m", (double)m},
                        {"D", (double)fd.D},
                        {"d", (double)fd.d},
                        {"delta", dt.delta()}},
                       std::fabs(lhs.to_double()) + tr.err + rect.err, rhs, tr.err_certified);
}

double corollary3_threshold(i64 m, const FactoredDiscriminant& fd) {
    if (!fd.valid()) throw domain_error("corollary3_threshold: invalid factored discriminant");
    double mp = fd.d < 0 ? std::pow((double)m, -13.0) : std::pow((double)m, -21.0);
    return 1e-100 * std::pow((double)-fd.D, -11.0) * mp;
}

RecoveryResult nearest_integer_recovery(i64 m, const FactoredDiscriminant& fd, double Y,
                                        PrecisionPolicy policy) {
    TraceReport tr = trace(m, fd, policy);
    i64 delta_d = fd.d == 1 ? 1 : 0;
    i64 shift = 4 * delta_d * sigma1(m) * weighted_class_number_six(fd.D);
    RecoveryResult r;
    r.trace_value = tr.rounded;
    r.certified = tr.certified;
    // The rectangle sum converges to the trace plus shift only as Y -> 0, with
    // slowly decaying oscillation, so a single Y can land just past a rounding
    // boundary.  Walk a halving ladder from the requested Y, stopping at the
    // first (largest) height whose rounding matches the trace; y_used reports
    // the smallest height actually tested.  A rectangle empty at the
    // requested Y is a degenerate request and is not descended.
    constexpr int kLadder = 12;
    double y = Y;
    for (int k = 0; k < kLadder; ++k, y /= 2) {
        RectangleSum rect = rectangle_sum(m, fd, y, true);
        BigFloat approx = rect.value - BigFloat((long)shift, rect.value.prec());
        mpz_class cand = approx.round();
        if (k == 0) {
            r.candidate = cand;
            if (4.0 * Y * Y >= (double)-fd.D) break;  // empty rectangle
        }
        if (tr.certified && cand == tr.rounded) {
            r.candidate = cand;
            r.matches = true;
            r.y_used = y;
            break;
        }
    }
    return r;
}

}  // namespace plustrace
