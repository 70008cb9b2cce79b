#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace plustrace {

// Thin RAII wrapper over mpfr_t.  Binary operations round to nearest at the
// larger of the two operand precisions; each op's relative error is at most
// 2^{1-precision}.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const mpz_class& z, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const;

    // nearest integer
    mpz_class round() const {
        mpz_class z;
        mpfr_t t;
        mpfr_init2(t, prec());
        mpfr_round(t, v_);
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(mpfr_add, a, b); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(mpfr_sub, a, b); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(mpfr_mul, a, b); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(mpfr_div, a, b); }
    BigFloat operator-() const { BigFloat r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    BigFloat& mul_z(const mpz_class& z) { mpfr_mul_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }
    BigFloat& div_si(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }
    BigFloat& add_prod_z(const mpz_class& z, const BigFloat& x) {
        // *this += z * x (fused via a temp at our precision)
        BigFloat t(x);
        t.mul_z(z);
        mpfr_add(v_, v_, t.v_, MPFR_RNDN);
        return *this;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int sign() const { return mpfr_sgn(v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }

    friend BigFloat abs(const BigFloat& a) { BigFloat r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
    friend BigFloat sqrt(const BigFloat& a) { return un(mpfr_sqrt, a); }
    friend BigFloat exp(const BigFloat& a) { return un(mpfr_exp, a); }
    friend BigFloat log(const BigFloat& a) { return un(mpfr_log, a); }
    friend BigFloat sin(const BigFloat& a) { return un(mpfr_sin, a); }
    friend BigFloat cos(const BigFloat& a) { return un(mpfr_cos, a); }
    friend BigFloat sinh(const BigFloat& a) { return un(mpfr_sinh, a); }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

  private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat bin(BinOp op, const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat un(UnOp op, const BigFloat& a) {
        BigFloat r(a.prec());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

inline std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }

    BigComplex& mul_z(const mpz_class& z) { re.mul_z(z); im.mul_z(z); return *this; }

    double abs_double() const { return std::hypot(re.to_double(), im.to_double()); }
};

}  // namespace plustrace
