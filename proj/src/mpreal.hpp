#pragma once

// Minimal RAII wrapper over mpfr_t for the numeric root oracle.  Every
// result takes the larger precision of its operands, rounding to nearest.

#include <algorithm>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace weilpoly::detail {

class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(mpfr_prec_t prec, long x) : MpReal(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
    MpReal(mpfr_prec_t prec, double x) : MpReal(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
    MpReal(mpfr_prec_t prec, mpz_class const & z) : MpReal(prec)
    {
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    MpReal(MpReal const & o) : MpReal(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal && o) noexcept : MpReal(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
    MpReal & operator=(MpReal const & o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal & operator=(MpReal && o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

#define WEILPOLY_MPREAL_BINOP(op, fn)                                         \
    friend MpReal operator op(MpReal const & a, MpReal const & b)             \
    {                                                                         \
        MpReal r(std::max(a.prec(), b.prec()));                               \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                      \
        return r;                                                             \
    }
    WEILPOLY_MPREAL_BINOP(+, mpfr_add)
    WEILPOLY_MPREAL_BINOP(-, mpfr_sub)
    WEILPOLY_MPREAL_BINOP(*, mpfr_mul)
    WEILPOLY_MPREAL_BINOP(/, mpfr_div)
#undef WEILPOLY_MPREAL_BINOP

    friend MpReal operator-(MpReal const & a)
    {
        MpReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(MpReal const & a, MpReal const & b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(MpReal const & a, MpReal const & b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

    friend MpReal sqrt(MpReal const & a)
    {
        MpReal r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal abs(MpReal const & a)
    {
        MpReal r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal hypot(MpReal const & a, MpReal const & b)
    {
        MpReal r(std::max(a.prec(), b.prec()));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e at the given precision.
    static MpReal pow2(mpfr_prec_t prec, long e)
    {
        MpReal r(prec, 1L);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

struct MpComplex {
    MpReal re, im;

    explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
    MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

    friend MpComplex operator+(MpComplex const & a, MpComplex const & b)
    {
        return { a.re + b.re, a.im + b.im };
    }
    friend MpComplex operator-(MpComplex const & a, MpComplex const & b)
    {
        return { a.re - b.re, a.im - b.im };
    }
    friend MpComplex operator*(MpComplex const & a, MpComplex const & b)
    {
        return { a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re };
    }
    friend MpComplex operator/(MpComplex const & a, MpComplex const & b)
    {
        MpReal den = b.re * b.re + b.im * b.im;
        return { (a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den };
    }
    MpReal abs() const { return hypot(re, im); }
};

} // namespace weilpoly::detail
