#pragma once

// Test-only high-precision floating reference, built on MPFR at ~210
// decimal digits.  The library under test never touches floating point;
// these helpers give an independent numeric value to check containment
// against.

#include "enzeros/enclosure.hpp"

#include <mpfr.h>

namespace oracle {

inline constexpr mpfr_prec_t kPrec = 700;

class Real {
public:
    Real() {
        mpfr_init2(v_, kPrec);
        mpfr_set_zero(v_, 1);
    }
    explicit Real(long x) {
        mpfr_init2(v_, kPrec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    explicit Real(const enz::Rational& q) {
        mpfr_init2(v_, kPrec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, kPrec);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

Real pi();
Real sqrt3();
Real exp(const Real& x);

struct Complex {
    Real re, im;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);

Complex exp(const Complex& z);
// q = e^{2 pi i (x + i y)}
Complex nome(const Real& x, const Real& y);

// Exact comparisons of the MPFR value against rational endpoints.
bool inside(const enz::RealEnclosure& e, const Real& v);
bool inside(const enz::ComplexEnclosure& e, const Complex& v);

}  // namespace oracle
