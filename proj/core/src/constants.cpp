#include "enzeros/constants.hpp"

#include "enzeros/errors.hpp"

#include <stdexcept>

namespace enz {

namespace {

// Bracket atan(1/x) between consecutive partial sums of
//   sum_{j>=0} (-1)^j / ((2j+1) x^(2j+1)),
// stopping once the bracket width drops below `width_target`.  Alternating
// decreasing terms put the limit between any two consecutive partial sums,
// and later brackets are nested inside earlier ones.
RealEnclosure atan_inv_bracket(unsigned long x, const Rational& width_target) {
    Rational xr(x);
    Rational x2 = xr * xr;
    Rational term = 1 / xr;  // j = 0 term magnitude, 1/((2j+1) x^(2j+1))
    Rational power = term;
    Rational sum_prev(0);
    Rational sum = term;
    unsigned long j = 1;
    while (term > width_target) {
        power /= x2;
        term = power / Rational(2 * j + 1);
        sum_prev = sum;
        if (j % 2 == 1)
            sum -= term;
        else
            sum += term;
        ++j;
    }
    if (sum <= sum_prev) return RealEnclosure(sum, sum_prev);
    return RealEnclosure(sum_prev, sum);
}

}  // namespace

RealEnclosure enclose_pi(unsigned bits) {
    if (bits < 8) throw std::invalid_argument("enclose_pi: bits must be >= 8");
    // 16 w_a + 4 w_b <= 2^-(bits+1); outward rounding adds < 2^-(bits+7).
    Rational target_a = pow2_inverse(bits + 6);
    Rational target_b = pow2_inverse(bits + 4);
    RealEnclosure a = atan_inv_bracket(5, target_a);
    RealEnclosure b = atan_inv_bracket(239, target_b);
    RealEnclosure pi = scale(Rational(16), a) - scale(Rational(4), b);
    return pi.round_outward(bits + 8);
}

RealEnclosure enclose_sqrt3(unsigned bits) {
    if (bits < 8) throw std::invalid_argument("enclose_sqrt3: bits must be >= 8");
    // floor(sqrt(3 * 4^p)) = floor(sqrt(3) * 2^p); sqrt(3) is irrational, so
    // [s, s+1]/2^p brackets it strictly, and brackets nest as p grows.
    unsigned p = bits + 1;
    Int scaled = Int(3) << (2 * p);
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Int den = Int(1) << p;
    return RealEnclosure(make_rational(s, den), make_rational(s + 1, den));
}

ComplexEnclosure exp_enclosure(const ComplexEnclosure& z, unsigned terms,
                               unsigned round_bits) {
    // Rational upper bound s on |z| over the rectangle.
    Rational norm_sup = rational_pow(z.re.sup_abs(), 2) + rational_pow(z.im.sup_abs(), 2);
    Rational s = sqrt_upper(norm_sup, 32);
    Rational ratio_den = Rational(terms) + 2;
    if (s >= ratio_den)
        throw RemainderDiverges("exp_enclosure: sup|z| >= terms + 2");

    ComplexEnclosure sum = ComplexEnclosure::exact(1, 0);
    ComplexEnclosure term = ComplexEnclosure::exact(1, 0);
    for (unsigned k = 1; k <= terms; ++k) {
        term = term * z;
        term = scale(make_rational(1, k), term);
        if (round_bits > 0) term = term.round_outward(round_bits);
        sum = sum + term;
    }
    if (round_bits > 0) sum = sum.round_outward(round_bits);

    // Remainder: |sum_{k>terms} z^k/k!| <= s^(terms+1)/(terms+1)! / (1 - s/(terms+2)).
    Rational head = rational_pow(s, terms + 1);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), terms + 1);
    head /= Rational(fact);
    Rational remainder = head / (1 - s / ratio_den);
    if (round_bits > 0) remainder = ceil_to_dyadic(remainder, round_bits);
    return sum.inflate(remainder);
}

}  // namespace enz
