#include "enzeros/rational.hpp"

#include "enzeros/errors.hpp"

#include <cctype>

namespace enz {

Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw Error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

Int parse_int(const std::string& text) {
    Int v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw Error("parse_rational: bad integer '" + text + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("parse_rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(text.substr(0, slash));
        Int den = parse_int(text.substr(slash + 1));
        return make_rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0) throw Error("parse_rational: trailing dot");
        Int num = parse_int(digits);
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        return make_rational(num, den);
    }
    return Rational(parse_int(text));
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exponent);
    // num/den coprime implies num^e/den^e coprime; no canonicalize needed.
    return out;
}

Rational floor_to_dyadic(const Rational& x, unsigned bits) {
    Int scaled_num = x.get_num() << bits;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    return make_rational(q, Int(1) << bits);
}

Rational ceil_to_dyadic(const Rational& x, unsigned bits) {
    Int scaled_num = x.get_num() << bits;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    return make_rational(q, Int(1) << bits);
}

Rational pow2_inverse(unsigned bits) {
    return make_rational(1, Int(1) << bits);
}

Rational sqrt_lower(const Rational& x, unsigned bits) {
    if (sgn(x) < 0) throw Error("sqrt_lower: negative argument");
    // floor(x * 4^bits), then integer sqrt: (s/2^bits)^2 <= x.
    Int scaled = x.get_num() << (2 * bits);
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
    Int s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    return make_rational(s, Int(1) << bits);
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
    if (sgn(x) < 0) throw Error("sqrt_upper: negative argument");
    Int scaled = x.get_num() << (2 * bits);
    Int t;
    Int rem;
    mpz_cdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                x.get_den().get_mpz_t());
    Int s, sqrem;
    mpz_sqrtrem(s.get_mpz_t(), sqrem.get_mpz_t(), t.get_mpz_t());
    // s is exact only when t was a perfect square and the scaling division
    // was exact; otherwise bump to stay above sqrt(x).
    if (sgn(sqrem) != 0 || sgn(rem) != 0) s += 1;
    return make_rational(s, Int(1) << bits);
}

namespace {

std::string render_scaled(const Int& scaled, unsigned digits, bool negative) {
    std::string body = scaled.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out;
    if (negative) out += '-';
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

}  // namespace

std::string decimal_lower(const Rational& x, unsigned digits) {
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    Int scaled_num = x.get_num() * p10;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    bool neg = sgn(q) < 0;
    Int mag = abs(q);
    return render_scaled(mag, digits, neg);
}

std::string decimal_upper(const Rational& x, unsigned digits) {
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    Int scaled_num = x.get_num() * p10;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    bool neg = sgn(q) < 0;
    Int mag = abs(q);
    return render_scaled(mag, digits, neg);
}

std::string to_fraction_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace enz
