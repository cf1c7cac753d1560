#ifndef HYPERDENSE_RATIONAL_HPP
#define HYPERDENSE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperdense {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize (num, den) constructions on its own;
// all Rationals in this library are built through these helpers.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Zero test used generically by the linear algebra and polynomial templates.
inline bool entry_is_zero(const Rational& r) { return r == 0; }

inline Integer numer(const Rational& r) { return r.get_num(); }
inline Integer denom(const Rational& r) { return r.get_den(); }

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e > 0 ? base : Rational(1 / base);
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Serialized form is always "num/den", including "/1" for integers.
inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return make_rational(Integer(s), Integer(1));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

// Largest power of two <= |r|, as an exponent; used by the precision ladder.
inline Rational dyadic(long exponent) {
    // 2^exponent for possibly negative exponent
    if (exponent >= 0) {
        Integer n(1);
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(exponent));
        return Rational(n);
    }
    Integer d(1);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-exponent));
    return make_rational(Integer(1), d);
}

// Round r to the nearest multiple of 2^-prec. Keeps interval endpoints small.
inline Rational round_dyadic(const Rational& r, unsigned prec) {
    Integer scaled_num = r.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), prec);
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
    // round half up
    if (rem * 2 >= r.get_den()) q += 1;
    Integer den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), prec);
    return make_rational(q, den);
}

// Floor of sqrt for nonnegative integers.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// A rational lower bound for sqrt(r), r >= 0.
inline Rational sqrt_lower_bound(const Rational& r) {
    if (r < 0) throw std::invalid_argument("sqrt of negative");
    // sqrt(n/d) >= isqrt(n*d)/d
    Integer nd = r.get_num() * r.get_den();
    return make_rational(isqrt(nd), r.get_den());
}

}  // namespace hyperdense

#endif
