#include "hyperdense/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hyperdense {

QPoly QPoly::monomial(const Rational& c, int k) {
    if (c == 0) return QPoly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return QPoly(std::move(v));
}

const Rational& QPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const Rational& QPoly::operator[](int i) const {
    static const Rational kZero(0);
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

QPoly QPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rational& s) const {
    if (s == 0) return QPoly();
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * s;
    return QPoly(std::move(v));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
    if (is_zero()) return QPoly();
    return *this * Rational(1 / leading());
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + QPoly(std::vector<Rational>{*it});
    return acc;
}

QPoly QPoly::shift(const Rational& c) const { return compose(QPoly(std::vector<Rational>{c, Rational(1)})); }

QPoly QPoly::scale_arg(const Rational& c) const {
    std::vector<Rational> v(coeffs_.size());
    Rational p(1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        v[i] = coeffs_[i] * p;
        p *= c;
    }
    return QPoly(std::move(v));
}

std::pair<Rational, std::vector<Integer>> QPoly::primitive_integer() const {
    if (is_zero()) return {Rational(0), {}};
    Integer den_lcm(1);
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ints(coeffs_.size());
    Integer g(0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        ints[i] = coeffs_[i].get_num() * (den_lcm / coeffs_[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (ints.back() < 0) g = -g;
    for (auto& c : ints) c /= g;
    return {make_rational(g, den_lcm), std::move(ints)};
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rational a = abs_rational(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (num.degree() < den.degree()) return {QPoly(), num};
    std::vector<Rational> rem(num.coeffs());
    std::vector<Rational> quot(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const Rational& lead = den.leading();
    for (int i = num.degree(); i >= den.degree(); --i) {
        Rational q = rem[static_cast<size_t>(i)] / lead;
        if (q == 0) continue;
        quot[static_cast<size_t>(i - den.degree())] = q;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<size_t>(i - den.degree() + j)] -= q * den[j];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly operator/(const QPoly& num, const QPoly& den) { return divmod(num, den).first; }
QPoly operator%(const QPoly& num, const QPoly& den) { return divmod(num, den).second; }

QPoly poly_gcd(QPoly a, QPoly b) {
    // Plain Euclid with monic normalization each step; inputs here are
    // desk-scale (degree <= a few dozen).
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? QPoly() : r.monic();
    }
    return a.is_zero() ? QPoly() : a.monic();
}

std::tuple<QPoly, QPoly, QPoly> poly_xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::one(), s1;
    QPoly t0, t1 = QPoly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
    if (p.degree() == 0) return QPoly::one();
    QPoly g = poly_gcd(p, p.derivative());
    return (p / g).monic();
}

Rational resultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return Rational(0);
    if (a.degree() == 0) return pow_rational(a[0], b.degree());
    // Euclidean recursion: res(A,B) = (-1)^(dA dB) lc(B)^(dA - dR) res(B, R)
    // with R = A mod B. Degrees in this code base stay small, so rational
    // arithmetic (whose entries are ratios of Sylvester minors) is fine.
    QPoly A = a, B = b;
    Rational acc(1);
    while (B.degree() > 0) {
        QPoly R = A % B;
        if (R.is_zero()) return Rational(0);
        if ((static_cast<long>(A.degree()) * B.degree()) % 2 == 1) acc = -acc;
        acc *= pow_rational(B.leading(), A.degree() - R.degree());
        A = std::move(B);
        B = std::move(R);
    }
    return acc * pow_rational(B[0], A.degree());
}

Rational discriminant(const QPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant of constant");
    Rational r = resultant(p, p.derivative());
    long d = p.degree();
    Rational out = r / p.leading();
    if (((d * (d - 1)) / 2) % 2 == 1) out = -out;
    return out;
}

bool poly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool is_irreducible(const QPoly& p) {
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    auto f = factor_over_q(p);
    return f.size() == 1 && f[0].second == 1;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

QPoly cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
    // x^n - 1 divided by all proper cyclotomic factors
    std::vector<Rational> xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    QPoly num((std::vector<Rational>(xn)));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) num = num / cyclotomic(d);
    }
    return num;
}

}  // namespace hyperdense
