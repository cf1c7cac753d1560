#ifndef HYPERDENSE_POLYNOMIAL_HPP
#define HYPERDENSE_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperdense/rational.hpp"

namespace hyperdense {

/// Univariate polynomial over Q, dense coefficients in ascending degree,
/// trailing zeros trimmed. The zero polynomial has an empty coefficient list
/// and degree() == -1.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPoly(std::initializer_list<long> ints) {
        for (long v : ints) coeffs_.emplace_back(v);
        trim();
    }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly({1}); }
    static QPoly x() { return QPoly({0, 1}); }
    // c * x^k
    static QPoly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Rational& leading() const;
    const Rational& operator[](int i) const;
    Rational coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& s) const;

    Rational eval(const Rational& x) const;
    QPoly derivative() const;
    QPoly monic() const;
    // p(q(x))
    QPoly compose(const QPoly& inner) const;
    // p(x + c)
    QPoly shift(const Rational& c) const;
    // p(c * x)
    QPoly scale_arg(const Rational& c) const;

    // Smallest positive rational c with c*p having integer coprime coefficients.
    // Returns (content, primitive integer polynomial) with content = lc-signed
    // rational such that p = content * primitive and primitive has positive
    // leading coefficient and integer coefficients with gcd 1.
    std::pair<Rational, std::vector<Integer>> primitive_integer() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// quotient, remainder with deg(rem) < deg(divisor)
std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);
QPoly operator/(const QPoly& num, const QPoly& den);  // exact or truncating division
QPoly operator%(const QPoly& num, const QPoly& den);

/// Monic greatest common divisor; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
std::tuple<QPoly, QPoly, QPoly> poly_xgcd(const QPoly& a, const QPoly& b);

/// p / gcd(p, p'), monic. Throws on the zero polynomial.
QPoly squarefree_part(const QPoly& p);

/// Resultant by the subresultant PRS. Throws if both inputs are zero.
Rational resultant(const QPoly& a, const QPoly& b);

/// disc(p) = (-1)^(d(d-1)/2) res(p, p') / lc(p)
Rational discriminant(const QPoly& p);

/// Complete factorization over Q into monic irreducibles with multiplicities,
/// sorted by (degree, coefficient-lexicographic). The product of the factors
/// with multiplicities equals monic(p). Throws on constant input.
std::vector<std::pair<QPoly, int>> factor_over_q(const QPoly& p);

/// True iff p is irreducible over Q (degree >= 1 and a single factor).
bool is_irreducible(const QPoly& p);

/// Deterministic ordering used everywhere factor lists are exposed:
/// by degree, then lexicographic on coefficients from the constant term up.
bool poly_less(const QPoly& a, const QPoly& b);

/// One-sided squarefreeness test: true means p is squarefree over Q
/// (it reduces squarefree mod some small prime); false is inconclusive.
bool squarefree_mod_small_prime(const QPoly& p);

/// Factorization of the reduction of a primitive integer form of p modulo a
/// prime, as monic factors with coefficients lifted to [0, p), with
/// multiplicities; deterministic order. Requires p not dividing the leading
/// coefficient of the primitive integer form.
std::vector<std::pair<QPoly, int>> factor_mod_p(const QPoly& p, unsigned long prime);

/// Dedekind's index criterion at p for a monic integral polynomial: true
/// means p does not divide [O_K : Z[theta]], so the mod-p factor pattern
/// gives the true splitting of p.
bool dedekind_index_test(const QPoly& monic_integral, unsigned long prime);

/// n-th cyclotomic polynomial, computed by recursive exact division of x^n - 1.
QPoly cyclotomic(unsigned n);

unsigned long euler_phi(unsigned long n);

}  // namespace hyperdense

#endif
