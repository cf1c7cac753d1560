#ifndef HYPERDENSE_NUMBERFIELD_HPP
#define HYPERDENSE_NUMBERFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hyperdense/errors.hpp"
#include "hyperdense/mpoly.hpp"
#include "hyperdense/polynomial.hpp"

namespace hyperdense {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in the power basis of the field generator.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    QPoly as_poly() const { return QPoly(coords_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rational& s) const;
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline bool entry_is_zero(const FieldElement& e) { return e.is_zero(); }

/// Absolute number field Q[x]/(p) with p monic irreducible. Immutable.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    /// Verifies monic and irreducible; reducible input raises reducible_error
    /// carrying the factor found.
    static FieldPtr make(const QPoly& defining, std::string provenance = "");
    /// Construction from a factor already known irreducible (internal paths).
    static FieldPtr make_unchecked(QPoly defining, std::string provenance = "");
    /// The rationals, presented by the polynomial x.
    static FieldPtr rationals();

    const QPoly& defining_polynomial() const { return defining_; }
    int degree() const { return defining_.degree(); }
    const std::string& provenance() const { return provenance_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;
    FieldElement element(std::vector<Rational> coords) const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_poly(const QPoly& p) const;  // reduces mod the defining polynomial

  private:
    NumberField(QPoly defining, std::string provenance)
        : defining_(std::move(defining)), provenance_(std::move(provenance)) {}
    QPoly defining_;
    std::string provenance_;
};

/// Structural field identity: same defining polynomial.
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// k -> M given by the image of k's generator; verified at construction.
struct SubfieldEmbedding {
    FieldPtr source;
    FieldPtr target;
    FieldElement image;

    SubfieldEmbedding() = default;
    SubfieldEmbedding(FieldPtr src, FieldPtr tgt, FieldElement image_of_generator);

    FieldElement map(const FieldElement& e) const;
    static SubfieldEmbedding identity(const FieldPtr& f);
};

/// first: A -> B, second: B -> C, result: A -> C
SubfieldEmbedding compose(const SubfieldEmbedding& first, const SubfieldEmbedding& second);

/// Public constructor mirroring NumberField::make.
FieldPtr make_field(const QPoly& p);

/// Monic minimal polynomial of e over Q, by exact linear algebra on powers.
QPoly element_minimal_polynomial(const FieldElement& e);

/// Absolute norm and trace.
Rational element_norm(const FieldElement& e);
Rational element_trace(const FieldElement& e);

/// Coordinates of w in the Q-span of the given elements, if w lies in it.
std::optional<std::vector<Rational>> express_in_span(const std::vector<FieldElement>& span,
                                                     const FieldElement& w);

/// Coordinates of w in the power basis u^0..u^(d-1), if w lies in Q(u).
std::optional<std::vector<Rational>> express_in_powers(const FieldElement& u,
                                                       const FieldElement& w, int d);

// ---------------------------------------------------------------------------
// Polynomials over a number field.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial with FieldElement coefficients.
class KPoly {
  public:
    KPoly() = default;
    KPoly(FieldPtr field, std::vector<FieldElement> coeffs);
    /// Lift a rational polynomial into K[x].
    static KPoly lift(const FieldPtr& field, const QPoly& p);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const FieldElement& leading() const;
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly scaled(const FieldElement& s) const;
    KPoly monic() const;
    KPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;

    bool operator==(const KPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;

  private:
    void trim();
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

std::pair<KPoly, KPoly> divmod(const KPoly& num, const KPoly& den);
KPoly kpoly_gcd(KPoly a, KPoly b);
bool kpoly_less(const KPoly& a, const KPoly& b);

/// Complete factorization over K into monic irreducibles with multiplicities,
/// by the shifted-norm method; deterministic order.
std::vector<std::pair<KPoly, int>> factor_over_field(const KPoly& p);

/// Roots of a rational polynomial inside K (the linear factors over K).
std::vector<FieldElement> roots_in_field(const FieldPtr& K, const QPoly& p);

/// Smallest field containing e1 and e2 (elements of one common field),
/// presented by the minimal polynomial of e1 + c*e2 for the least c >= 0
/// reaching the compositum; returns the embeddings of Q(e1) and Q(e2).
std::tuple<FieldPtr, SubfieldEmbedding, SubfieldEmbedding> primitive_element(
    const FieldElement& e1, const FieldElement& e2);

/// The degree-m homogeneous norm form N(x_0 b_0 + ... + x_{m-1} b_{m-1}) of M
/// over Q in the given basis. base_degree_over_k is validated to be 1 (the
/// base field of the form is Q; relative forms live in the arrangement layer).
MPoly<Rational> norm_form(const FieldPtr& M, int base_degree_over_k,
                          const std::vector<FieldElement>& basis);

}  // namespace hyperdense

#endif
