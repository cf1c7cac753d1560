#ifndef HYPERDENSE_EMBEDDINGS_HPP
#define HYPERDENSE_EMBEDDINGS_HPP

#include <utility>
#include <vector>

#include "hyperdense/numberfield.hpp"
#include "hyperdense/polynomial.hpp"

namespace hyperdense {

/// Closed rational interval [lo, hi].
struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {}
    static QInterval point(const Rational& a) { return {a, a}; }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool disjoint(const QInterval& o) const { return hi < o.lo || o.hi < lo; }
    bool inside(const QInterval& outer) const { return outer.lo < lo && hi < outer.hi; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;
    QInterval operator-() const { return {-hi, -lo}; }
};

/// Complex rectangle with rational corners; the certified container of one root.
struct QBox {
    QInterval re, im;

    QBox() = default;
    QBox(QInterval r, QInterval i) : re(std::move(r)), im(std::move(i)) {}

    Rational width() const { return std::max(re.width(), im.width()); }
    bool disjoint(const QBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    bool inside(const QBox& outer) const { return re.inside(outer.re) && im.inside(outer.im); }
    QBox conjugate() const { return {re, -im}; }

    QBox operator+(const QBox& o) const { return {re + o.re, im + o.im}; }
    QBox operator-(const QBox& o) const { return {re - o.re, im - o.im}; }
    QBox operator*(const QBox& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

/// Certified complex embeddings of a field: one box per root of the defining
/// polynomial, in canonical order (real roots ascending, then conjugate pairs
/// by ascending real part with the lower-half member first), plus the
/// conjugation involution on indices.
struct EmbeddingSet {
    FieldPtr field;
    std::vector<QBox> boxes;
    int r1 = 0;
    int r2 = 0;
    std::vector<int> conjugation;
};

/// Isolating intervals for the real roots of a squarefree polynomial, each
/// certified by a Sturm count of one, pairwise disjoint, ascending. Throws on
/// non-squarefree input.
std::vector<QInterval> isolate_real_roots(const QPoly& p);
std::vector<QInterval> isolate_real_roots(const QPoly& p, const Rational& precision);

/// Number of real roots of a squarefree polynomial (full Sturm count).
int count_real_roots(const QPoly& p);

/// All embeddings of K into C as certified boxes of width <= precision.
EmbeddingSet embeddings_of(const FieldPtr& K, const Rational& precision);

/// (r1, r2) computed purely by Sturm counting.
std::pair<int, int> signature(const FieldPtr& K);

bool is_totally_real(const FieldPtr& K);
bool is_totally_imaginary(const FieldPtr& K);

/// Free rank of the S-unit group: r1 + r2 - 1 + #finite places.
int unit_rank(const FieldPtr& K, int num_finite_places);

/// Interval image of a rational polynomial over a box.
QBox interval_eval(const QPoly& p, const QBox& x);

/// Interval image of a field element under the embedding sending the field
/// generator into the given box.
QBox interval_eval_element(const FieldElement& e, const QBox& generator_box);

}  // namespace hyperdense

#endif
