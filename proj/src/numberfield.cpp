#include "hyperdense/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "hyperdense/linalg.hpp"

namespace hyperdense {

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("element without a field");
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw std::invalid_argument("element coordinate count != field degree");
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (coords_.empty() || coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw std::logic_error("element is not rational");
    return coords_.empty() ? Rational(0) : coords_[0];
}

namespace {
void check_compatible(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field()))
        throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_compatible(*this, o);
    std::vector<Rational> v(coords_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] + o.coords_[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_compatible(*this, o);
    std::vector<Rational> v(coords_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] - o.coords_[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> v(coords_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = -coords_[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_compatible(*this, o);
    return field_->from_poly(as_poly() * o.as_poly());
}

FieldElement FieldElement::operator*(const Rational& s) const {
    std::vector<Rational> v(coords_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] * s;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    auto [g, u, v] = poly_xgcd(as_poly(), field_->defining_polynomial());
    (void)v;
    if (g.degree() != 0) throw std::logic_error("defining polynomial not irreducible");
    return field_->from_poly(u * (1 / g[0]));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = field_->one();
    FieldElement base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return same_field(field_, o.field()) && coords_ == o.coords_;
}

std::string FieldElement::to_string() const { return as_poly().to_string("a"); }

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

FieldPtr NumberField::make(const QPoly& defining, std::string provenance) {
    if (defining.degree() < 1) throw std::invalid_argument("defining polynomial must be nonconstant");
    if (!defining.is_monic())
        throw reducible_error("defining polynomial is not monic", defining.to_string());
    if (defining.degree() > 1) {
        auto factors = factor_over_q(defining);
        if (factors.size() != 1 || factors[0].second != 1)
            throw reducible_error("defining polynomial is reducible; found factor " +
                                      factors[0].first.to_string(),
                                  factors[0].first.to_string());
    }
    return make_unchecked(defining, std::move(provenance));
}

FieldPtr NumberField::make_unchecked(QPoly defining, std::string provenance) {
    return FieldPtr(new NumberField(std::move(defining), std::move(provenance)));
}

FieldPtr NumberField::rationals() {
    static FieldPtr q = make_unchecked(QPoly::x(), "Q");
    return q;
}

FieldElement NumberField::zero() const {
    return FieldElement(shared_from_this(),
                        std::vector<Rational>(static_cast<size_t>(degree()), Rational(0)));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::generator() const {
    std::vector<Rational> v(static_cast<size_t>(degree()), Rational(0));
    if (degree() == 1) {
        v[0] = -defining_polynomial()[0];
    } else {
        v[1] = 1;
    }
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> v(static_cast<size_t>(degree()), Rational(0));
    v[0] = r;
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::from_poly(const QPoly& p) const {
    QPoly r = p % defining_;
    std::vector<Rational> v(static_cast<size_t>(degree()), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) v[static_cast<size_t>(i)] = r[i];
    return FieldElement(shared_from_this(), std::move(v));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b) return false;
    if (a.get() == b.get()) return true;
    return a->defining_polynomial() == b->defining_polynomial();
}

// ---------------------------------------------------------------------------
// SubfieldEmbedding
// ---------------------------------------------------------------------------

SubfieldEmbedding::SubfieldEmbedding(FieldPtr src, FieldPtr tgt, FieldElement image_of_generator)
    : source(std::move(src)), target(std::move(tgt)), image(std::move(image_of_generator)) {
    if (!same_field(image.field(), target))
        throw std::invalid_argument("embedding image lives in the wrong field");
    const QPoly& p = source->defining_polynomial();
    FieldElement acc = target->zero();
    for (int i = p.degree(); i >= 0; --i) acc = acc * image + target->from_rational(p[i]);
    if (!acc.is_zero())
        throw std::invalid_argument("embedding image is not a root of the source polynomial");
}

FieldElement SubfieldEmbedding::map(const FieldElement& e) const {
    if (!same_field(e.field(), source))
        throw std::invalid_argument("embedding applied to foreign element");
    FieldElement acc = target->zero();
    const auto& c = e.coords();
    for (size_t i = c.size(); i > 0; --i) acc = acc * image + target->from_rational(c[i - 1]);
    return acc;
}

SubfieldEmbedding SubfieldEmbedding::identity(const FieldPtr& f) {
    return SubfieldEmbedding(f, f, f->generator());
}

SubfieldEmbedding compose(const SubfieldEmbedding& first, const SubfieldEmbedding& second) {
    if (!same_field(first.target, second.source))
        throw std::invalid_argument("embedding composition mismatch");
    return SubfieldEmbedding(first.source, second.target, second.map(first.image));
}

FieldPtr make_field(const QPoly& p) { return NumberField::make(p); }

// ---------------------------------------------------------------------------
// Minimal polynomials, norms, membership
// ---------------------------------------------------------------------------

QPoly element_minimal_polynomial(const FieldElement& e) {
    const int n = e.field()->degree();
    std::vector<FieldElement> powers;
    powers.push_back(e.field()->one());
    for (int d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * e);
        Matrix<Rational> m(static_cast<size_t>(n), static_cast<size_t>(d), Rational(0));
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i)
                m.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                    powers[static_cast<size_t>(j)].coords()[static_cast<size_t>(i)];
        auto sol = solve(m, powers[static_cast<size_t>(d)].coords(), Rational(0));
        if (sol) {
            std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
            for (int j = 0; j < d; ++j) c[static_cast<size_t>(j)] = -(*sol)[static_cast<size_t>(j)];
            c[static_cast<size_t>(d)] = 1;
            return QPoly(std::move(c));
        }
    }
    throw std::logic_error("no minimal polynomial found up to the field degree");
}

Rational element_norm(const FieldElement& e) {
    if (e.is_zero()) return Rational(0);
    // defining polynomial is monic: res(g, h) = prod of h over the roots of g
    return resultant(e.field()->defining_polynomial(), e.as_poly());
}

Rational element_trace(const FieldElement& e) {
    const FieldPtr& K = e.field();
    int n = K->degree();
    Rational tr(0);
    FieldElement t = K->generator();
    FieldElement col = e;
    for (int j = 0; j < n; ++j) {
        tr += col.coords()[static_cast<size_t>(j)];
        if (j + 1 < n) col = col * t;
    }
    return tr;
}

std::optional<std::vector<Rational>> express_in_span(const std::vector<FieldElement>& span,
                                                     const FieldElement& w) {
    if (span.empty())
        return w.is_zero() ? std::optional<std::vector<Rational>>(std::vector<Rational>{})
                           : std::nullopt;
    int n = span[0].field()->degree();
    Matrix<Rational> m(static_cast<size_t>(n), span.size(), Rational(0));
    for (size_t j = 0; j < span.size(); ++j)
        for (int i = 0; i < n; ++i)
            m.at(static_cast<size_t>(i), j) = span[j].coords()[static_cast<size_t>(i)];
    return solve(m, w.coords(), Rational(0));
}

std::optional<std::vector<Rational>> express_in_powers(const FieldElement& u,
                                                       const FieldElement& w, int d) {
    std::vector<FieldElement> powers;
    powers.push_back(u.field()->one());
    for (int i = 1; i < d; ++i) powers.push_back(powers.back() * u);
    return express_in_span(powers, w);
}

// ---------------------------------------------------------------------------
// KPoly
// ---------------------------------------------------------------------------

KPoly::KPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

void KPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KPoly KPoly::lift(const FieldPtr& field, const QPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) c.push_back(field->from_rational(p[i]));
    return KPoly(field, std::move(c));
}

const FieldElement& KPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

FieldElement KPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return field_->zero();
    return coeffs_[static_cast<size_t>(i)];
}

KPoly KPoly::operator+(const KPoly& o) const {
    std::vector<FieldElement> v(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return KPoly(field_, std::move(v));
}

KPoly KPoly::operator-(const KPoly& o) const {
    std::vector<FieldElement> v(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] - o.coeffs_[i];
    return KPoly(field_, std::move(v));
}

KPoly KPoly::operator*(const KPoly& o) const {
    if (is_zero() || o.is_zero()) return KPoly(field_, {});
    std::vector<FieldElement> v(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return KPoly(field_, std::move(v));
}

KPoly KPoly::scaled(const FieldElement& s) const {
    std::vector<FieldElement> v(coeffs_.size(), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * s;
    return KPoly(field_, std::move(v));
}

KPoly KPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

KPoly KPoly::derivative() const {
    if (coeffs_.size() <= 1) return KPoly(field_, {});
    std::vector<FieldElement> v(coeffs_.size() - 1, field_->zero());
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return KPoly(field_, std::move(v));
}

FieldElement KPoly::eval(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (size_t i = coeffs_.size(); i > 0; --i) acc = acc * x + coeffs_[i - 1];
    return acc;
}

std::string KPoly::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].to_string();
    }
    os << "]";
    return os.str();
}

std::pair<KPoly, KPoly> divmod(const KPoly& num, const KPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (num.degree() < den.degree()) return {KPoly(num.field(), {}), num};
    FieldPtr K = num.field();
    std::vector<FieldElement> rem = num.coeffs();
    std::vector<FieldElement> quot(static_cast<size_t>(num.degree() - den.degree()) + 1, K->zero());
    FieldElement lead_inv = den.leading().inverse();
    for (int i = num.degree(); i >= den.degree(); --i) {
        FieldElement q = rem[static_cast<size_t>(i)] * lead_inv;
        if (q.is_zero()) continue;
        quot[static_cast<size_t>(i - den.degree())] = q;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<size_t>(i - den.degree() + j)] =
                rem[static_cast<size_t>(i - den.degree() + j)] - q * den.coeff(j);
    }
    return {KPoly(K, std::move(quot)), KPoly(K, std::move(rem))};
}

KPoly kpoly_gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? KPoly(a.field(), {}) : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

bool kpoly_less(const KPoly& a, const KPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        FieldElement ea = a.coeff(i), eb = b.coeff(i);
        const auto& ca = ea.coords();
        const auto& cb = eb.coords();
        if (ca != cb)
            return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    }
    return false;
}

// ---------------------------------------------------------------------------
// Factorization over a number field (shifted-norm method)
// ---------------------------------------------------------------------------

namespace {

// Newton interpolation through (points[i], values[i]), exact.
QPoly interpolate(const std::vector<Rational>& points, const std::vector<Rational>& values) {
    size_t n = points.size();
    std::vector<Rational> dd(values);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level]);
    QPoly acc;
    for (size_t i = n; i > 0; --i)
        acc = acc * QPoly({-points[i - 1], Rational(1)}) + QPoly(std::vector<Rational>{dd[i - 1]});
    return acc;
}

// Norm from K[x] to Q[x]: the product of p over the conjugates of the
// generator, i.e. Res_y(g(y), p(x, y)), computed by specializing x and
// interpolating the results.
QPoly kpoly_norm(const KPoly& p) {
    const FieldPtr& K = p.field();
    const QPoly& g = K->defining_polynomial();
    int out_degree = p.degree() * g.degree();
    std::vector<Rational> points, values;
    points.reserve(static_cast<size_t>(out_degree) + 1);
    long a = 0;
    while (static_cast<int>(points.size()) <= out_degree) {
        Rational pt(a);
        std::vector<Rational> spec(static_cast<size_t>(K->degree()), Rational(0));
        Rational xpow(1);
        for (int i = 0; i <= p.degree(); ++i) {
            FieldElement ci = p.coeff(i);
            const auto& c = ci.coords();
            for (size_t j = 0; j < c.size(); ++j) spec[j] += c[j] * xpow;
            xpow *= pt;
        }
        values.push_back(resultant(g, QPoly(std::move(spec))));
        points.push_back(pt);
        a = a > 0 ? -a : -a + 1;  // 0, 1, -1, 2, -2, ...
    }
    return interpolate(points, values);
}

// p(x - s*t) for the field generator t
KPoly shift_by_generator(const KPoly& p, long s) {
    const FieldPtr& K = p.field();
    FieldElement shift = K->generator() * Rational(-s);
    KPoly x_minus_st(K, {shift, K->one()});
    KPoly acc(K, {});
    for (int i = p.degree(); i >= 0; --i) acc = acc * x_minus_st + KPoly(K, {p.coeff(i)});
    return acc;
}

// squarefree monic input
std::vector<KPoly> factor_squarefree_over_field(const KPoly& p) {
    const FieldPtr& K = p.field();
    if (p.degree() == 1) return {p};
    if (K->degree() == 1) {
        std::vector<Rational> q(static_cast<size_t>(p.degree()) + 1);
        for (int i = 0; i <= p.degree(); ++i) q[static_cast<size_t>(i)] = p.coeff(i).coords().at(0);
        std::vector<KPoly> out;
        for (const auto& [f, mult] : factor_over_q(QPoly(std::move(q)))) {
            (void)mult;  // input squarefree
            out.push_back(KPoly::lift(K, f));
        }
        return out;
    }
    for (long s = 0; s <= 40; ++s) {
        KPoly shifted = shift_by_generator(p, s);
        QPoly norm = kpoly_norm(shifted);
        if (!squarefree_mod_small_prime(norm)) continue;
        std::vector<KPoly> out;
        for (const auto& [nf, mult] : factor_over_q(norm)) {
            (void)mult;
            KPoly f = kpoly_gcd(shifted, KPoly::lift(K, nf));
            if (f.degree() < 1) throw std::logic_error("norm factor with trivial gcd");
            out.push_back(shift_by_generator(f, -s).monic());
        }
        KPoly check(K, {K->one()});
        for (const auto& f : out) check = check * f;
        if (!(check == p)) throw std::logic_error("factor_over_field re-multiplication check failed");
        std::sort(out.begin(), out.end(), kpoly_less);
        return out;
    }
    throw std::logic_error("no squarefree shifted norm found");
}

}  // namespace

std::vector<std::pair<KPoly, int>> factor_over_field(const KPoly& p_in) {
    if (p_in.degree() < 1) throw std::invalid_argument("factor_over_field of constant polynomial");
    KPoly p = p_in.monic();
    KPoly sqf = divmod(p, kpoly_gcd(p, p.derivative())).first.monic();
    std::vector<std::pair<KPoly, int>> out;
    for (const auto& f : factor_squarefree_over_field(sqf)) {
        int mult = 0;
        KPoly rest = p;
        while (true) {
            auto [q, r] = divmod(rest, f);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        out.push_back({f, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return kpoly_less(a.first, b.first); });
    return out;
}

std::vector<FieldElement> roots_in_field(const FieldPtr& K, const QPoly& p) {
    std::vector<FieldElement> roots;
    for (const auto& [f, mult] : factor_over_field(KPoly::lift(K, squarefree_part(p)))) {
        (void)mult;
        if (f.degree() == 1) roots.push_back(-f.coeff(0));
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Primitive element
// ---------------------------------------------------------------------------

std::tuple<FieldPtr, SubfieldEmbedding, SubfieldEmbedding> primitive_element(
    const FieldElement& e1, const FieldElement& e2) {
    if (!same_field(e1.field(), e2.field()))
        throw std::invalid_argument("primitive_element needs elements of a common field");
    for (long c = 0; c <= 1000; ++c) {
        FieldElement u = e1 + e2 * Rational(c);
        QPoly mp = element_minimal_polynomial(u);
        int d = mp.degree();
        auto c1 = express_in_powers(u, e1, d);
        if (!c1) continue;
        auto c2 = express_in_powers(u, e2, d);
        if (!c2) continue;
        FieldPtr F = NumberField::make_unchecked(mp, "primitive element extension");
        FieldPtr S1 = NumberField::make_unchecked(element_minimal_polynomial(e1));
        FieldPtr S2 = NumberField::make_unchecked(element_minimal_polynomial(e2));
        c1->resize(static_cast<size_t>(d), Rational(0));
        c2->resize(static_cast<size_t>(d), Rational(0));
        SubfieldEmbedding f1(S1, F, F->element(*c1));
        SubfieldEmbedding f2(S2, F, F->element(*c2));
        return {F, f1, f2};
    }
    throw std::logic_error("primitive element sweep exhausted");
}

// ---------------------------------------------------------------------------
// Norm form
// ---------------------------------------------------------------------------

MPoly<Rational> norm_form(const FieldPtr& M, int base_degree_over_k,
                          const std::vector<FieldElement>& basis) {
    if (base_degree_over_k != 1)
        throw std::invalid_argument("norm_form is implemented for base field Q only");
    const size_t m = static_cast<size_t>(M->degree());
    if (m > 16) throw degree_cap_error("norm_form degree cap exceeded");
    if (basis.size() != m) throw std::invalid_argument("basis size != field degree");
    for (const auto& b : basis)
        if (!same_field(b.field(), M)) throw std::invalid_argument("basis element in wrong field");
    {
        Matrix<Rational> mat(m, m, Rational(0));
        for (size_t j = 0; j < m; ++j)
            for (size_t i = 0; i < m; ++i) mat.at(i, j) = basis[j].coords()[i];
        if (matrix_rank(mat) != m) throw std::invalid_argument("basis is not linearly independent");
    }

    // det(sum_i x_i * M_i) with M_i the multiplication matrix of basis[i];
    // expansion over column subsets keeps the computation division-free.
    using MP = MPoly<Rational>;
    FieldElement t = M->generator();
    std::vector<std::vector<std::vector<Rational>>> mul(m);  // mul[i][j] = coords of basis[i]*t^j
    for (size_t i = 0; i < m; ++i) {
        mul[i].resize(m);
        FieldElement col = basis[i];
        for (size_t j = 0; j < m; ++j) {
            mul[i][j] = col.coords();
            if (j + 1 < m) col = col * t;
        }
    }
    auto entry = [&](size_t r, size_t c) {
        MP e(m);
        for (size_t i = 0; i < m; ++i) {
            if (mul[i][c][r] == 0) continue;
            Monomial mo{std::vector<uint32_t>(m, 0)};
            mo.exps[i] = 1;
            e.add_term(mo, mul[i][c][r]);
        }
        return e;
    };

    size_t full = (static_cast<size_t>(1) << m) - 1;
    std::vector<MP> dp(full + 1, MP(m));
    dp[0] = MP::constant(m, Rational(1));
    for (size_t mask = 1; mask <= full; ++mask) {
        size_t k = static_cast<size_t>(__builtin_popcountll(mask));
        MP acc(m);
        size_t pos = 0;
        for (size_t col = 0; col < m; ++col) {
            if (!(mask & (static_cast<size_t>(1) << col))) continue;
            MP term = entry(k - 1, col) * dp[mask ^ (static_cast<size_t>(1) << col)];
            if (((k - 1) + pos) % 2 == 1) term = MP(m) - term;
            acc = acc + term;
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp[full];
}

}  // namespace hyperdense
