// Real isolation by Sturm bisection; complex isolation by numeric
// approximation polished with exact Newton steps and certified a posteriori
// with the Krawczyk interval test, disjointness, and the exact root count.

#include "hyperdense/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hyperdense {

QInterval QInterval::operator*(const QInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

QBox interval_eval(const QPoly& p, const QBox& x) {
    QBox acc;  // zero
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        acc.re = acc.re + QInterval::point(p[i]);
    }
    return acc;
}

QBox interval_eval_element(const FieldElement& e, const QBox& generator_box) {
    return interval_eval(e.as_poly(), generator_box);
}

// ---------------------------------------------------------------------------
// Sturm machinery
// ---------------------------------------------------------------------------

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (chain.back().degree() > 0) {
        QPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        // normalize by a positive scalar only; the signs carry the information
        Rational scale = abs_rational(r.leading());
        chain.push_back(r * (-1 / scale));
    }
    return chain;
}

int sign_at(const QPoly& p, const Rational& x) {
    if (p.is_zero()) return 0;
    return sign(p.eval(x));
}

int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int variations_at_infinity(const std::vector<QPoly>& chain, bool positive) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sign(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

Rational cauchy_bound(const QPoly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_rational(p[i]));
    return 1 + m / abs_rational(p.leading());
}

// a point near x that is not a root of p, moving right by halvings of step
Rational nudge_off_root(const QPoly& p, const Rational& x, Rational step) {
    Rational y = x;
    while (p.eval(y) == 0) {
        step /= 2;
        y = x + step;
    }
    return y;
}

void require_squarefree(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw std::invalid_argument("polynomial is not squarefree");
}

// Mahler-type lower bound for the distance between distinct roots of a
// squarefree integer polynomial: sep > sqrt(3|D|) / (n^((n+2)/2) ||p||_2^(n-1)).
Rational root_separation_lower_bound(const QPoly& p) {
    auto [content, ints] = p.primitive_integer();
    (void)content;
    int n = p.degree();
    if (n <= 1) return Rational(1);
    std::vector<Rational> prim(ints.size());
    for (size_t i = 0; i < ints.size(); ++i) prim[i] = Rational(ints[i]);
    Rational disc = discriminant(QPoly(std::move(prim)));
    if (disc == 0) throw std::invalid_argument("separation bound needs a squarefree polynomial");
    Integer num = isqrt(3 * abs(disc.get_num()) / disc.get_den());
    if (num == 0) num = 1;
    Integer norm2(0);
    for (const auto& c : ints) norm2 += c * c;
    Integer norm_up = isqrt(norm2) + 1;
    Integer den(1);
    unsigned long half_exp = static_cast<unsigned long>((n + 3) / 2);  // >= (n+2)/2
    Integer nn(n);
    for (unsigned long i = 0; i < half_exp; ++i) den *= nn;
    for (int i = 0; i < n - 1; ++i) den *= norm_up;
    return make_rational(num, den);
}

struct IsolationInterval {
    Rational lo, hi;  // endpoints are never roots
    int count;
};

std::vector<QInterval> isolate_with_chain(const QPoly& p, const std::vector<QPoly>& chain,
                                          const Rational& precision) {
    Rational bound = cauchy_bound(p);
    Rational lo = -bound, hi = bound;
    std::vector<IsolationInterval> work;
    std::vector<QInterval> done;
    int total = variations_at(chain, lo) - variations_at(chain, hi);
    if (total > 0) work.push_back({lo, hi, total});
    while (!work.empty()) {
        IsolationInterval cur = work.back();
        work.pop_back();
        if (cur.count == 1 && cur.hi - cur.lo <= precision) {
            done.push_back({cur.lo, cur.hi});
            continue;
        }
        Rational mid = nudge_off_root(p, (cur.lo + cur.hi) / 2, (cur.hi - cur.lo) / 8);
        int left = variations_at(chain, cur.lo) - variations_at(chain, mid);
        int right = cur.count - left;
        if (left > 0) work.push_back({cur.lo, mid, left});
        if (right > 0) work.push_back({mid, cur.hi, right});
    }
    std::sort(done.begin(), done.end(),
              [](const QInterval& a, const QInterval& b) { return a.lo < b.lo; });
    return done;
}

}  // namespace

std::vector<QInterval> isolate_real_roots(const QPoly& p, const Rational& precision) {
    require_squarefree(p);
    if (p.degree() < 1) return {};
    auto chain = sturm_chain(p);
    auto out = isolate_with_chain(p, chain, precision);
    int total = variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
    if (static_cast<int>(out.size()) != total)
        throw std::logic_error("real root isolation lost a root");
    return out;
}

std::vector<QInterval> isolate_real_roots(const QPoly& p) {
    return isolate_real_roots(p, make_rational(1, 16));
}

int count_real_roots(const QPoly& p) {
    require_squarefree(p);
    if (p.degree() < 1) return 0;
    auto chain = sturm_chain(p);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::pair<int, int> signature(const FieldPtr& K) {
    int r1 = count_real_roots(K->defining_polynomial());
    return {r1, (K->degree() - r1) / 2};
}

bool is_totally_real(const FieldPtr& K) { return signature(K).second == 0; }
bool is_totally_imaginary(const FieldPtr& K) { return signature(K).first == 0; }

int unit_rank(const FieldPtr& K, int num_finite_places) {
    auto [r1, r2] = signature(K);
    return r1 + r2 - 1 + num_finite_places;
}

// ---------------------------------------------------------------------------
// Complex isolation
// ---------------------------------------------------------------------------

namespace {

struct QComplex {
    Rational re, im;
    QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
    QComplex operator-(const QComplex& o) const { return {re - o.re, im - o.im}; }
    QComplex operator*(const QComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QComplex operator/(const QComplex& o) const {
        Rational d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
};

QComplex eval_qc(const QPoly& p, const QComplex& z) {
    QComplex acc{Rational(0), Rational(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z;
        acc.re += p[i];
    }
    return acc;
}

QComplex round_qc(const QComplex& z, unsigned bits) {
    return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

// Durand-Kerner in double precision; empty result on failure.
std::vector<std::complex<double>> durand_kerner(const QPoly& p, unsigned seed_offset) {
    int n = p.degree();
    std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = p[i].get_d();
    double radius = 1.0;
    for (int i = 0; i < n; ++i) {
        double ratio = std::abs(c[static_cast<size_t>(i)].real() / c[static_cast<size_t>(n)].real());
        if (ratio > 0) radius = std::max(radius, 2.0 * std::pow(ratio, 1.0 / (n - i)));
    }
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double angle = 0.93 + 2 * M_PI * (k + 0.25 + 0.13 * seed_offset) / n;
        z[static_cast<size_t>(k)] = std::polar(radius * (0.5 + 0.03 * static_cast<double>(k) / std::max(1, n)), angle);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + c[static_cast<size_t>(i)];
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> denom = c[static_cast<size_t>(n)];
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
            if (std::abs(denom) == 0 || !std::isfinite(std::abs(denom))) return {};
            std::complex<double> delta = eval(z[static_cast<size_t>(k)]) / denom;
            z[static_cast<size_t>(k)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-13 * radius) return z;
    }
    return {};
}

// One certified box around an approximate root, or nullopt.
std::optional<QBox> krawczyk_box(const QPoly& p, const QPoly& dp, QComplex z, unsigned bits) {
    // polish with exact Newton steps, rounding to dyadics
    for (int step = 0; step < 60; ++step) {
        QComplex pz = eval_qc(p, z);
        if (pz.re == 0 && pz.im == 0) break;
        QComplex dpz = eval_qc(dp, z);
        if (dpz.re == 0 && dpz.im == 0) return std::nullopt;
        QComplex delta = pz / dpz;
        z = round_qc(z - delta, bits + 64);
        Rational err = std::max(abs_rational(delta.re), abs_rational(delta.im));
        if (err < dyadic(-static_cast<long>(bits) - 8)) break;
    }
    Rational h = dyadic(-static_cast<long>(bits));
    QBox box(QInterval(z.re - h, z.re + h), QInterval(z.im - h, z.im + h));
    // Krawczyk operator K = m - p(m)/c + (1 - p'(X)/c) (X - m), c = p'(m);
    // K strictly inside X certifies exactly one root in X
    QComplex c = eval_qc(dp, z);
    if (c.re == 0 && c.im == 0) return std::nullopt;
    QComplex pm = eval_qc(p, z);
    QComplex newton = pm / c;
    QBox dpx = interval_eval(dp, box);
    QComplex inv_c = QComplex{Rational(1), Rational(0)} / c;
    QBox scaled = dpx * QBox(QInterval::point(inv_c.re), QInterval::point(inv_c.im));
    QBox one_minus(QInterval(1 - scaled.re.hi, 1 - scaled.re.lo),
                   QInterval(-scaled.im.hi, -scaled.im.lo));
    QBox x_minus_m(QInterval(box.re.lo - z.re, box.re.hi - z.re),
                   QInterval(box.im.lo - z.im, box.im.hi - z.im));
    QBox k = one_minus * x_minus_m;
    k.re = k.re + QInterval::point(z.re - newton.re);
    k.im = k.im + QInterval::point(z.im - newton.im);
    if (k.inside(box)) return box;
    return std::nullopt;
}

}  // namespace

EmbeddingSet embeddings_of(const FieldPtr& K, const Rational& precision) {
    const QPoly& p = K->defining_polynomial();
    const int n = p.degree();
    const QPoly dp = p.derivative();
    if (precision <= 0) throw std::invalid_argument("precision must be positive");

    // the ordering is fixed at a precision derived from the root separation
    // bound, so refining the output precision can never change it
    Rational sep = root_separation_lower_bound(p);
    Rational order_precision = std::min(Rational(sep / 8), precision);

    unsigned bits = 32;
    while (bits < 4096 && dyadic(-static_cast<long>(bits)) > order_precision) bits *= 2;

    for (; bits <= 4096; bits *= 2) {
        Rational target = dyadic(-static_cast<long>(bits));
        std::vector<QInterval> real_roots = isolate_real_roots(p, target);
        int r1 = static_cast<int>(real_roots.size());
        int r2 = (n - r1) / 2;

        std::vector<QBox> upper;
        bool ok = true;
        if (r2 > 0) {
            for (unsigned seed = 0; seed < 3 && static_cast<int>(upper.size()) != r2; ++seed) {
                upper.clear();
                auto approx = durand_kerner(p, seed);
                if (approx.empty()) continue;
                for (const auto& z : approx) {
                    if (z.imag() <= 0) continue;
                    QComplex zq{round_dyadic(Rational(z.real()), 64),
                                round_dyadic(Rational(z.imag()), 64)};
                    auto box = krawczyk_box(p, dp, zq, bits);
                    if (box && box->im.lo > 0) upper.push_back(*box);
                }
            }
            ok = static_cast<int>(upper.size()) == r2;
            for (size_t i = 0; ok && i < upper.size(); ++i)
                for (size_t j = i + 1; ok && j < upper.size(); ++j)
                    if (!upper[i].disjoint(upper[j])) ok = false;
        }
        if (!ok) continue;

        // canonical order for the pairs: lexicographic on (re, im) of the
        // upper representative; boxes are at most sep/8 wide, so pairs with
        // genuinely distinct real parts order by real part
        std::sort(upper.begin(), upper.end(), [](const QBox& a, const QBox& b) {
            if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
            return a.im.lo < b.im.lo;
        });

        EmbeddingSet es;
        es.field = K;
        es.r1 = r1;
        es.r2 = r2;
        for (const auto& iv : real_roots)
            es.boxes.push_back(QBox(iv, QInterval::point(Rational(0))));
        for (const auto& b : upper) {
            es.boxes.push_back(b.conjugate());  // ascending imaginary part first
            es.boxes.push_back(b);
        }
        es.conjugation.resize(static_cast<size_t>(n));
        for (int i = 0; i < r1; ++i) es.conjugation[static_cast<size_t>(i)] = i;
        for (int j = 0; j < r2; ++j) {
            es.conjugation[static_cast<size_t>(r1 + 2 * j)] = r1 + 2 * j + 1;
            es.conjugation[static_cast<size_t>(r1 + 2 * j + 1)] = r1 + 2 * j;
        }
        return es;
    }
    throw std::runtime_error("embedding certification failed at the precision cap");
}

}  // namespace hyperdense
