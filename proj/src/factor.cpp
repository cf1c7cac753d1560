// Factorization over Q: Yun squarefree decomposition, then Zassenhaus
// (Berlekamp mod a small probed prime, Hensel lifting to a Mignotte-type
// bound, subset recombination). Degrees reaching this code go up to a few
// hundred (norms of desk-scale field extensions), so prime probing picks the
// prime with the fewest modular factors before committing to recombination.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperdense/polynomial.hpp"

namespace hyperdense {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^31, dense ascending coefficients.
// ---------------------------------------------------------------------------

using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

uint64_t fp_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

uint64_t fp_inv(uint64_t a, uint64_t p) { return fp_pow(a, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(c);
    return c;
}

// remainder of a by b; b nonzero
FpPoly fp_rem(FpPoly a, const FpPoly& b, uint64_t p) {
    fp_trim(a);
    uint64_t inv_lead = fp_inv(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        uint64_t q = a.back() * inv_lead % p;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t sub = q * b[j] % p;
            a[shift + j] = (a[shift + j] + p - sub) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, uint64_t p) {
    fp_trim(a);
    if (fp_deg(a) < fp_deg(b)) return {{}, a};
    FpPoly q(a.size() - b.size() + 1, 0);
    uint64_t inv_lead = fp_inv(b.back(), p);
    while (fp_deg(a) >= fp_deg(b) && !a.empty()) {
        uint64_t c = a.back() * inv_lead % p;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t sub = c * b[j] % p;
            a[shift + j] = (a[shift + j] + p - sub) % p;
        }
        fp_trim(a);
    }
    fp_trim(q);
    return {q, a};
}

FpPoly fp_monic(FpPoly a, uint64_t p) {
    fp_trim(a);
    if (a.empty() || a.back() == 1) return a;
    uint64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

// (g, u, v) with u*a + v*b = g, g monic
std::array<FpPoly, 3> fp_xgcd(FpPoly a, FpPoly b, uint64_t p) {
    FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        auto [q, r] = fp_divmod(a, b, p);
        FpPoly qs = fp_mul(q, s1, p), qt = fp_mul(q, t1, p);
        FpPoly s2(std::max(s0.size(), qs.size()), 0), t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            uint64_t x = i < s0.size() ? s0[i] : 0;
            uint64_t y = i < qs.size() ? qs[i] : 0;
            s2[i] = (x + p - y) % p;
        }
        for (size_t i = 0; i < t2.size(); ++i) {
            uint64_t x = i < t0.size() ? t0[i] : 0;
            uint64_t y = i < qt.size() ? qt[i] : 0;
            t2[i] = (x + p - y) % p;
        }
        fp_trim(s2);
        fp_trim(t2);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty()) throw std::logic_error("fp_xgcd of zero polynomials");
    uint64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {a, s0, t0};
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& mod, uint64_t p) {
    FpPoly acc = {1};
    base = fp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = fp_rem(fp_mul(acc, base, p), mod, p);
        base = fp_rem(fp_mul(base, base, p), mod, p);
        e /= 2;
    }
    return acc;
}

FpPoly reduce_mod_p(const std::vector<Integer>& f, uint64_t p) {
    FpPoly out(f.size());
    Integer t;
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_mod_ui(t.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
        out[i] = t.get_ui();
    }
    fp_trim(out);
    return out;
}

FpPoly fp_derivative(const FpPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
    fp_trim(d);
    return d;
}

// ---------------------------------------------------------------------------
// Berlekamp over F_p (small p): factor count and full split of squarefree f.
// ---------------------------------------------------------------------------

struct Berlekamp {
    uint64_t p;
    FpPoly f;  // monic squarefree
    int n;
    std::vector<std::vector<uint64_t>> null_basis;  // vectors v with v(x)^p = v(x) mod f

    Berlekamp(FpPoly poly, uint64_t prime) : p(prime), f(std::move(poly)), n(fp_deg(f)) {
        // rows of Q: x^(p*i) mod f
        FpPoly xp = fp_powmod({0, 1}, Integer(static_cast<unsigned long>(p)), f, p);
        std::vector<std::vector<uint64_t>> m(static_cast<size_t>(n),
                                             std::vector<uint64_t>(static_cast<size_t>(n), 0));
        FpPoly row = {1};
        for (int i = 0; i < n; ++i) {
            for (size_t j = 0; j < row.size(); ++j) m[static_cast<size_t>(i)][j] = row[j];
            if (i + 1 < n) row = fp_rem(fp_mul(row, xp, p), f, p);
        }
        // v such that v * (Q - I) = 0  <=>  (Q^T - I) v^T = 0
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            (m[static_cast<size_t>(i)][static_cast<size_t>(i)] + p - 1) % p;
        // transpose
        std::vector<std::vector<uint64_t>> a(static_cast<size_t>(n),
                                             std::vector<uint64_t>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[static_cast<size_t>(j)][static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        // nullspace of a
        std::vector<int> pivot_col(static_cast<size_t>(n), -1);
        int rank = 0;
        for (int col = 0; col < n && rank < n; ++col) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(col)]) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
            uint64_t inv = fp_inv(a[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
            for (int j = 0; j < n; ++j) a[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                a[static_cast<size_t>(rank)][static_cast<size_t>(j)] * inv % p;
            for (int r = 0; r < n; ++r) {
                if (r == rank) continue;
                uint64_t c = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (!c) continue;
                for (int j = 0; j < n; ++j) {
                    uint64_t sub = c * a[static_cast<size_t>(rank)][static_cast<size_t>(j)] % p;
                    a[static_cast<size_t>(r)][static_cast<size_t>(j)] = (a[static_cast<size_t>(r)][static_cast<size_t>(j)] + p - sub) % p;
                }
            }
            pivot_col[static_cast<size_t>(rank)] = col;
            ++rank;
        }
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
        for (int col = 0; col < n; ++col) {
            if (is_pivot[static_cast<size_t>(col)]) continue;
            std::vector<uint64_t> v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(col)] = 1;
            for (int r = 0; r < rank; ++r) {
                uint64_t c = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (c) v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = (p - c) % p;
            }
            null_basis.push_back(std::move(v));
        }
    }

    int factor_count() const { return static_cast<int>(null_basis.size()); }

    std::vector<FpPoly> split() const {
        std::vector<FpPoly> factors = {f};
        size_t want = null_basis.size();
        for (const auto& v : null_basis) {
            if (factors.size() >= want) break;
            FpPoly vp(v);
            fp_trim(vp);
            if (fp_deg(vp) < 1) continue;  // constant vector splits nothing
            std::vector<FpPoly> next;
            for (const auto& u : factors) {
                if (factors.size() + next.size() >= want + 1 && fp_deg(u) <= 1) {
                    next.push_back(u);
                    continue;
                }
                std::vector<FpPoly> pieces = {u};
                for (uint64_t c = 0; c < p && pieces.size() > 0; ++c) {
                    FpPoly shifted = vp;
                    if (shifted.empty()) shifted = {0};
                    shifted[0] = (shifted[0] + p - c % p) % p;
                    fp_trim(shifted);
                    std::vector<FpPoly> updated;
                    for (auto& piece : pieces) {
                        if (fp_deg(piece) <= 1) { updated.push_back(piece); continue; }
                        FpPoly g = fp_gcd(piece, shifted, p);
                        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(piece)) {
                            updated.push_back(g);
                            updated.push_back(fp_monic(fp_divmod(piece, g, p).first, p));
                        } else {
                            updated.push_back(piece);
                        }
                    }
                    pieces = std::move(updated);
                }
                for (auto& piece : pieces) next.push_back(std::move(piece));
            }
            factors = std::move(next);
        }
        if (factors.size() != want)
            throw std::logic_error("berlekamp split did not reach the expected factor count");
        return factors;
    }
};

// ---------------------------------------------------------------------------
// Z/m[x] helpers for Hensel lifting (m = p^k).
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int z_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zm_reduce(ZPoly a, const Integer& m) {
    for (auto& c : a) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    z_trim(a);
    return a;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return zm_reduce(std::move(c), m);
}

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return zm_reduce(std::move(c), m);
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return zm_reduce(std::move(c), m);
}

// divmod by a monic divisor, coefficients mod m
std::pair<ZPoly, ZPoly> zm_divmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
    z_trim(a);
    if (z_deg(a) < z_deg(b)) return {{}, a};
    ZPoly q(a.size() - b.size() + 1, Integer(0));
    while (z_deg(a) >= z_deg(b) && !a.empty()) {
        Integer c = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            a[shift + j] -= c * b[j];
            mpz_mod(a[shift + j].get_mpz_t(), a[shift + j].get_mpz_t(), m.get_mpz_t());
        }
        z_trim(a);
    }
    z_trim(q);
    return {q, a};
}

ZPoly from_fp(const FpPoly& a) {
    ZPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = Integer(static_cast<unsigned long>(a[i]));
    return out;
}

// symmetric representative in (-m/2, m/2]
Integer symmetric(const Integer& c, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

ZPoly symmetric_poly(const ZPoly& a, const Integer& m) {
    ZPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = symmetric(a[i], m);
    z_trim(out);
    return out;
}

// One quadratic Hensel step: f = g*h (mod m), u*g + v*h = 1 (mod m),
// all monic g (h = f/g to leading terms); returns updated (g, h, u, v) mod m^2.
// f is monic; g, h monic.
struct HenselPair {
    ZPoly g, h, u, v;
};

HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Integer& m) {
    Integer m2 = m * m;
    ZPoly e = zm_sub(f, zm_mul(in.g, in.h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(in.v, e, m2), in.g, m2);
    ZPoly g2 = zm_add(in.g, r, m2);
    ZPoly h2 = zm_add(in.h, zm_add(zm_mul(in.u, e, m2), zm_mul(q, in.h, m2), m2), m2);
    ZPoly one = {Integer(1)};
    ZPoly b = zm_sub(zm_add(zm_mul(in.u, g2, m2), zm_mul(in.v, h2, m2), m2), one, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(in.v, b, m2), g2, m2);
    ZPoly v2 = zm_sub(in.v, d, m2);
    ZPoly u2 = zm_sub(in.u, zm_add(zm_mul(in.u, b, m2), zm_mul(c, h2, m2), m2), m2);
    return {g2, h2, u2, v2};
}

// Lift the factorization f = prod(factors) (mod p) to mod p^2^ceil(lg K),
// f monic, factors monic mod p. Recursive splitting into two halves.
void hensel_tree(const ZPoly& f, const std::vector<FpPoly>& factors, size_t lo, size_t hi,
                 uint64_t p, const Integer& target_modulus, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = zm_reduce(f, target_modulus);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FpPoly gp = {1}, hp = {1};
    for (size_t i = lo; i < mid; ++i) gp = fp_mul(gp, factors[i], p);
    for (size_t i = mid; i < hi; ++i) hp = fp_mul(hp, factors[i], p);
    auto [one, u, v] = fp_xgcd(gp, hp, p);
    if (fp_deg(one) != 0) throw std::logic_error("hensel: factors not coprime mod p");
    HenselPair pair{from_fp(gp), from_fp(hp), from_fp(u), from_fp(v)};
    Integer m(static_cast<unsigned long>(p));
    while (m < target_modulus) {
        pair = hensel_step(zm_reduce(f, m * m), pair, m);
        m *= m;
    }
    pair.g = zm_reduce(pair.g, target_modulus);
    pair.h = zm_reduce(pair.h, target_modulus);
    hensel_tree(pair.g, factors, lo, mid, p, target_modulus, out);
    hensel_tree(pair.h, factors, mid, hi, p, target_modulus, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus driver for a primitive squarefree monic integer polynomial.
// ---------------------------------------------------------------------------

ZPoly z_mul_plain(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// exact division test in Z[x]; returns quotient if divisible
bool z_divide_exact(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
    ZPoly r = num;
    z_trim(r);
    if (den.empty()) return false;
    if (z_deg(r) < z_deg(den)) return false;
    quot.assign(r.size() - den.size() + 1, Integer(0));
    while (!r.empty() && z_deg(r) >= z_deg(den)) {
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), den.back().get_mpz_t());
        if (rem != 0) return false;
        size_t shift = r.size() - den.size();
        quot[shift] = q;
        for (size_t j = 0; j < den.size(); ++j) r[shift + j] -= q * den[j];
        if (r.back() != 0) return false;
        z_trim(r);
    }
    return r.empty();
}

const std::array<uint64_t, 30> kProbePrimes = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                               37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                               79,  83,  89,  97,  101, 103, 107, 109, 113, 127};

// f monic squarefree primitive integer polynomial, deg >= 2, f(0) != 0.
std::vector<ZPoly> zassenhaus_monic(const ZPoly& f) {
    int n = z_deg(f);

    // probe primes for squarefree reduction and minimal factor count
    struct Probe {
        uint64_t p = 0;
        int count = 1 << 30;
    };
    Probe best;
    int probes_wanted = n <= 15 ? 1 : 8;
    int probes_done = 0;
    for (uint64_t p : kProbePrimes) {
        FpPoly fp = reduce_mod_p(f, p);
        if (fp_deg(fp) != n) continue;  // p divides lc (monic: impossible) — keep for safety
        if (fp_deg(fp_gcd(fp, fp_derivative(fp, p), p)) != 0) continue;
        Berlekamp b(fp_monic(fp, p), p);
        if (b.factor_count() < best.count) {
            best.p = p;
            best.count = b.factor_count();
        }
        ++probes_done;
        if (best.count == 1 || probes_done >= probes_wanted) break;
    }
    if (best.p == 0) throw std::logic_error("no usable prime found for factorization");
    if (best.count == 1) return {f};

    uint64_t p = best.p;
    Berlekamp berl(fp_monic(reduce_mod_p(f, p), p), p);
    std::vector<FpPoly> modular = berl.split();
    std::sort(modular.begin(), modular.end());

    // Mignotte-style bound: |coeff of any factor| <= 2^n * ||f||_2
    Integer norm2(0);
    for (const auto& c : f) norm2 += c * c;
    Integer bound = (isqrt(norm2) + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    Integer modulus(static_cast<unsigned long>(p));
    while (modulus <= bound * 2) modulus *= modulus;

    std::vector<ZPoly> lifted(modular.size());
    hensel_tree(zm_reduce(f, modulus), modular, 0, modular.size(), p, modulus, lifted);

    // recombination
    std::vector<ZPoly> result;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    ZPoly remaining = f;

    auto tc_of = [&](const std::vector<size_t>& subset) {
        Integer t(1);
        for (size_t i : subset) t = t * lifted[i][0] % modulus;
        return symmetric(t, modulus);
    };

    size_t card = 1;
    while (2 * card <= live.size()) {
        // iterate over subsets of `live` of size `card`
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        bool restart = false;
        while (!restart) {
            std::vector<size_t> subset(card);
            for (size_t i = 0; i < card; ++i) subset[i] = live[idx[i]];
            // skip complementary duplicates when card is exactly half
            bool skip = (2 * card == live.size() && idx[0] != 0);
            if (!skip) {
                Integer tc = tc_of(subset);
                Integer f0 = remaining[0];
                if (tc != 0 && mpz_divisible_p(f0.get_mpz_t(), tc.get_mpz_t())) {
                    ZPoly candidate = {Integer(1)};
                    for (size_t i : subset) candidate = zm_mul(candidate, lifted[i], modulus);
                    candidate = symmetric_poly(candidate, modulus);
                    ZPoly quot;
                    if (!candidate.empty() && z_divide_exact(remaining, candidate, quot)) {
                        result.push_back(candidate);
                        remaining = quot;
                        std::vector<size_t> next_live;
                        for (size_t v : live)
                            if (std::find(subset.begin(), subset.end(), v) == subset.end())
                                next_live.push_back(v);
                        live = std::move(next_live);
                        restart = true;
                        continue;
                    }
                }
            }
            // next subset
            size_t i = card;
            while (i > 0 && idx[i - 1] == live.size() - card + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!restart) ++card;
    }
    if (z_deg(remaining) > 0) result.push_back(remaining);

    // self-check: product of results equals f
    ZPoly check = {Integer(1)};
    for (const auto& g : result) check = z_mul_plain(check, g);
    if (check != f) throw std::logic_error("zassenhaus recombination self-check failed");
    return result;
}

QPoly from_z(const ZPoly& a) {
    std::vector<Rational> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = Rational(a[i]);
    return QPoly(std::move(v));
}

ZPoly to_primitive_z(const QPoly& p) { return p.primitive_integer().second; }

// factor a squarefree primitive integer polynomial (any leading coefficient)
std::vector<QPoly> factor_squarefree(const ZPoly& f_in) {
    ZPoly f = f_in;
    z_trim(f);
    int n = z_deg(f);
    if (n == 1) return {from_z(f).monic()};

    Integer lc = f.back();
    ZPoly fhat;
    if (lc == 1) {
        fhat = f;
    } else {
        // monicize: fhat(x) = lc^(n-1) f(x/lc), roots scaled by lc
        fhat.resize(f.size());
        fhat[static_cast<size_t>(n)] = 1;
        Integer scale(1);
        for (int i = n - 1; i >= 0; --i) {
            fhat[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] * scale;
            scale *= lc;
        }
    }
    // strip powers of x (only possible pre-monicization if f(0)=0; caller avoids)
    if (fhat[0] == 0) throw std::logic_error("factor_squarefree: zero constant term");

    std::vector<ZPoly> parts = zassenhaus_monic(fhat);
    std::vector<QPoly> out;
    out.reserve(parts.size());
    for (const auto& g : parts) {
        if (lc == 1) {
            out.push_back(from_z(g).monic());
        } else {
            // map back: primitive part of g(lc * x), then monic
            QPoly gq = from_z(g).scale_arg(Rational(lc));
            out.push_back(gq.monic());
        }
    }
    return out;
}

}  // namespace

bool squarefree_mod_small_prime(const QPoly& p) {
    if (p.degree() < 1) return false;
    ZPoly f = to_primitive_z(p);
    for (uint64_t q : kProbePrimes) {
        FpPoly fq = reduce_mod_p(f, q);
        if (fp_deg(fq) != z_deg(f)) continue;
        if (fp_deg(fp_gcd(fq, fp_derivative(fq, q), q)) == 0) return true;
    }
    return false;
}


std::vector<std::pair<QPoly, int>> factor_mod_p(const QPoly& p, unsigned long prime) {
    if (p.degree() < 1) throw std::invalid_argument("factor_mod_p of constant polynomial");
    uint64_t q = prime;
    ZPoly f = to_primitive_z(p);
    FpPoly fq = reduce_mod_p(f, q);
    if (fp_deg(fq) != z_deg(f))
        throw std::invalid_argument("prime divides the leading coefficient");
    fq = fp_monic(std::move(fq), q);

    // squarefree decomposition in F_p[x], including the inseparable case
    // (f' = 0 means f = g(x^p) and g is recovered coefficientwise)
    std::vector<std::pair<FpPoly, int>> squarefree_parts;
    std::vector<std::pair<FpPoly, int>> work = {{fq, 1}};
    while (!work.empty()) {
        auto [g, outer_mult] = work.back();
        work.pop_back();
        if (fp_deg(g) < 1) continue;
        FpPoly dg = fp_derivative(g, q);
        if (dg.empty()) {
            // g = h(x^p): p-th root since c^p = c in F_p
            FpPoly h((static_cast<size_t>(fp_deg(g)) / q) + 1, 0);
            for (size_t i = 0; i < g.size(); i += q) h[i / q] = g[i];
            work.push_back({h, outer_mult * static_cast<int>(q)});
            continue;
        }
        FpPoly c = fp_gcd(g, dg, q);
        FpPoly w = fp_divmod(g, c, q).first;
        int mult = 1;
        while (fp_deg(w) > 0) {
            FpPoly y = fp_gcd(w, c, q);
            FpPoly part = fp_divmod(w, y, q).first;
            if (fp_deg(part) > 0) squarefree_parts.push_back({fp_monic(part, q), mult * outer_mult});
            c = fp_divmod(c, y, q).first;
            w = std::move(y);
            ++mult;
        }
        if (fp_deg(c) > 0) work.push_back({c, outer_mult});
    }

    std::vector<std::pair<QPoly, int>> out;
    for (const auto& [part, mult] : squarefree_parts) {
        std::vector<FpPoly> irreducibles;
        if (fp_deg(part) == 1) {
            irreducibles = {part};
        } else {
            Berlekamp b(part, q);
            irreducibles = b.split();
        }
        for (const auto& g : irreducibles) {
            std::vector<Rational> coeffs(g.size());
            for (size_t i = 0; i < g.size(); ++i) coeffs[i] = Rational(static_cast<unsigned long>(g[i]));
            out.push_back({QPoly(std::move(coeffs)), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

bool dedekind_index_test(const QPoly& monic_integral, unsigned long prime) {
    auto [content, f] = monic_integral.primitive_integer();
    if (content != 1 || f.back() != 1)
        throw std::invalid_argument("dedekind test needs a monic integral polynomial");
    uint64_t q = prime;
    auto factors = factor_mod_p(monic_integral, prime);
    // radical and cofactor mod p
    FpPoly radical = {1}, cofactor = {1};
    for (const auto& [g, mult] : factors) {
        ZPoly gz = to_primitive_z(g);
        FpPoly gp = reduce_mod_p(gz, q);
        radical = fp_mul(radical, gp, q);
        for (int i = 1; i < mult; ++i) cofactor = fp_mul(cofactor, gp, q);
    }
    // integer lifts with coefficients in [0, p)
    auto lift = [&](const FpPoly& a) {
        ZPoly out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = Integer(static_cast<unsigned long>(a[i]));
        return out;
    };
    ZPoly g_lift = lift(radical), h_lift = lift(cofactor);
    ZPoly gh = z_mul_plain(g_lift, h_lift);
    ZPoly t(std::max(gh.size(), f.size()), Integer(0));
    for (size_t i = 0; i < gh.size(); ++i) t[i] += gh[i];
    for (size_t i = 0; i < f.size(); ++i) t[i] -= f[i];
    for (auto& c : t) {
        if (c % static_cast<long>(prime) != 0) throw std::logic_error("dedekind: g*h != f mod p");
        c /= static_cast<long>(prime);
    }
    FpPoly tbar = reduce_mod_p(t, q);
    FpPoly common = fp_gcd(fp_gcd(tbar, radical, q), cofactor, q);
    return fp_deg(common) == 0;
}

std::vector<std::pair<QPoly, int>> factor_over_q(const QPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("factor_over_q of constant polynomial");

    QPoly work = p.monic();
    std::vector<std::pair<QPoly, int>> out;

    // strip powers of x
    int x_mult = 0;
    while (work[0] == 0) {
        std::vector<Rational> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = QPoly(std::move(shifted));
        ++x_mult;
    }
    if (x_mult > 0) out.push_back({QPoly::x(), x_mult});

    if (work.degree() >= 1) {
        // squarefree fast path: squarefree mod some good prime implies squarefree
        bool squarefree = false;
        ZPoly fz = to_primitive_z(work);
        for (uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull}) {
            FpPoly fq = reduce_mod_p(fz, q);
            if (fp_deg(fq) != z_deg(fz)) continue;
            if (fp_deg(fp_gcd(fq, fp_derivative(fq, q), q)) == 0) {
                squarefree = true;
                break;
            }
        }
        std::vector<std::pair<QPoly, int>> squarefree_parts;
        if (squarefree) {
            squarefree_parts.push_back({work, 1});
        } else {
            // Yun's algorithm
            QPoly f = work;
            QPoly fp = f.derivative();
            QPoly a = poly_gcd(f, fp);
            QPoly b = f / a;
            QPoly c = fp / a;
            QPoly d = c - b.derivative();
            int mult = 1;
            while (b.degree() > 0) {
                QPoly g = poly_gcd(b, d);
                if (g.degree() > 0) squarefree_parts.push_back({g, mult});
                b = b / g;
                c = d / g;
                d = c - b.derivative();
                ++mult;
            }
        }
        for (const auto& [part, mult] : squarefree_parts) {
            for (const auto& factor : factor_squarefree(to_primitive_z(part)))
                out.push_back({factor, mult});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });

    // exact re-multiplication check
    QPoly check = QPoly::one();
    for (const auto& [factor, mult] : out)
        for (int i = 0; i < mult; ++i) check = check * factor;
    if (check != p.monic()) throw std::logic_error("factor_over_q re-multiplication check failed");
    return out;
}

}  // namespace hyperdense
