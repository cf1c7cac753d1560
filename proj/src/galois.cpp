#include "hyperdense/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperdense/linalg.hpp"

namespace hyperdense {

Perm compose(const Perm& a, const Perm& b) {
    Perm c;
    c.map.resize(b.map.size());
    for (size_t i = 0; i < b.map.size(); ++i)
        c.map[i] = a.map[static_cast<size_t>(b.map[i])];
    return c;
}

Perm inverse(const Perm& p) {
    Perm q;
    q.map.resize(p.map.size());
    for (size_t i = 0; i < p.map.size(); ++i) q.map[static_cast<size_t>(p.map[i])] = static_cast<int>(i);
    return q;
}

int perm_order(const Perm& p) {
    Perm acc = p;
    int ord = 1;
    while (!acc.is_identity()) {
        acc = compose(acc, p);
        ++ord;
    }
    return ord;
}

int PermutationGroup::index_of(const Perm& p) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].perm == p) return static_cast<int>(i);
    return -1;
}

bool PermutationGroup::is_abelian() const {
    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = i + 1; j < elements.size(); ++j)
            if (mult[i][j] != mult[j][i]) return false;
    return true;
}

bool PermutationGroup::is_cyclic() const {
    for (const auto& e : elements)
        if (perm_order(e.perm) == static_cast<int>(elements.size())) return true;
    return false;
}

PermutationGroup build_group(int degree, std::vector<GroupElement> elements) {
    std::sort(elements.begin(), elements.end(),
              [](const GroupElement& a, const GroupElement& b) { return a.perm < b.perm; });
    PermutationGroup g;
    g.degree = degree;
    g.elements = std::move(elements);
    size_t n = g.elements.size();
    std::map<std::vector<int>, int> lookup;
    for (size_t i = 0; i < n; ++i) lookup[g.elements[i].perm.map] = static_cast<int>(i);
    g.mult.assign(n, std::vector<int>(n, -1));
    g.inv.assign(n, -1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            auto it = lookup.find(compose(g.elements[i].perm, g.elements[j].perm).map);
            if (it == lookup.end()) throw std::logic_error("automorphism set is not closed");
            g.mult[i][j] = it->second;
        }
        auto it = lookup.find(inverse(g.elements[i].perm).map);
        if (it == lookup.end()) throw std::logic_error("automorphism set lacks inverses");
        g.inv[i] = it->second;
    }
    return g;
}

Subgroup subgroup_closure(const PermutationGroup& G, std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(0);  // identity
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur) {
            for (int b : cur) {
                if (s.insert(G.mult[static_cast<size_t>(a)][static_cast<size_t>(b)]).second) grew = true;
            }
            if (s.insert(G.inv[static_cast<size_t>(a)]).second) grew = true;
        }
    }
    return Subgroup(s.begin(), s.end());
}

std::vector<Subgroup> subgroups_between(const PermutationGroup& G, const Subgroup& H) {
    Subgroup base = subgroup_closure(G, H);
    std::set<Subgroup> seen = {base};
    std::vector<Subgroup> queue = {base};
    for (size_t q = 0; q < queue.size(); ++q) {
        Subgroup cur = queue[q];
        std::set<int> in_cur(cur.begin(), cur.end());
        for (int g = 0; g < static_cast<int>(G.order()); ++g) {
            if (in_cur.count(g)) continue;
            std::vector<int> seed = cur;
            seed.push_back(g);
            Subgroup bigger = subgroup_closure(G, seed);
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    std::vector<Subgroup> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<GroupElement> select(const PermutationGroup& G, const Subgroup& s) {
    std::vector<GroupElement> out;
    out.reserve(s.size());
    for (int i : s) out.push_back(G.elements[static_cast<size_t>(i)]);
    return out;
}

// apply the automorphism with the given generator image to an element
static FieldElement apply_automorphism(const FieldElement& e, const FieldElement& gen_image) {
    const FieldPtr& N = gen_image.field();
    FieldElement acc = N->zero();
    const auto& c = e.coords();
    for (size_t i = c.size(); i > 0; --i) acc = acc * gen_image + N->from_rational(c[i - 1]);
    return acc;
}

Subgroup stabilizer_of(const PermutationGroup& G, const FieldElement& e) {
    Subgroup out;
    for (size_t i = 0; i < G.elements.size(); ++i)
        if (apply_automorphism(e, G.elements[i].gen_image) == e) out.push_back(static_cast<int>(i));
    return out;
}

// ---------------------------------------------------------------------------
// Splitting fields
// ---------------------------------------------------------------------------

namespace {

QPoly kpoly_to_qpoly(const KPoly& p) {
    std::vector<Rational> c(static_cast<size_t>(p.degree()) + 1, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) {
        FieldElement e = p.coeff(i);
        if (!e.is_rational()) throw std::logic_error("coefficient not rational");
        c[static_cast<size_t>(i)] = e.rational_value();
    }
    return QPoly(std::move(c));
}

KPoly shift_kpoly(const KPoly& p, long s) {
    const FieldPtr& K = p.field();
    KPoly x_minus_st(K, {K->generator() * Rational(-s), K->one()});
    KPoly acc(K, {});
    for (int i = p.degree(); i >= 0; --i) acc = acc * x_minus_st + KPoly(K, {p.coeff(i)});
    return acc;
}

QPoly norm_of_kpoly(const KPoly& p) {
    // Res_y(g(y), p(x, y)) by specialization and interpolation
    const FieldPtr& K = p.field();
    const QPoly& g = K->defining_polynomial();
    int out_degree = p.degree() * g.degree();
    std::vector<Rational> points, values;
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
        a = a > 0 ? -a : -a + 1;
    }
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

struct Adjunction {
    FieldPtr field;            // K' containing K and a root of q
    SubfieldEmbedding k_into;  // K -> K'
    FieldElement new_root;     // root of q inside K'
};

// K' = K(root of q) where q is an irreducible K-factor of the rational
// polynomial p; the shift s must make the norm of the shifted p squarefree.
Adjunction adjoin_root(const FieldPtr& K, const KPoly& q, const QPoly& p) {
    if (K->degree() == 1) {
        QPoly qq = kpoly_to_qpoly(q);
        FieldPtr F = NumberField::make_unchecked(qq, "adjunction");
        SubfieldEmbedding emb(K, F, F->from_rational(K->generator().rational_value()));
        return {F, emb, F->generator()};
    }
    for (long s = 1; s <= 40; ++s) {
        QPoly norm_p = norm_of_kpoly(shift_kpoly(KPoly::lift(K, p), s));
        if (!squarefree_mod_small_prime(norm_p)) continue;
        QPoly h = norm_of_kpoly(shift_kpoly(q, s));  // irreducible: minpoly of rho + s*t
        FieldPtr F = NumberField::make_unchecked(h.monic(), "adjunction");
        // t' = the unique common root of g(y) and p(u - s*y) inside F
        KPoly g_in_f = KPoly::lift(F, K->defining_polynomial());
        FieldElement u = F->generator();
        KPoly arg(F, {u, F->from_rational(Rational(-s))});  // u - s*y
        KPoly pu(F, {});
        for (int i = p.degree(); i >= 0; --i)
            pu = pu * arg + KPoly(F, {F->from_rational(p[i])});
        KPoly lin = kpoly_gcd(g_in_f, pu);
        if (lin.degree() != 1) continue;  // shift did not separate; try the next
        FieldElement t_image = -lin.monic().coeff(0);
        SubfieldEmbedding emb(K, F, t_image);
        FieldElement rho = u - t_image * Rational(s);
        return {F, emb, rho};
    }
    throw std::logic_error("adjunction shift search exhausted");
}

}  // namespace

SplittingField splitting_field(const QPoly& p, const GaloisOptions& opts) {
    if (p.degree() < 1) throw std::invalid_argument("splitting field of a constant");
    QPoly src = squarefree_part(p);
    FieldPtr K = NumberField::rationals();
    while (true) {
        auto factors = factor_over_field(KPoly::lift(K, src));
        const KPoly* pending = nullptr;
        for (const auto& [f, mult] : factors) {
            (void)mult;
            if (f.degree() > 1) {
                pending = &f;
                break;
            }
        }
        if (!pending) {
            SplittingField out;
            out.field = K;
            out.source = src;
            for (const auto& [f, mult] : factors) {
                (void)mult;
                out.roots.push_back(-f.coeff(0));
            }
            if (K->degree() == 1) {
                out.generator_conjugates = {K->generator()};
            } else if (K->defining_polynomial() == src) {
                out.generator_conjugates = out.roots;
            } else {
                out.generator_conjugates = roots_in_field(K, K->defining_polynomial());
            }
            if (static_cast<int>(out.generator_conjugates.size()) != K->degree())
                throw std::logic_error("splitting field is not normal over Q");
            return out;
        }
        Adjunction adj = adjoin_root(K, *pending, src);
        if (adj.field->degree() > opts.max_degree)
            throw degree_cap_error("splitting field degree " + std::to_string(adj.field->degree()) +
                                   " exceeds the cap " + std::to_string(opts.max_degree) +
                                   " (partial tower degree " + std::to_string(K->degree()) + ")");
        K = adj.field;
    }
}

PermutationGroup automorphism_group(const SplittingField& N, const SubfieldEmbedding& over) {
    if (!same_field(over.target, N.field))
        throw std::invalid_argument("embedding target is not the splitting field");
    std::vector<GroupElement> elements;
    for (const auto& u : N.generator_conjugates) {
        // automorphism t -> u; keep it when it fixes the embedded subfield
        if (apply_automorphism(over.image, u) != over.image) continue;
        Perm perm;
        perm.map.reserve(N.roots.size());
        for (const auto& r : N.roots) {
            FieldElement image = apply_automorphism(r, u);
            auto it = std::find(N.roots.begin(), N.roots.end(), image);
            if (it == N.roots.end()) throw std::logic_error("automorphism does not permute the roots");
            perm.map.push_back(static_cast<int>(it - N.roots.begin()));
        }
        elements.push_back({std::move(perm), u});
    }
    PermutationGroup g = build_group(static_cast<int>(N.roots.size()), std::move(elements));
    if (g.order() * static_cast<size_t>(over.source->degree()) !=
        static_cast<size_t>(N.field->degree()))
        throw std::logic_error("automorphism count does not match the field degree");
    return g;
}

PermutationGroup automorphism_group_over_q(const SplittingField& N) {
    return automorphism_group(N, SubfieldEmbedding(NumberField::rationals(), N.field,
                                                   N.field->from_rational(Rational(0))));
}

GroupElement complex_conjugation(const SplittingField& N, size_t embedding_index) {
    PermutationGroup G = automorphism_group_over_q(N);
    auto [r1, r2] = signature(N.field);
    (void)r1;
    if (r2 == 0) return G.elements[0];  // totally real: conjugation is trivial

    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
        EmbeddingSet es = embeddings_of(N.field, dyadic(-static_cast<long>(bits)));
        if (embedding_index >= es.boxes.size())
            throw std::invalid_argument("embedding index out of range");
        const QBox& base = es.boxes[embedding_index];
        QBox conj_box = es.boxes[static_cast<size_t>(es.conjugation[embedding_index])];
        std::vector<size_t> hits;
        for (size_t i = 0; i < G.elements.size(); ++i) {
            QBox image = interval_eval_element(G.elements[i].gen_image, base);
            if (!image.disjoint(conj_box)) hits.push_back(i);
        }
        if (hits.size() == 1) return G.elements[hits[0]];
    }
    throw std::runtime_error("complex conjugation could not be separated at the precision cap");
}

std::pair<FieldPtr, SubfieldEmbedding> fixed_field(const SplittingField& N,
                                                   const std::vector<GroupElement>& subgroup) {
    const FieldPtr& F = N.field;
    const int n = F->degree();
    if (subgroup.empty()) throw std::invalid_argument("fixed_field of an empty set");

    // fixed subspace: intersection of ker(A_sigma - I)
    Matrix<Rational> stacked(subgroup.size() * static_cast<size_t>(n), static_cast<size_t>(n),
                             Rational(0));
    for (size_t s = 0; s < subgroup.size(); ++s) {
        FieldElement power = F->one();
        for (int j = 0; j < n; ++j) {
            FieldElement image = apply_automorphism(power, subgroup[s].gen_image);
            for (int i = 0; i < n; ++i) {
                Rational v = image.coords()[static_cast<size_t>(i)] -
                             power.coords()[static_cast<size_t>(i)];
                stacked.at(s * static_cast<size_t>(n) + static_cast<size_t>(i),
                           static_cast<size_t>(j)) = v;
            }
            if (j + 1 < n) power = power * F->generator();
        }
    }
    auto basis_vectors = nullspace(stacked, Rational(0), Rational(1));
    size_t dim = basis_vectors.size();
    std::vector<FieldElement> basis;
    basis.reserve(dim);
    for (auto& v : basis_vectors) basis.push_back(F->element(std::move(v)));

    // primitive element: the orbit sum of the generator first, then
    // deterministic combinations of the fixed-space basis
    std::vector<FieldElement> candidates;
    {
        FieldElement orbit_sum = F->zero();
        for (const auto& g : subgroup) orbit_sum = orbit_sum + g.gen_image;
        candidates.push_back(orbit_sum);
    }
    for (long c = 1; c <= 500; ++c) {
        FieldElement u = F->zero();
        Rational w(1);
        for (const auto& b : basis) {
            u = u + b * w;
            w *= c;
        }
        candidates.push_back(u);
    }
    for (const auto& u : candidates) {
        QPoly mp = element_minimal_polynomial(u);
        if (static_cast<size_t>(mp.degree()) != dim) continue;
        FieldPtr sub = NumberField::make_unchecked(mp, "fixed field");
        return {sub, SubfieldEmbedding(sub, F, u)};
    }
    throw std::logic_error("no primitive element found for the fixed field");
}

}  // namespace hyperdense
