#include "hyperdense/arrangement.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hyperdense/linalg.hpp"

namespace hyperdense {

namespace {

std::string coeffs_to_string(const std::vector<FieldElement>& coeffs) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ", ";
        os << coeffs[i].to_string();
    }
    os << ")";
    return os.str();
}

std::vector<FieldElement> normalize_projective(std::vector<FieldElement> coeffs) {
    for (const auto& c : coeffs) {
        if (!c.is_zero()) {
            FieldElement inv = c.inverse();
            for (auto& x : coeffs) x = x * inv;
            return coeffs;
        }
    }
    throw std::invalid_argument("hyperplane with all coefficients zero");
}

FieldElement apply_gen_image(const FieldElement& e, const FieldElement& gen_image) {
    const FieldPtr& N = gen_image.field();
    FieldElement acc = N->zero();
    const auto& c = e.coords();
    for (size_t i = c.size(); i > 0; --i) acc = acc * gen_image + N->from_rational(c[i - 1]);
    return acc;
}

std::vector<FieldElement> apply_to_hyperplane(const std::vector<FieldElement>& coeffs,
                                              const FieldElement& gen_image) {
    std::vector<FieldElement> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(apply_gen_image(c, gen_image));
    return normalize_projective(std::move(out));
}

int find_hyperplane(const std::vector<Hyperplane>& hs, const std::vector<FieldElement>& coeffs) {
    for (size_t i = 0; i < hs.size(); ++i)
        if (hs[i].coeffs == coeffs) return static_cast<int>(i);
    return -1;
}

// deterministic comparison of coefficient vectors
bool coeffs_less(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (!(a[i] == b[i])) return a[i].coords() < b[i].coords();
    }
    return a.size() < b.size();
}

// embeddings of the entry field into W compatible with the chosen k -> W
std::vector<FieldElement> compatible_roots(const SplittingField& W, const QPoly& entry_poly,
                                           const std::optional<std::vector<Rational>>& k_coords,
                                           const FieldElement& k_image_in_w, int k_degree) {
    std::vector<FieldElement> all;
    for (const auto& r : W.roots) {
        FieldElement value = W.field->zero();
        for (int i = entry_poly.degree(); i >= 0; --i)
            value = value * r + W.field->from_rational(entry_poly[i]);
        if (value.is_zero()) all.push_back(r);
    }
    // dedupe (roots list of the product polynomial has no duplicates, but be safe)
    if (static_cast<int>(all.size()) != entry_poly.degree())
        throw std::logic_error("working field does not split a coefficient field");
    if (k_degree == 1) return all;
    if (!k_coords) throw parse_error("a k_embedding is required when the base field is not Q");
    std::vector<FieldElement> good;
    for (const auto& r : all) {
        // evaluate the k-generator coordinates at r and compare with k's image
        FieldElement acc = W.field->zero();
        for (size_t i = k_coords->size(); i > 0; --i)
            acc = acc * r + W.field->from_rational((*k_coords)[i - 1]);
        if (acc == k_image_in_w) good.push_back(r);
    }
    if (good.empty()) throw parse_error("k_embedding is inconsistent with the base field");
    return good;
}

}  // namespace

Arrangement build_arrangement(const ArrangementSpec& spec, const GaloisOptions& opts) {
    if (spec.ambient_dim < 1) throw parse_error("ambient dimension must be at least 1");
    Arrangement a;
    a.base_field = make_field(spec.base_field_poly);
    a.ambient_dim = spec.ambient_dim;
    const int ncoords = spec.ambient_dim + 1;

    // working field: splitting field of the product of all defining polynomials
    QPoly product = spec.base_field_poly;
    for (const auto& entry : spec.entries) {
        const QPoly& f = std::holds_alternative<HyperplaneSpec>(entry)
                             ? std::get<HyperplaneSpec>(entry).field_poly
                             : std::get<NormComponentSpec>(entry).field_poly;
        product = product * f;
    }
    a.working = splitting_field(product, opts);
    const FieldPtr& W = a.working.field;

    // k -> W: first root of the base polynomial in canonical order
    {
        auto roots = compatible_roots(a.working, spec.base_field_poly, std::nullopt,
                                      W->zero(), 1);
        a.k_into_w = SubfieldEmbedding(a.base_field, W, roots.at(0));
    }

    int block_cursor = 0;
    for (const auto& entry : spec.entries) {
        if (std::holds_alternative<HyperplaneSpec>(entry)) {
            const auto& h = std::get<HyperplaneSpec>(entry);
            if (static_cast<int>(h.coeffs.size()) != ncoords)
                throw parse_error("explicit hyperplane needs exactly n+1 coefficients");
            FieldPtr Mf = make_field(h.field_poly);
            auto roots = compatible_roots(a.working, h.field_poly, h.k_embedding,
                                          a.k_into_w.image, a.base_field->degree());
            SubfieldEmbedding into_w(Mf, W, roots.at(0));
            std::vector<FieldElement> coeffs;
            for (const auto& c : h.coeffs) {
                if (static_cast<int>(c.size()) != Mf->degree())
                    throw parse_error("coefficient coordinate count != field degree");
                coeffs.push_back(into_w.map(Mf->element(c)));
            }
            a.hyperplanes.push_back({normalize_projective(std::move(coeffs))});
        } else {
            const auto& ncomp = std::get<NormComponentSpec>(entry);
            FieldPtr Mf = make_field(ncomp.field_poly);
            if (Mf->degree() % a.base_field->degree() != 0)
                throw parse_error("component field degree is not a multiple of the base degree");
            int d = Mf->degree() / a.base_field->degree();
            if (static_cast<int>(ncomp.basis.size()) != d)
                throw parse_error("norm component basis size must be [M : k]");
            if (block_cursor + d > ncoords)
                throw parse_error("norm component blocks exceed the ambient dimension");
            auto roots = compatible_roots(a.working, ncomp.field_poly, ncomp.k_embedding,
                                          a.k_into_w.image, a.base_field->degree());
            if (static_cast<int>(roots.size()) != d)
                throw std::logic_error("embedding count over k does not match the degree");
            for (const auto& r : roots) {
                SubfieldEmbedding into_w(Mf, W, r);
                std::vector<FieldElement> coeffs(static_cast<size_t>(ncoords), W->zero());
                for (int j = 0; j < d; ++j) {
                    if (static_cast<int>(ncomp.basis[static_cast<size_t>(j)].size()) != Mf->degree())
                        throw parse_error("basis coordinate count != field degree");
                    coeffs[static_cast<size_t>(block_cursor + j)] =
                        into_w.map(Mf->element(ncomp.basis[static_cast<size_t>(j)]));
                }
                a.hyperplanes.push_back({normalize_projective(std::move(coeffs))});
            }
            a.norm_blocks.push_back({block_cursor, d});
            a.norm_block_bases.push_back(ncomp.basis);
            block_cursor += d;
        }
    }
    if (a.hyperplanes.empty()) throw parse_error("arrangement has no hyperplanes");

    // pairwise distinct as projective forms
    for (size_t i = 0; i < a.hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < a.hyperplanes.size(); ++j)
            if (a.hyperplanes[i].coeffs == a.hyperplanes[j].coeffs)
                throw parse_error("hyperplanes are not pairwise distinct");

    // Galois stability over k
    a.gal_over_k = automorphism_group(a.working, a.k_into_w);
    for (const auto& g : a.gal_over_k.elements) {
        for (const auto& h : a.hyperplanes) {
            auto image = apply_to_hyperplane(h.coeffs, g.gen_image);
            if (find_hyperplane(a.hyperplanes, image) < 0)
                throw not_defined_over_k_error("arrangement is not defined over k: missing conjugate " +
                                               coeffs_to_string(image));
        }
    }
    return a;
}

size_t linear_rank(const Arrangement& a) {
    const FieldPtr& W = a.working.field;
    size_t m = a.hyperplanes.size();
    size_t cols = static_cast<size_t>(a.ambient_dim) + 1;
    Matrix<FieldElement> mat(m, cols, W->zero());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < cols; ++j) mat.at(i, j) = a.hyperplanes[i].coeffs[j];
    return matrix_rank(std::move(mat));
}

std::tuple<FieldPtr, SubfieldEmbedding, SubfieldEmbedding> minimal_definition_field(
    const Arrangement& a, size_t hyperplane_index) {
    const FieldPtr& W = a.working.field;
    // iterated primitive element over k: start from k's image, absorb each
    // coefficient; u generates the field iff every ingredient lies in Q(u)
    FieldElement u = a.k_into_w.image;
    std::vector<FieldElement> need = {a.k_into_w.image};
    for (const auto& c : a.hyperplanes[hyperplane_index].coeffs) need.push_back(c);

    for (const auto& c : a.hyperplanes[hyperplane_index].coeffs) {
        bool combined = false;
        for (long t = 0; t <= 200 && !combined; ++t) {
            FieldElement cand = u + c * Rational(t);
            int d = element_minimal_polynomial(cand).degree();
            if (express_in_powers(cand, u, d) && express_in_powers(cand, c, d)) {
                u = cand;
                combined = true;
            }
        }
        if (!combined) throw std::logic_error("primitive element sweep exhausted");
    }
    QPoly mp = element_minimal_polynomial(u);
    FieldPtr M = NumberField::make_unchecked(mp, "minimal definition field");
    SubfieldEmbedding m_into_w(M, W, u);
    auto k_coords = express_in_powers(u, a.k_into_w.image, mp.degree());
    if (!k_coords) throw std::logic_error("k does not lie in the definition field");
    k_coords->resize(static_cast<size_t>(mp.degree()), Rational(0));
    SubfieldEmbedding k_into_m(a.base_field, M, M->element(*k_coords));
    return {M, k_into_m, m_into_w};
}

std::vector<Component> components_over_k(const Arrangement& a) {
    size_t m = a.hyperplanes.size();
    std::vector<int> orbit_of(m, -1);
    std::vector<Component> out;
    for (size_t i = 0; i < m; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::set<size_t> orbit;
        for (const auto& g : a.gal_over_k.elements) {
            auto image = apply_to_hyperplane(a.hyperplanes[i].coeffs, g.gen_image);
            int idx = find_hyperplane(a.hyperplanes, image);
            if (idx < 0) throw std::logic_error("orbit fell outside the arrangement");
            orbit.insert(static_cast<size_t>(idx));
        }
        Component c;
        c.representative = *orbit.begin();
        c.orbit.assign(orbit.begin(), orbit.end());
        for (size_t j : c.orbit) orbit_of[j] = static_cast<int>(out.size());
        auto [M, k_into_m, m_into_w] = minimal_definition_field(a, c.representative);
        c.definition_field = M;
        c.k_into_m = k_into_m;
        c.m_into_w = m_into_w;
        c.degree = M->degree() / a.base_field->degree();
        if (static_cast<size_t>(c.degree) != c.orbit.size())
            throw std::logic_error("orbit size does not match the definition field degree");
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [&](const Component& x, const Component& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return coeffs_less(a.hyperplanes[x.representative].coeffs,
                           a.hyperplanes[y.representative].coeffs);
    });
    return out;
}

MPoly<FieldElement> component_norm_form(const Arrangement& a, const Component& c) {
    const FieldPtr& W = a.working.field;
    size_t nvars = static_cast<size_t>(a.ambient_dim) + 1;
    MPoly<FieldElement> prod = MPoly<FieldElement>::constant(nvars, W->one());
    for (size_t idx : c.orbit) {
        MPoly<FieldElement> lin(nvars);
        for (size_t j = 0; j < nvars; ++j) {
            const FieldElement& coeff = a.hyperplanes[idx].coeffs[j];
            if (coeff.is_zero()) continue;
            Monomial mo{std::vector<uint32_t>(nvars, 0)};
            mo.exps[j] = 1;
            lin.add_term(mo, coeff);
        }
        prod = prod * lin;
    }
    // descend coefficients to k
    MPoly<FieldElement> out(nvars);
    const FieldPtr& k = a.base_field;
    for (const auto& [mono, coeff] : prod.terms()) {
        auto coords = express_in_powers(a.k_into_w.image, coeff, k->degree());
        if (!coords) throw std::logic_error("norm form coefficient is not k-rational");
        coords->resize(static_cast<size_t>(k->degree()), Rational(0));
        out.add_term(mono, k->element(*coords));
    }
    return out;
}

std::vector<FieldElement> component_coefficients_in_m(const Arrangement& a, const Component& c) {
    std::vector<FieldElement> out;
    const FieldPtr& M = c.definition_field;
    for (const auto& coeff : a.hyperplanes[c.representative].coeffs) {
        auto coords = express_in_powers(c.m_into_w.image, coeff, M->degree());
        if (!coords) throw std::logic_error("coefficient does not lie in the definition field");
        coords->resize(static_cast<size_t>(M->degree()), Rational(0));
        out.push_back(M->element(*coords));
    }
    return out;
}

}  // namespace hyperdense
