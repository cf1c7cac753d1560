#ifndef HYPERDENSE_ARRANGEMENT_HPP
#define HYPERDENSE_ARRANGEMENT_HPP

#include <optional>
#include <variant>
#include <vector>

#include "hyperdense/cmfields.hpp"
#include "hyperdense/galois.hpp"
#include "hyperdense/mpoly.hpp"
#include "hyperdense/numberfield.hpp"

namespace hyperdense {

/// One hyperplane, its coefficients living in the arrangement's working field,
/// normalized so the first nonzero coefficient is one.
struct Hyperplane {
    std::vector<FieldElement> coeffs;
};

/// A k-irreducible component: a full Galois orbit of hyperplanes together with
/// the minimal field of definition of its representative.
struct Component {
    size_t representative = 0;
    std::vector<size_t> orbit;
    FieldPtr definition_field;      // M_i
    SubfieldEmbedding k_into_m;     // k -> M_i
    SubfieldEmbedding m_into_w;     // M_i -> W
    int degree = 0;                 // d_i = [M_i : k] = orbit size
};

/// Explicit hyperplane: n+1 coefficient vectors over a named coefficient field.
struct HyperplaneSpec {
    QPoly field_poly;
    std::optional<std::vector<Rational>> k_embedding;
    std::vector<std::vector<Rational>> coeffs;
};

/// Norm-form shorthand: a field plus a k-basis; expands to the full conjugate
/// orbit of the hyperplane sum(x_j basis_j) over a consecutive variable block.
struct NormComponentSpec {
    QPoly field_poly;
    std::optional<std::vector<Rational>> k_embedding;
    std::vector<std::vector<Rational>> basis;
};

struct ArrangementSpec {
    QPoly base_field_poly = QPoly::x();
    int ambient_dim = 1;
    std::vector<std::variant<HyperplaneSpec, NormComponentSpec>> entries;
};

/// A union of hyperplanes in P^n over k, all coefficients embedded into one
/// working splitting field W, verified stable under Gal(W/k).
struct Arrangement {
    FieldPtr base_field;       // k
    int ambient_dim = 0;       // n
    SplittingField working;    // W
    SubfieldEmbedding k_into_w;
    PermutationGroup gal_over_k;  // Gal(W/k)
    std::vector<Hyperplane> hyperplanes;

    /// For norm-component entries, remembers (first variable, block size) so
    /// that witnesses can reuse the block structure; explicit entries are not
    /// recorded here.
    std::vector<std::pair<int, int>> norm_blocks;
    std::vector<std::vector<std::vector<Rational>>> norm_block_bases;  // per block: basis coords
};

Arrangement build_arrangement(const ArrangementSpec& spec, const GaloisOptions& opts = {});

/// Galois orbits over k with minimal definition fields, ordered by
/// (degree, representative coefficient sequence).
std::vector<Component> components_over_k(const Arrangement& a);

/// Rank over W of the m x (n+1) coefficient matrix.
size_t linear_rank(const Arrangement& a);

/// Minimal field of definition of one hyperplane: the field generated over k
/// by its normalized coefficients.
std::tuple<FieldPtr, SubfieldEmbedding, SubfieldEmbedding> minimal_definition_field(
    const Arrangement& a, size_t hyperplane_index);

/// The degree-d_i form over k cutting out one component: the product of the
/// conjugate linear forms, with every coefficient expressed in k (exactness of
/// the descent is verified; failure throws).
MPoly<FieldElement> component_norm_form(const Arrangement& a, const Component& c);

/// The representative's coefficients expressed inside its minimal field.
std::vector<FieldElement> component_coefficients_in_m(const Arrangement& a, const Component& c);

}  // namespace hyperdense

#endif
