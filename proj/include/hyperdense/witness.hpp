#ifndef HYPERDENSE_WITNESS_HPP
#define HYPERDENSE_WITNESS_HPP

#include <optional>
#include <vector>

#include "hyperdense/arrangement.hpp"
#include "hyperdense/cmfields.hpp"
#include "hyperdense/galois.hpp"
#include "hyperdense/mpoly.hpp"

namespace hyperdense {

/// The group of roots of unity of M: its order and a generator.
std::pair<unsigned long, FieldElement> torsion_units(const FieldPtr& M);

/// User-supplied multiplicative generators, each verified to be a unit (norm
/// +-1), or an S-unit when primes are supplied (norm divisible only by them);
/// torsion is computed, never supplied.
struct UnitSupply {
    FieldPtr field;
    std::vector<FieldElement> generators;
    unsigned long torsion_order = 2;
    FieldElement torsion_generator;
};

UnitSupply make_unit_supply(const FieldPtr& M, std::vector<FieldElement> generators,
                            const std::vector<unsigned long>& s_primes = {});

/// Projectively deduplicated points of P^ambient_dim with coordinates in k,
/// first nonzero coordinate scaled to one, in first-seen enumeration order.
struct ProjectivePointSet {
    FieldPtr base_field;
    int ambient_dim = 0;
    std::vector<std::vector<FieldElement>> points;
};

/// All values t * prod g_i^{e_i} (torsion power t, |e_i| <= exponent_bound)
/// written in the given k-basis of M; enumeration is lexicographic in
/// (torsion power, e_1, ..., e_g).
ProjectivePointSet unit_points(const UnitSupply& supply, const SubfieldEmbedding& k_in_m,
                               const std::vector<FieldElement>& basis, long exponent_bound);

/// Veronese probe: exact rank of the degree-d monomial evaluation matrix.
struct DegreeReport {
    int degree = 0;
    Integer monomial_count;
    size_t rank = 0;
    bool insufficient_points = false;  // fewer points than monomials: no claim
    std::vector<MPoly<FieldElement>> vanishing_forms;
};

struct DensityReport {
    std::vector<DegreeReport> per_degree;
};

DensityReport empirical_density(const ProjectivePointSet& pts, int max_degree);

/// Exact check of prod sigma_i(x)^{a_i} = prod sigma_i(x)^{b_i} inside the
/// splitting field; the embeddings are given by the images of M's generator.
bool verify_multiplicative_identity(const SplittingField& Mtilde,
                                    const std::vector<FieldElement>& embedding_images,
                                    const FieldElement& x, const std::vector<unsigned long>& a,
                                    const std::vector<unsigned long>& b);

/// The coordinate forms of [N^M_L(sum x_i alpha_i)]^(2 w_L) along the
/// imaginary part of the L-basis; each vanishes on the points of unit_points
/// and is a nonzero polynomial. basis_l must list the real elements first.
std::vector<MPoly<FieldElement>> cm_vanishing_forms(const SubfieldEmbedding& k_in_m,
                                                    const CmReport& tower,
                                                    const std::vector<FieldElement>& basis_m,
                                                    const std::vector<FieldElement>& basis_l);

/// S-integrality probe over k = Q: evaluates every degree-m monomial divided
/// by the product of the component norm forms on the point set and checks
/// that the denominators stabilize (the second half of the set introduces no
/// new denominator). Throws when a point lies on the arrangement.
bool verify_integrality(const Arrangement& a, const ProjectivePointSet& pts);

/// Witness points for a full norm-form arrangement: per-block unit values,
/// remaining coordinates over the integer box [-extra_box, extra_box].
ProjectivePointSet assemble_witness_points(const Arrangement& a,
                                           const std::vector<UnitSupply>& supplies,
                                           long exponent_bound, long extra_box);

}  // namespace hyperdense

#endif
