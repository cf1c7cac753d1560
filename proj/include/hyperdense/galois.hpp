#ifndef HYPERDENSE_GALOIS_HPP
#define HYPERDENSE_GALOIS_HPP

#include <vector>

#include "hyperdense/embeddings.hpp"
#include "hyperdense/numberfield.hpp"

namespace hyperdense {

/// Permutation of root indices, one-line notation.
struct Perm {
    std::vector<int> map;

    static Perm identity(int n) {
        Perm p;
        p.map.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p.map[static_cast<size_t>(i)] = i;
        return p;
    }
    int operator()(int i) const { return map[static_cast<size_t>(i)]; }
    bool operator==(const Perm& o) const { return map == o.map; }
    bool operator<(const Perm& o) const { return map < o.map; }
    bool is_identity() const {
        for (size_t i = 0; i < map.size(); ++i)
            if (map[i] != static_cast<int>(i)) return false;
        return true;
    }
};

/// (a * b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
int perm_order(const Perm& p);

/// Field automorphism of a splitting field, carried both as the permutation
/// of the listed roots and as the image of the field generator.
struct GroupElement {
    Perm perm;
    FieldElement gen_image;
};

/// Materialized automorphism group acting on root indices. elements[0] is the
/// identity; the order of elements is deterministic (lexicographic on perms).
struct PermutationGroup {
    int degree = 0;
    std::vector<GroupElement> elements;
    std::vector<std::vector<int>> mult;  // mult[i][j] = index of elements[i] o elements[j]
    std::vector<int> inv;

    size_t order() const { return elements.size(); }
    int index_of(const Perm& p) const;  // -1 when absent
    bool is_abelian() const;
    bool is_cyclic() const;
};

PermutationGroup build_group(int degree, std::vector<GroupElement> elements);

/// Sorted element-index sets; always closed under the group operations.
using Subgroup = std::vector<int>;

Subgroup subgroup_closure(const PermutationGroup& G, std::vector<int> seed);

/// All subgroups S with H <= S <= G, deterministic order (by order, then
/// lexicographic on index sets).
std::vector<Subgroup> subgroups_between(const PermutationGroup& G, const Subgroup& H);

struct GaloisOptions {
    int max_degree = 24;  // cap on the splitting field degree over Q
};

/// Splitting field over Q of (the squarefree part of) p, with every root
/// expressed exactly and the conjugates of the field generator materialized.
struct SplittingField {
    FieldPtr field;
    std::vector<FieldElement> roots;
    QPoly source;                                    // squarefree monic form
    std::vector<FieldElement> generator_conjugates;  // roots of the defining polynomial in N
};

SplittingField splitting_field(const QPoly& p, const GaloisOptions& opts = {});

/// Automorphisms fixing the embedded subfield pointwise, as permutations of
/// N.roots. `over.target` must be N.field.
PermutationGroup automorphism_group(const SplittingField& N, const SubfieldEmbedding& over);
PermutationGroup automorphism_group_over_q(const SplittingField& N);

/// The automorphism matching complex conjugation under the embedding given by
/// the box with the given index in canonical order (default: the first).
GroupElement complex_conjugation(const SplittingField& N, size_t embedding_index = 0);

/// Fixed field of a set of automorphisms (closed or not; the fixed space of
/// the generated subgroup is what is computed), with its embedding into N.
std::pair<FieldPtr, SubfieldEmbedding> fixed_field(const SplittingField& N,
                                                   const std::vector<GroupElement>& subgroup);

/// Convenience: elements of G selected by a subgroup index set.
std::vector<GroupElement> select(const PermutationGroup& G, const Subgroup& s);

/// Index set of the elements of G fixing the given element of N pointwise.
Subgroup stabilizer_of(const PermutationGroup& G, const FieldElement& e);

}  // namespace hyperdense

#endif
