#ifndef HYPERDENSE_DENSITY_HPP
#define HYPERDENSE_DENSITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperdense/arrangement.hpp"
#include "hyperdense/cmfields.hpp"
#include "hyperdense/embeddings.hpp"

namespace hyperdense {

enum class Status { dense, not_dense, unknown };

enum class Condition {
    A,
    B,
    C,
    none,
    s4_split_complete,
    s4_no_split,
    s4_linear_algebra,
    insufficient_data,
};

std::string to_string(Status s);
std::string to_string(Condition c);

/// Finite places of k on top of the always-included archimedean ones. Only
/// k = Q is supported for the splitting tests; the selector field reserved by
/// the file format for k != Q is accepted but unused.
struct PlaceSpec {
    std::vector<unsigned long> finite_primes;
};

/// Splitting pattern of a rational prime in a field, from the factorization
/// of the defining polynomial mod p. `flagged` marks patterns that are not
/// certified because p divides the polynomial discriminant and the index test
/// fails; callers must not conclude anything from a flagged record.
struct SplitRecord {
    unsigned long p = 0;
    bool flagged = false;
    std::vector<std::pair<int, int>> factors;  // (residue degree, ramification index)

    int num_places() const { return static_cast<int>(factors.size()); }
    bool splits_completely(int field_degree) const;
    int degree_sum() const;
};

SplitRecord prime_splitting(unsigned long p, const FieldPtr& K);

/// Valuation data for generators of the S-unit group of L modulo units:
/// valuations[g][e][w] = valuation at the w-th place of S_L of the image of
/// generator g under the e-th embedding of L (embeddings in the canonical
/// EmbeddingSet order of L).
struct UnitActionData {
    std::vector<std::vector<std::vector<long>>> valuations;
};

/// A nonzero exponent vector certifying the multiplicative identity, with the
/// equivalent nonnegative two-sided presentation over all embeddings.
struct IdentityWitness {
    std::vector<Integer> vector;           // length l, primitive, first nonzero positive
    std::vector<Integer> lhs_exponents;    // length 2l, nonnegative
    std::vector<Integer> rhs_exponents;    // length 2l, nonnegative
};

std::optional<IdentityWitness> solve_identity_linear_algebra(const EmbeddingSet& l_embeddings,
                                                             const UnitActionData& data);

/// Outcome of the general-S analysis of one CM component.
struct S4Record {
    size_t component_index = 0;
    QPoly cm_minpoly;        // L
    QPoly real_minpoly;      // L'
    bool cm_over_k_galois = true;
    std::vector<SplitRecord> splits_in_cm;    // per finite prime, in L
    std::vector<SplitRecord> splits_in_real;  // per finite prime, in L'
    Condition outcome = Condition::insufficient_data;
    std::optional<unsigned long> split_complete_prime;
    std::optional<IdentityWitness> identity;
    bool assumed_complete_generators = false;
};

struct Verdict {
    Status status = Status::unknown;
    Condition condition = Condition::insufficient_data;
    std::vector<Condition> conditions_triggered;
    std::vector<Component> components;
    /// condition A: coefficients of a vanishing linear combination, over W
    std::optional<std::vector<FieldElement>> dependence;
    /// CM analysis per component (condition C and the general-S reduction)
    std::vector<std::pair<size_t, CmReport>> cm_reports;
    std::vector<S4Record> s4_records;
};

struct DecisionOptions {
    CmOptions cm;
};

/// Theorem-of-record decision for S consisting of the archimedean places.
Verdict decide_s_infinity(const Arrangement& a, const DecisionOptions& opts = {});

/// Partial decision for general S: dependence carries over, the unit-group
/// condition is impossible with finite places, and CM components are settled
/// by the splitting tests, by user-supplied S-unit valuation data, or not at
/// all (unknown).
Verdict decide_general_s(const Arrangement& a, const PlaceSpec& s,
                         const std::optional<UnitActionData>& data = std::nullopt,
                         const DecisionOptions& opts = {});

}  // namespace hyperdense

#endif
