#ifndef HYPERDENSE_CMFIELDS_HPP
#define HYPERDENSE_CMFIELDS_HPP

#include <optional>
#include <string>

#include "hyperdense/galois.hpp"
#include "hyperdense/numberfield.hpp"

namespace hyperdense {

/// Result of the "contains a CM subfield over k" decision. When contains is
/// true, L is the maximal CM subfield of M over k, L' its maximal real
/// subfield, and the embedding chain k -> L' -> L -> M is materialized.
struct CmReport {
    bool contains = false;
    std::string method;  // "group" or "enumeration"
    std::optional<FieldPtr> cm_field;                 // L
    std::optional<SubfieldEmbedding> cm_into_m;       // L -> M
    std::optional<FieldPtr> real_subfield;            // L'
    std::optional<SubfieldEmbedding> real_into_cm;    // L' -> L
    std::optional<SubfieldEmbedding> k_into_real;     // k -> L'
};

struct CmOptions {
    int max_closure_degree = 24;
};

/// If K is a CM field (totally imaginary, quadratic over a totally real
/// subfield), returns that unique real subfield with its embedding into K.
std::optional<std::pair<FieldPtr, SubfieldEmbedding>> is_cm_field(const FieldPtr& K,
                                                                  const CmOptions& opts = {});

/// Subfield-enumeration algorithm: walk all subfields of M through the
/// subgroup lattice of the Galois closure, filter the CM ones whose real
/// subfield contains k, return the maximal one.
CmReport contains_cm_subfield_over(const SubfieldEmbedding& k_in_m, const CmOptions& opts = {});

/// Group-theoretic algorithm: build N = <tau g^-1 tau g>, N' = <tau> N inside
/// the closure group, and read L, L' off as the fixed fields of NH and N'H.
CmReport maximal_cm_subfield_via_group(const SubfieldEmbedding& k_in_m, const CmOptions& opts = {});

/// Recompute every invariant claimed by a positive report (signatures by
/// Sturm, index two, embedding chain); throws logic_error on violation.
void verify_cm_report(const CmReport& report, const SubfieldEmbedding& k_in_m);

}  // namespace hyperdense

#endif
