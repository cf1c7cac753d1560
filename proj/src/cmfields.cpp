#include "hyperdense/cmfields.hpp"

#include <algorithm>

namespace hyperdense {

namespace {

struct Closure {
    SplittingField N;            // Galois closure of M over Q
    PermutationGroup G;          // Gal(N/Q)
    SubfieldEmbedding m_into_n;  // M -> N via the first listed root
    FieldElement k_image;        // image of k's generator inside N
    Subgroup H;                  // Gal(N/M)
    Subgroup Gk;                 // Gal(N/k)
    int tau;                     // index of complex conjugation
};

Closure build_closure(const SubfieldEmbedding& k_in_m, const CmOptions& opts) {
    GaloisOptions gopts;
    gopts.max_degree = opts.max_closure_degree;
    Closure c{splitting_field(k_in_m.target->defining_polynomial(), gopts),
              {},
              {},
              {},
              {},
              {},
              -1};
    c.G = automorphism_group_over_q(c.N);
    c.m_into_n = SubfieldEmbedding(k_in_m.target, c.N.field, c.N.roots.at(0));
    c.k_image = c.m_into_n.map(k_in_m.image);
    c.H = stabilizer_of(c.G, c.m_into_n.image);
    c.Gk = stabilizer_of(c.G, c.k_image);
    c.tau = c.G.index_of(complex_conjugation(c.N).perm);
    if (c.tau < 0) throw std::logic_error("conjugation not found in the closure group");
    return c;
}

bool subgroup_contains(const Subgroup& s, int g) {
    return std::binary_search(s.begin(), s.end(), g);
}

bool subgroup_subset(const Subgroup& a, const Subgroup& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// embeddings of the fixed field of S are the cosets gS; the one from g is
// real iff g^-1 tau g lies in S
bool fixed_field_totally_real(const Closure& c, const Subgroup& s) {
    for (int g = 0; g < static_cast<int>(c.G.order()); ++g) {
        int conj = c.G.mult[static_cast<size_t>(c.G.inv[static_cast<size_t>(g)])]
                         [static_cast<size_t>(c.G.mult[static_cast<size_t>(c.tau)][static_cast<size_t>(g)])];
        if (!subgroup_contains(s, conj)) return false;
    }
    return true;
}

bool fixed_field_totally_imaginary(const Closure& c, const Subgroup& s) {
    for (int g = 0; g < static_cast<int>(c.G.order()); ++g) {
        int conj = c.G.mult[static_cast<size_t>(c.G.inv[static_cast<size_t>(g)])]
                         [static_cast<size_t>(c.G.mult[static_cast<size_t>(c.tau)][static_cast<size_t>(g)])];
        if (subgroup_contains(s, conj)) return false;
    }
    return true;
}

// assemble the L, L' report from their subgroups
CmReport assemble_report(const Closure& c, const SubfieldEmbedding& k_in_m, const Subgroup& s_l,
                         const Subgroup& s_lprime, std::string method) {
    CmReport rep;
    rep.contains = true;
    rep.method = std::move(method);

    auto [L, l_into_n] = fixed_field(c.N, select(c.G, s_l));
    auto [Lp, lp_into_n] = fixed_field(c.N, select(c.G, s_lprime));

    // L -> M: express L's generator image inside M
    auto in_m = express_in_powers(c.m_into_n.image, l_into_n.image, k_in_m.target->degree());
    if (!in_m) throw std::logic_error("CM subfield does not lie in M");
    in_m->resize(static_cast<size_t>(k_in_m.target->degree()), Rational(0));
    rep.cm_field = L;
    rep.cm_into_m = SubfieldEmbedding(L, k_in_m.target, k_in_m.target->element(*in_m));

    // L' -> L
    auto in_l = express_in_powers(l_into_n.image, lp_into_n.image, L->degree());
    if (!in_l) throw std::logic_error("real subfield does not lie in L");
    in_l->resize(static_cast<size_t>(L->degree()), Rational(0));
    rep.real_subfield = Lp;
    rep.real_into_cm = SubfieldEmbedding(Lp, L, L->element(*in_l));

    // k -> L'
    auto in_lp = express_in_powers(lp_into_n.image, c.k_image, Lp->degree());
    if (!in_lp) throw std::logic_error("k does not lie in the real subfield");
    in_lp->resize(static_cast<size_t>(Lp->degree()), Rational(0));
    rep.k_into_real = SubfieldEmbedding(k_in_m.source, Lp, Lp->element(*in_lp));
    return rep;
}

}  // namespace

std::optional<std::pair<FieldPtr, SubfieldEmbedding>> is_cm_field(const FieldPtr& K,
                                                                  const CmOptions& opts) {
    if (!is_totally_imaginary(K)) return std::nullopt;
    SubfieldEmbedding q_in_k(NumberField::rationals(), K, K->from_rational(Rational(0)));
    Closure c = build_closure(q_in_k, opts);
    // candidates: S0 with H <= S0, [S0 : H] = 2, fixed field totally real
    std::vector<Subgroup> found;
    for (const auto& s0 : subgroups_between(c.G, c.H)) {
        if (s0.size() != 2 * c.H.size()) continue;
        if (!subgroup_subset(c.H, s0)) continue;
        if (fixed_field_totally_real(c, s0)) found.push_back(s0);
    }
    if (found.empty()) return std::nullopt;
    if (found.size() > 1) throw std::logic_error("maximal real subfield is not unique");
    auto [sub, sub_into_n] = fixed_field(c.N, select(c.G, found[0]));
    auto coords = express_in_powers(c.m_into_n.image, sub_into_n.image, K->degree());
    if (!coords) throw std::logic_error("real subfield does not lie in K");
    coords->resize(static_cast<size_t>(K->degree()), Rational(0));
    return std::make_pair(sub, SubfieldEmbedding(sub, K, K->element(*coords)));
}

CmReport contains_cm_subfield_over(const SubfieldEmbedding& k_in_m, const CmOptions& opts) {
    CmReport rep;
    rep.method = "enumeration";
    if (!is_totally_real(k_in_m.source)) return rep;  // L' would have to contain k

    Closure c = build_closure(k_in_m, opts);
    auto lattice = subgroups_between(c.G, c.H);

    // candidate CM subfields: S imaginary with a real index-2 overgroup
    // inside Gal(N/k)
    std::vector<std::pair<Subgroup, Subgroup>> candidates;  // (S_L, S_L')
    for (const auto& s : lattice) {
        if (!fixed_field_totally_imaginary(c, s)) continue;
        for (const auto& s0 : lattice) {
            if (s0.size() != 2 * s.size()) continue;
            if (!subgroup_subset(s, s0)) continue;
            if (!subgroup_subset(s0, c.Gk)) continue;
            if (!fixed_field_totally_real(c, s0)) continue;
            candidates.push_back({s, s0});
        }
    }
    if (candidates.empty()) return rep;

    // the maximal CM subfield has the smallest Galois group; it must contain
    // every other candidate
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const auto& a, const auto& b) {
                                     if (a.first.size() != b.first.size())
                                         return a.first.size() < b.first.size();
                                     return a.first < b.first;
                                 });
    for (const auto& [s, s0] : candidates) {
        (void)s0;
        if (!subgroup_subset(best->first, s))
            throw std::logic_error("candidate CM subfields have no maximum");
    }
    return assemble_report(c, k_in_m, best->first, best->second, "enumeration");
}

CmReport maximal_cm_subfield_via_group(const SubfieldEmbedding& k_in_m, const CmOptions& opts) {
    CmReport rep;
    rep.method = "group";
    if (!is_totally_real(k_in_m.source)) return rep;

    Closure c = build_closure(k_in_m, opts);
    // N = < tau g^-1 tau g : g in Gal(closure/Q) >
    std::vector<int> commutators;
    for (int g = 0; g < static_cast<int>(c.G.order()); ++g) {
        int tg = c.G.mult[static_cast<size_t>(c.tau)][static_cast<size_t>(g)];
        int ginv = c.G.inv[static_cast<size_t>(g)];
        int tginv = c.G.mult[static_cast<size_t>(c.tau)][static_cast<size_t>(ginv)];
        commutators.push_back(c.G.mult[static_cast<size_t>(tginv)][static_cast<size_t>(tg)]);
    }
    Subgroup n_sub = subgroup_closure(c.G, commutators);
    std::vector<int> nh_seed = n_sub;
    nh_seed.insert(nh_seed.end(), c.H.begin(), c.H.end());
    Subgroup nh = subgroup_closure(c.G, nh_seed);

    if (subgroup_contains(nh, c.tau)) return rep;  // no CM subfield
    rep.contains = true;

    std::vector<int> nph_seed = nh;
    nph_seed.push_back(c.tau);
    Subgroup nph = subgroup_closure(c.G, nph_seed);

    if (!subgroup_subset(nh, c.Gk))
        throw std::logic_error("NH does not fix k although k is totally real");
    return assemble_report(c, k_in_m, nh, nph, "group");
}

void verify_cm_report(const CmReport& report, const SubfieldEmbedding& k_in_m) {
    if (!report.contains) return;
    const FieldPtr& L = *report.cm_field;
    const FieldPtr& Lp = *report.real_subfield;
    if (!is_totally_imaginary(L)) throw std::logic_error("claimed CM field is not totally imaginary");
    if (!is_totally_real(Lp)) throw std::logic_error("claimed real subfield is not totally real");
    if (L->degree() != 2 * Lp->degree()) throw std::logic_error("CM field is not quadratic over the real subfield");
    if (!same_field(report.cm_into_m->target, k_in_m.target))
        throw std::logic_error("CM field embeds into the wrong field");
    // chain consistency: (k -> L' -> L -> M) agrees with k -> M
    FieldElement via_chain = report.cm_into_m->map(
        report.real_into_cm->map(report.k_into_real->map(k_in_m.source->generator())));
    FieldElement direct = k_in_m.map(k_in_m.source->generator());
    if (!(via_chain == direct)) throw std::logic_error("embedding chain does not commute");
}

}  // namespace hyperdense
