#include "hyperdense/density.hpp"

#include <algorithm>

#include "hyperdense/linalg.hpp"

namespace hyperdense {

std::string to_string(Status s) {
    switch (s) {
        case Status::dense: return "dense";
        case Status::not_dense: return "not_dense";
        case Status::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Condition c) {
    switch (c) {
        case Condition::A: return "A";
        case Condition::B: return "B";
        case Condition::C: return "C";
        case Condition::none: return "none";
        case Condition::s4_split_complete: return "s4_split_complete";
        case Condition::s4_no_split: return "s4_no_split";
        case Condition::s4_linear_algebra: return "s4_linear_algebra";
        case Condition::insufficient_data: return "insufficient_data";
    }
    return "insufficient_data";
}

bool SplitRecord::splits_completely(int field_degree) const {
    if (flagged) return false;
    if (static_cast<int>(factors.size()) != field_degree) return false;
    for (const auto& [f, e] : factors)
        if (f != 1 || e != 1) return false;
    return true;
}

int SplitRecord::degree_sum() const {
    int s = 0;
    for (const auto& [f, e] : factors) s += f * e;
    return s;
}

SplitRecord prime_splitting(unsigned long p, const FieldPtr& K) {
    SplitRecord rec;
    rec.p = p;
    const QPoly& g = K->defining_polynomial();
    auto [content, ints] = g.primitive_integer();
    bool monic_integral = (content == 1 && ints.back() == 1);
    if (mpz_divisible_ui_p(ints.back().get_mpz_t(), p)) {
        rec.flagged = true;  // p divides the leading coefficient; no pattern readable
        return rec;
    }
    for (const auto& [factor, mult] : factor_mod_p(g, p)) {
        rec.factors.push_back({factor.degree(), mult});
    }
    std::sort(rec.factors.begin(), rec.factors.end());
    // certification: p coprime to the discriminant, or Dedekind's index test
    Rational disc = discriminant(g);
    Integer disc_num = disc.get_num() * disc.get_den();  // p | disc as a rational iff ...
    bool p_divides_disc = mpz_divisible_ui_p(disc_num.get_mpz_t(), p) != 0;
    if (p_divides_disc) {
        if (monic_integral && dedekind_index_test(g, p)) {
            rec.flagged = false;
        } else {
            rec.flagged = true;
        }
    }
    return rec;
}

std::optional<IdentityWitness> solve_identity_linear_algebra(const EmbeddingSet& l_embeddings,
                                                             const UnitActionData& data) {
    const size_t two_l = l_embeddings.boxes.size();
    if (l_embeddings.r1 != 0)
        throw std::invalid_argument("identity test expects a totally imaginary field");
    const size_t l = two_l / 2;

    // pair representatives in canonical order
    std::vector<size_t> reps;
    for (size_t i = 0; i < two_l; ++i)
        if (static_cast<size_t>(l_embeddings.conjugation[i]) > i) reps.push_back(i);
    if (reps.size() != l) throw std::logic_error("conjugation pairing is not a perfect matching");

    size_t places = 0;
    for (const auto& per_gen : data.valuations) {
        if (per_gen.size() != two_l)
            throw std::invalid_argument("valuation data does not cover all embeddings");
        for (const auto& v : per_gen) {
            if (places == 0) places = v.size();
            if (v.size() != places) throw std::invalid_argument("valuation vectors differ in length");
        }
    }

    Matrix<Rational> m(data.valuations.size() * places, l, Rational(0));
    for (size_t g = 0; g < data.valuations.size(); ++g) {
        for (size_t w = 0; w < places; ++w) {
            for (size_t j = 0; j < l; ++j) {
                size_t rep = reps[j];
                size_t conj = static_cast<size_t>(l_embeddings.conjugation[rep]);
                long diff = data.valuations[g][rep][w] - data.valuations[g][conj][w];
                m.at(g * places + w, j) = Rational(diff);
            }
        }
    }
    auto basis = nullspace(m, Rational(0), Rational(1));
    if (basis.empty()) return std::nullopt;

    // primitive integer form of the first basis vector, sign-normalized
    std::vector<Rational>& v = basis[0];
    Integer den_lcm(1);
    for (const auto& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ints(v.size());
    Integer content(0);
    for (size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    int flip = 1;
    for (const auto& c : ints) {
        if (c != 0) {
            if (c < 0) flip = -1;
            break;
        }
    }
    for (auto& c : ints) c = c * flip / content;

    IdentityWitness w;
    w.vector = ints;
    w.lhs_exponents.assign(two_l, Integer(0));
    w.rhs_exponents.assign(two_l, Integer(0));
    for (size_t j = 0; j < l; ++j) {
        size_t rep = reps[j];
        size_t conj = static_cast<size_t>(l_embeddings.conjugation[rep]);
        if (ints[j] > 0) {
            w.lhs_exponents[rep] += ints[j];
            w.rhs_exponents[conj] += ints[j];
        } else if (ints[j] < 0) {
            w.lhs_exponents[conj] += -ints[j];
            w.rhs_exponents[rep] += -ints[j];
        }
    }
    return w;
}

namespace {

// condition (a) witness: a vanishing linear combination of the forms
std::optional<std::vector<FieldElement>> dependence_witness(const Arrangement& a) {
    const FieldPtr& W = a.working.field;
    size_t m = a.hyperplanes.size();
    size_t cols = static_cast<size_t>(a.ambient_dim) + 1;
    // rows: coordinates, columns: hyperplanes; nullspace = combinations
    Matrix<FieldElement> mat(cols, m, W->zero());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < cols; ++j) mat.at(j, i) = a.hyperplanes[i].coeffs[j];
    auto basis = nullspace(mat, W->zero(), W->one());
    if (basis.empty()) return std::nullopt;
    return basis[0];
}

bool is_galois_over_q(const FieldPtr& L) {
    if (L->degree() == 1) return true;
    return static_cast<int>(roots_in_field(L, L->defining_polynomial()).size()) == L->degree();
}

}  // namespace

Verdict decide_s_infinity(const Arrangement& a, const DecisionOptions& opts) {
    Verdict v;
    v.components = components_over_k(a);

    bool cond_a = linear_rank(a) < a.hyperplanes.size();
    if (cond_a) v.dependence = dependence_witness(a);

    bool cond_b = unit_rank(a.base_field, 0) == 0 && v.components.size() > 1;

    bool cond_c = false;
    for (size_t i = 0; i < v.components.size(); ++i) {
        CmReport rep = maximal_cm_subfield_via_group(v.components[i].k_into_m, opts.cm);
        if (rep.contains) cond_c = true;
        v.cm_reports.push_back({i, std::move(rep)});
    }

    if (cond_a) v.conditions_triggered.push_back(Condition::A);
    if (cond_b) v.conditions_triggered.push_back(Condition::B);
    if (cond_c) v.conditions_triggered.push_back(Condition::C);

    if (!v.conditions_triggered.empty()) {
        v.status = Status::not_dense;
        v.condition = v.conditions_triggered.front();
    } else {
        v.status = Status::dense;
        v.condition = Condition::none;
    }
    return v;
}

Verdict decide_general_s(const Arrangement& a, const PlaceSpec& s,
                         const std::optional<UnitActionData>& data, const DecisionOptions& opts) {
    if (s.finite_primes.empty()) return decide_s_infinity(a, opts);

    Verdict v;
    v.components = components_over_k(a);

    bool cond_a = linear_rank(a) < a.hyperplanes.size();
    if (cond_a) {
        v.dependence = dependence_witness(a);
        v.conditions_triggered.push_back(Condition::A);
        v.status = Status::not_dense;
        v.condition = Condition::A;
        return v;
    }

    // the unit-group condition cannot occur with finite places; checked literally
    if (unit_rank(a.base_field, static_cast<int>(s.finite_primes.size())) == 0 &&
        v.components.size() > 1) {
        v.conditions_triggered.push_back(Condition::B);
        v.status = Status::not_dense;
        v.condition = Condition::B;
        return v;
    }

    bool any_unknown = false;
    bool any_split_complete = false;
    bool any_conditional = false;
    std::optional<Condition> blocker;

    size_t unresolved_cm_components = 0;
    for (size_t i = 0; i < v.components.size(); ++i) {
        CmReport rep = maximal_cm_subfield_via_group(v.components[i].k_into_m, opts.cm);
        bool contains = rep.contains;
        v.cm_reports.push_back({i, std::move(rep)});
        if (contains) ++unresolved_cm_components;
    }

    for (const auto& [idx, rep] : v.cm_reports) {
        if (!rep.contains) continue;
        S4Record rec;
        rec.component_index = idx;
        const FieldPtr& L = *rep.cm_field;
        const FieldPtr& Lp = *rep.real_subfield;
        rec.cm_minpoly = L->defining_polynomial();
        rec.real_minpoly = Lp->defining_polynomial();

        if (a.base_field->degree() != 1) {
            // the splitting tests are formulated for places of Q here
            rec.outcome = Condition::insufficient_data;
            any_unknown = true;
            v.s4_records.push_back(std::move(rec));
            continue;
        }
        rec.cm_over_k_galois = is_galois_over_q(L);
        for (unsigned long p : s.finite_primes) {
            rec.splits_in_cm.push_back(prime_splitting(p, L));
            rec.splits_in_real.push_back(prime_splitting(p, Lp));
        }
        if (!rec.cm_over_k_galois) {
            rec.outcome = Condition::insufficient_data;
            any_unknown = true;
            v.s4_records.push_back(std::move(rec));
            continue;
        }

        // test 1: some place of S splits completely in L -> the component is dense
        bool resolved = false;
        for (const auto& sr : rec.splits_in_cm) {
            if (!sr.flagged && sr.splits_completely(L->degree())) {
                rec.outcome = Condition::s4_split_complete;
                rec.split_complete_prime = sr.p;
                any_split_complete = true;
                resolved = true;
                break;
            }
        }
        // test 2: no place of S_{L'} splits in L -> not dense
        if (!resolved) {
            bool all_verified = true, none_split = true;
            for (size_t pi = 0; pi < s.finite_primes.size(); ++pi) {
                const SplitRecord& in_l = rec.splits_in_cm[pi];
                const SplitRecord& in_lp = rec.splits_in_real[pi];
                if (in_l.flagged || in_lp.flagged) {
                    all_verified = false;
                    break;
                }
                if (in_l.num_places() != in_lp.num_places()) none_split = false;
            }
            if (all_verified && none_split) {
                rec.outcome = Condition::s4_no_split;
                blocker = blocker.value_or(Condition::s4_no_split);
                resolved = true;
            }
        }
        // fallback: user-supplied S-unit valuation data (applies only when it
        // is unambiguous which component it describes)
        if (!resolved && data && unresolved_cm_components == 1) {
            auto witness = solve_identity_linear_algebra(
                embeddings_of(L, make_rational(1, 1 << 20)), *data);
            if (witness) {
                rec.outcome = Condition::s4_linear_algebra;
                rec.identity = std::move(witness);
                blocker = blocker.value_or(Condition::s4_linear_algebra);
            } else {
                rec.outcome = Condition::s4_linear_algebra;
                rec.assumed_complete_generators = true;
                any_conditional = true;
            }
            resolved = true;
        }
        if (!resolved) {
            rec.outcome = Condition::insufficient_data;
            any_unknown = true;
        }
        v.s4_records.push_back(std::move(rec));
    }

    // not dense as soon as one component is blocked
    for (const auto& rec : v.s4_records) {
        if (rec.outcome == Condition::s4_no_split ||
            (rec.outcome == Condition::s4_linear_algebra && rec.identity.has_value())) {
            v.status = Status::not_dense;
            v.condition = rec.outcome;
            v.conditions_triggered.push_back(rec.outcome);
            return v;
        }
    }
    if (any_unknown) {
        v.status = Status::unknown;
        v.condition = Condition::insufficient_data;
        return v;
    }
    v.status = Status::dense;
    if (any_conditional) v.condition = Condition::s4_linear_algebra;
    else if (any_split_complete) v.condition = Condition::s4_split_complete;
    else v.condition = Condition::none;
    return v;
}

}  // namespace hyperdense
