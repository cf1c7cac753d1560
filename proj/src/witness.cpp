#include "hyperdense/witness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperdense/linalg.hpp"

namespace hyperdense {

namespace {

// split-completely test used as a cheap certain "no" filter for torsion search
std::vector<unsigned long> split_primes(const QPoly& g, size_t want) {
    std::vector<unsigned long> out;
    Rational disc = discriminant(g);
    Integer disc_int = disc.get_num() * disc.get_den();
    for (unsigned long p = 3; p < 5000 && out.size() < want; p += 2) {
        bool is_prime = true;
        for (unsigned long d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                is_prime = false;
                break;
            }
        if (!is_prime) continue;
        if (mpz_divisible_ui_p(disc_int.get_mpz_t(), p)) continue;
        auto factors = factor_mod_p(g, p);
        bool split = true;
        for (const auto& [f, mult] : factors)
            if (f.degree() != 1 || mult != 1) split = false;
        if (split) out.push_back(p);
    }
    return out;
}

}  // namespace

std::pair<unsigned long, FieldElement> torsion_units(const FieldPtr& M) {
    unsigned long degree = static_cast<unsigned long>(M->degree());
    // candidates: n with phi(n) dividing the degree, scanned descending so the
    // first hit is the torsion order
    std::vector<unsigned long> candidates;
    for (unsigned long n = 1; n <= 2 * degree * degree + 4; ++n)
        if (degree % euler_phi(n) == 0) candidates.push_back(n);
    std::sort(candidates.rbegin(), candidates.rend());

    std::vector<unsigned long> filter;
    if (M->degree() > 2) filter = split_primes(M->defining_polynomial(), 3);

    for (unsigned long n : candidates) {
        if (n <= 2) break;  // -1 is always there
        // a prime split in M must be 1 mod n when zeta_n lies in M
        bool excluded = false;
        for (unsigned long p : filter)
            if (p % n != 1 && n % p != 0) {
                excluded = true;
                break;
            }
        if (excluded) continue;
        auto roots = roots_in_field(M, cyclotomic(static_cast<unsigned>(n)));
        if (!roots.empty()) return {n, roots.front()};
    }
    return {2, M->from_rational(Rational(-1))};
}

UnitSupply make_unit_supply(const FieldPtr& M, std::vector<FieldElement> generators,
                            const std::vector<unsigned long>& s_primes) {
    for (const auto& g : generators) {
        if (!same_field(g.field(), M)) throw std::invalid_argument("generator in the wrong field");
        Rational n = element_norm(g);
        if (!is_integer(n) || n == 0)
            throw std::invalid_argument("generator is not an algebraic integer unit: norm " +
                                        rational_to_string(n));
        Integer a = abs(n.get_num());
        for (unsigned long p : s_primes)
            while (mpz_divisible_ui_p(a.get_mpz_t(), p)) a /= static_cast<long>(p);
        if (a != 1)
            throw std::invalid_argument("generator norm " + rational_to_string(n) +
                                        " is not a unit outside the supplied places");
    }
    UnitSupply s;
    s.field = M;
    s.generators = std::move(generators);
    auto [order, gen] = torsion_units(M);
    s.torsion_order = order;
    s.torsion_generator = gen;
    return s;
}

namespace {

// coordinates of e in the k-span of the basis: unknowns are the k-coordinates
// of each basis coefficient, solved over Q
std::optional<std::vector<FieldElement>> coords_over_k(const FieldElement& e,
                                                       const SubfieldEmbedding& k_in_m,
                                                       const std::vector<FieldElement>& basis) {
    const FieldPtr& M = e.field();
    const FieldPtr& k = k_in_m.source;
    size_t dk = static_cast<size_t>(k->degree());
    size_t dm = static_cast<size_t>(M->degree());
    // columns: k_power_b * basis_i
    std::vector<FieldElement> k_powers;
    {
        FieldElement p = M->one();
        for (size_t b = 0; b < dk; ++b) {
            k_powers.push_back(p);
            if (b + 1 < dk) p = p * k_in_m.image;
        }
    }
    Matrix<Rational> mat(dm, basis.size() * dk, Rational(0));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t b = 0; b < dk; ++b) {
            FieldElement col = basis[i] * k_powers[b];
            for (size_t r = 0; r < dm; ++r) mat.at(r, i * dk + b) = col.coords()[r];
        }
    auto sol = solve(mat, e.coords(), Rational(0));
    if (!sol) return std::nullopt;
    std::vector<FieldElement> out;
    out.reserve(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<Rational> c(sol->begin() + static_cast<long>(i * dk),
                                sol->begin() + static_cast<long>((i + 1) * dk));
        out.push_back(k->element(std::move(c)));
    }
    return out;
}

std::vector<FieldElement> normalize_point(std::vector<FieldElement> coords) {
    for (const auto& c : coords) {
        if (!c.is_zero()) {
            FieldElement inv = c.inverse();
            for (auto& x : coords) x = x * inv;
            return coords;
        }
    }
    throw std::invalid_argument("projective point with all coordinates zero");
}

struct PointKey {
    std::vector<std::vector<Rational>> coords;
    bool operator<(const PointKey& o) const { return coords < o.coords; }
};

PointKey key_of(const std::vector<FieldElement>& point) {
    PointKey k;
    for (const auto& c : point) k.coords.push_back(c.coords());
    return k;
}

}  // namespace

ProjectivePointSet unit_points(const UnitSupply& supply, const SubfieldEmbedding& k_in_m,
                               const std::vector<FieldElement>& basis, long exponent_bound) {
    if (exponent_bound < 0) throw std::invalid_argument("exponent bound must be nonnegative");
    const FieldPtr& M = supply.field;
    if (!same_field(k_in_m.target, M)) throw std::invalid_argument("embedding target must be M");

    ProjectivePointSet out;
    out.base_field = k_in_m.source;
    out.ambient_dim = static_cast<int>(basis.size()) - 1;

    std::set<PointKey> seen;
    size_t g = supply.generators.size();
    std::vector<long> exps(g, -exponent_bound);
    bool more = true;
    for (unsigned long t = 0; t < supply.torsion_order; ++t) {
        FieldElement torsion_part = supply.torsion_generator.pow(static_cast<long>(t));
        std::fill(exps.begin(), exps.end(), -exponent_bound);
        more = true;
        while (more) {
            FieldElement value = torsion_part;
            for (size_t i = 0; i < g; ++i) value = value * supply.generators[i].pow(exps[i]);
            auto coords = coords_over_k(value, k_in_m, basis);
            if (!coords) throw std::invalid_argument("basis does not span M over k");
            auto point = normalize_point(std::move(*coords));
            if (seen.insert(key_of(point)).second) out.points.push_back(std::move(point));
            // next exponent vector, last index fastest
            more = false;
            for (size_t i = g; i > 0; --i) {
                if (exps[i - 1] < exponent_bound) {
                    ++exps[i - 1];
                    for (size_t j = i; j < g; ++j) exps[j] = -exponent_bound;
                    more = true;
                    break;
                }
            }
        }
    }
    return out;
}

DensityReport empirical_density(const ProjectivePointSet& pts, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be positive");
    DensityReport rep;
    const FieldPtr& k = pts.base_field;
    size_t nvars = static_cast<size_t>(pts.ambient_dim) + 1;
    for (int d = 1; d <= max_degree; ++d) {
        DegreeReport dr;
        dr.degree = d;
        auto monos = monomials_of_degree(nvars, static_cast<unsigned>(d));
        dr.monomial_count = Integer(static_cast<unsigned long>(monos.size()));
        dr.insufficient_points = monos.size() > pts.points.size();
        Matrix<FieldElement> m(pts.points.size(), monos.size(), k->zero());
        for (size_t r = 0; r < pts.points.size(); ++r) {
            for (size_t c = 0; c < monos.size(); ++c) {
                FieldElement v = k->one();
                for (size_t i = 0; i < nvars; ++i)
                    for (uint32_t e = 0; e < monos[c].exps[i]; ++e) v = v * pts.points[r][i];
                m.at(r, c) = v;
            }
        }
        dr.rank = matrix_rank(m);
        if (!dr.insufficient_points && dr.rank < monos.size()) {
            for (const auto& vec : nullspace(m, k->zero(), k->one())) {
                MPoly<FieldElement> form(nvars);
                for (size_t c = 0; c < monos.size(); ++c)
                    if (!vec[c].is_zero()) form.add_term(monos[c], vec[c]);
                dr.vanishing_forms.push_back(std::move(form));
            }
        }
        rep.per_degree.push_back(std::move(dr));
    }
    return rep;
}

bool verify_multiplicative_identity(const SplittingField& Mtilde,
                                    const std::vector<FieldElement>& embedding_images,
                                    const FieldElement& x, const std::vector<unsigned long>& a,
                                    const std::vector<unsigned long>& b) {
    if (x.is_zero()) throw std::invalid_argument("identity check at x = 0");
    if (a.size() != embedding_images.size() || b.size() != embedding_images.size())
        throw std::invalid_argument("exponent sequences must match the embedding count");
    unsigned long sum_a = 0, sum_b = 0;
    for (auto v : a) sum_a += v;
    for (auto v : b) sum_b += v;
    if (sum_a != sum_b) throw std::invalid_argument("exponent sums differ");

    const FieldPtr& N = Mtilde.field;
    FieldElement lhs = N->one(), rhs = N->one();
    for (size_t i = 0; i < embedding_images.size(); ++i) {
        // sigma_i(x): evaluate x's coordinate polynomial at the embedding image
        FieldElement sx = N->zero();
        const auto& c = x.coords();
        for (size_t j = c.size(); j > 0; --j)
            sx = sx * embedding_images[i] + N->from_rational(c[j - 1]);
        lhs = lhs * sx.pow(static_cast<long>(a[i]));
        rhs = rhs * sx.pow(static_cast<long>(b[i]));
    }
    return lhs == rhs;
}

std::vector<MPoly<FieldElement>> cm_vanishing_forms(const SubfieldEmbedding& k_in_m,
                                                    const CmReport& tower,
                                                    const std::vector<FieldElement>& basis_m,
                                                    const std::vector<FieldElement>& basis_l) {
    if (!tower.contains) throw std::invalid_argument("tower is not CM");
    const FieldPtr& M = k_in_m.target;
    const FieldPtr& k = k_in_m.source;
    const FieldPtr& L = *tower.cm_field;
    const FieldPtr& Lp = *tower.real_subfield;
    size_t two_l = static_cast<size_t>(L->degree() / k->degree());
    size_t half = two_l / 2;
    if (basis_l.size() != two_l) throw std::invalid_argument("basis_l must be a k-basis of L");
    if (basis_m.size() != static_cast<size_t>(M->degree() / k->degree()))
        throw std::invalid_argument("basis_m must be a k-basis of M");

    // the first half of basis_l must be real, i.e. lie in L'
    for (size_t i = 0; i < half; ++i) {
        std::vector<FieldElement> lp_powers;
        FieldElement p = L->one();
        for (int j = 0; j < Lp->degree(); ++j) {
            lp_powers.push_back(p);
            if (j + 1 < Lp->degree()) p = p * tower.real_into_cm->image;
        }
        if (!express_in_span(lp_powers, basis_l[i]))
            throw std::invalid_argument("the first half of basis_l is not real");
    }

    // work inside the Galois closure of M
    SplittingField Nt = splitting_field(M->defining_polynomial());
    const FieldPtr& N = Nt.field;
    SubfieldEmbedding m_in_n(M, N, Nt.roots.at(0));
    SubfieldEmbedding l_in_n = compose(*tower.cm_into_m, m_in_n);
    FieldElement k_img = m_in_n.map(k_in_m.image);

    // embeddings of M into N fixing L: orbit of M's generator image under the
    // stabilizer of L's image
    PermutationGroup G = automorphism_group_over_q(Nt);
    Subgroup fix_l = stabilizer_of(G, l_in_n.image);
    std::set<std::vector<Rational>> gen_images_seen;
    std::vector<FieldElement> hom_images;
    for (int gi : fix_l) {
        const FieldElement& u = G.elements[static_cast<size_t>(gi)].gen_image;
        FieldElement img = N->zero();
        const auto& c = m_in_n.image.coords();
        for (size_t j = c.size(); j > 0; --j) img = img * u + N->from_rational(c[j - 1]);
        if (gen_images_seen.insert(img.coords()).second) hom_images.push_back(img);
    }
    size_t rel_degree = static_cast<size_t>(M->degree() / L->degree());
    if (hom_images.size() != rel_degree)
        throw std::logic_error("embedding count over L does not match [M : L]");

    // relative norm form: product over Hom_L(M, N) of sum x_i sigma(alpha_i)
    size_t nvars = basis_m.size();
    MPoly<FieldElement> norm_rel = MPoly<FieldElement>::constant(nvars, N->one());
    for (const auto& img : hom_images) {
        MPoly<FieldElement> lin(nvars);
        for (size_t i = 0; i < nvars; ++i) {
            // sigma(alpha_i): map alpha_i through M -> N with generator image img
            FieldElement a = N->zero();
            const auto& c = basis_m[i].coords();
            for (size_t j = c.size(); j > 0; --j) a = a * img + N->from_rational(c[j - 1]);
            if (a.is_zero()) continue;
            Monomial mo{std::vector<uint32_t>(nvars, 0)};
            mo.exps[i] = 1;
            lin.add_term(mo, a);
        }
        norm_rel = norm_rel * lin;
    }

    auto [w_l, zeta] = torsion_units(L);
    (void)zeta;
    unsigned exponent = 2 * static_cast<unsigned>(w_l);
    MPoly<FieldElement> power = norm_rel.pow(exponent, N->one());

    // express every coefficient in the beta-basis of L over k
    std::vector<FieldElement> columns;  // k_power_b * beta_j, inside N
    size_t dk = static_cast<size_t>(k->degree());
    {
        std::vector<FieldElement> k_powers;
        FieldElement p = N->one();
        for (size_t b = 0; b < dk; ++b) {
            k_powers.push_back(p);
            if (b + 1 < dk) p = p * k_img;
        }
        for (size_t j = 0; j < two_l; ++j) {
            FieldElement beta = l_in_n.map(basis_l[j]);
            for (size_t b = 0; b < dk; ++b) columns.push_back(beta * k_powers[b]);
        }
    }
    Matrix<Rational> mat(static_cast<size_t>(N->degree()), columns.size(), Rational(0));
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t r = 0; r < static_cast<size_t>(N->degree()); ++r)
            mat.at(r, c) = columns[c].coords()[r];

    std::vector<MPoly<FieldElement>> components(two_l, MPoly<FieldElement>(nvars));
    for (const auto& [mono, coeff] : power.terms()) {
        auto sol = solve(mat, coeff.coords(), Rational(0));
        if (!sol) throw std::logic_error("norm power does not lie in L");
        for (size_t j = 0; j < two_l; ++j) {
            std::vector<Rational> kc(sol->begin() + static_cast<long>(j * dk),
                                     sol->begin() + static_cast<long>((j + 1) * dk));
            FieldElement v = k->element(std::move(kc));
            if (!v.is_zero()) components[j].add_term(mono, v);
        }
    }

    std::vector<MPoly<FieldElement>> out;
    for (size_t j = half; j < two_l; ++j)
        if (!components[j].is_zero()) out.push_back(std::move(components[j]));
    return out;
}

bool verify_integrality(const Arrangement& a, const ProjectivePointSet& pts) {
    if (a.base_field->degree() != 1)
        throw std::invalid_argument("integrality probe supports base field Q only");
    if (a.norm_blocks.empty())
        throw std::invalid_argument("integrality probe needs a norm-form presentation");
    auto comps = components_over_k(a);
    size_t nvars = static_cast<size_t>(a.ambient_dim) + 1;
    MPoly<FieldElement> product = MPoly<FieldElement>::constant(nvars, a.base_field->one());
    for (const auto& c : comps) product = product * component_norm_form(a, c);
    int total_degree = product.total_degree();

    auto eval_at = [&](const MPoly<FieldElement>& form,
                       const std::vector<FieldElement>& pt) -> Rational {
        FieldElement v = form.eval<FieldElement>(pt, a.base_field->zero(),
                                                 [&](const FieldElement& c) { return c; });
        return v.rational_value();
    };

    std::vector<Integer> denominators;
    auto monos = monomials_of_degree(nvars, static_cast<unsigned>(total_degree));
    for (const auto& pt : pts.points) {
        Rational fp = eval_at(product, pt);
        if (fp == 0) throw std::invalid_argument("a witness point lies on the arrangement");
        Integer den(1);
        for (const auto& mono : monos) {
            FieldElement num = a.base_field->one();
            for (size_t i = 0; i < nvars; ++i)
                for (uint32_t e = 0; e < mono.exps[i]; ++e) num = num * pt[i];
            Rational value = num.rational_value() / fp;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), value.get_den().get_mpz_t());
        }
        denominators.push_back(den);
    }
    if (denominators.size() < 8) return true;  // too few points to probe growth
    Integer first_half(1), all(1);
    for (size_t i = 0; i < denominators.size(); ++i) {
        mpz_lcm(all.get_mpz_t(), all.get_mpz_t(), denominators[i].get_mpz_t());
        if (i < denominators.size() / 2)
            mpz_lcm(first_half.get_mpz_t(), first_half.get_mpz_t(), denominators[i].get_mpz_t());
    }
    return all == first_half;
}

ProjectivePointSet assemble_witness_points(const Arrangement& a,
                                           const std::vector<UnitSupply>& supplies,
                                           long exponent_bound, long extra_box) {
    if (a.norm_blocks.size() != supplies.size())
        throw std::invalid_argument("one unit supply per norm component is required");
    const FieldPtr& k = a.base_field;
    size_t nvars = static_cast<size_t>(a.ambient_dim) + 1;

    // per-block affine value lists (coordinates in the block basis)
    std::vector<std::vector<std::vector<FieldElement>>> block_values;
    int covered = 0;
    for (size_t b = 0; b < a.norm_blocks.size(); ++b) {
        auto [start, width] = a.norm_blocks[b];
        covered = std::max(covered, start + width);
        const UnitSupply& supply = supplies[b];
        std::vector<FieldElement> basis;
        for (const auto& coords : a.norm_block_bases[b])
            basis.push_back(supply.field->element(coords));
        SubfieldEmbedding k_in_m(k, supply.field,
                                 supply.field->from_rational(k->generator().rational_value()));
        if (k->degree() != 1)
            throw std::invalid_argument("witness assembly supports base field Q only");
        std::vector<std::vector<FieldElement>> values;
        std::set<std::vector<std::vector<Rational>>> seen;
        size_t g = supply.generators.size();
        std::vector<long> exps(g, -exponent_bound);
        for (unsigned long t = 0; t < supply.torsion_order; ++t) {
            FieldElement torsion_part = supply.torsion_generator.pow(static_cast<long>(t));
            std::fill(exps.begin(), exps.end(), -exponent_bound);
            bool more = true;
            while (more) {
                FieldElement value = torsion_part;
                for (size_t i = 0; i < g; ++i) value = value * supply.generators[i].pow(exps[i]);
                auto coords = coords_over_k(value, k_in_m, basis);
                if (!coords) throw std::invalid_argument("block basis does not span the field");
                std::vector<std::vector<Rational>> key;
                for (const auto& c : *coords) key.push_back(c.coords());
                if (seen.insert(key).second) values.push_back(std::move(*coords));
                more = false;
                for (size_t i = g; i > 0; --i) {
                    if (exps[i - 1] < exponent_bound) {
                        ++exps[i - 1];
                        for (size_t j = i; j < g; ++j) exps[j] = -exponent_bound;
                        more = true;
                        break;
                    }
                }
            }
        }
        block_values.push_back(std::move(values));
    }
    size_t extra = nvars - static_cast<size_t>(covered);

    ProjectivePointSet out;
    out.base_field = k;
    out.ambient_dim = a.ambient_dim;
    std::set<PointKey> seen;

    // odometer over block choices and extra integer coordinates
    std::vector<size_t> choice(block_values.size(), 0);
    std::vector<long> extras(extra, -extra_box);
    bool more = true;
    while (more) {
        std::vector<FieldElement> pt(nvars, k->zero());
        for (size_t b = 0; b < block_values.size(); ++b) {
            auto [start, width] = a.norm_blocks[b];
            for (int j = 0; j < width; ++j)
                pt[static_cast<size_t>(start + j)] = block_values[b][choice[b]][static_cast<size_t>(j)];
        }
        for (size_t e = 0; e < extra; ++e)
            pt[static_cast<size_t>(covered) + e] = k->from_rational(Rational(extras[e]));
        auto point = normalize_point(std::move(pt));
        if (seen.insert(key_of(point)).second) out.points.push_back(std::move(point));

        // advance odometer: extras fastest, then block choices
        more = false;
        for (size_t e = extra; e > 0; --e) {
            if (extras[e - 1] < extra_box) {
                ++extras[e - 1];
                for (size_t j = e; j < extra; ++j) extras[j] = -extra_box;
                more = true;
                break;
            }
        }
        if (!more) {
            std::fill(extras.begin(), extras.end(), -extra_box);
            for (size_t b = block_values.size(); b > 0; --b) {
                if (choice[b - 1] + 1 < block_values[b - 1].size()) {
                    ++choice[b - 1];
                    for (size_t j = b; j < block_values.size(); ++j) choice[j] = 0;
                    more = true;
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace hyperdense
