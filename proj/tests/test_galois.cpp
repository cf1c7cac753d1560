#include <algorithm>

#include "doctest.h"
#include "hyperdense/galois.hpp"
#include "hyperdense/linalg.hpp"

using namespace hyperdense;

namespace {

// Brute-force oracle: all permutations of the exact roots that preserve every
// linear relation among root monomials of total degree <= 4.
std::vector<Perm> relation_preserving_permutations(const SplittingField& N) {
    const size_t n = N.roots.size();
    const int field_dim = N.field->degree();

    // monomials of degree <= 4 in n variables
    std::vector<std::vector<uint32_t>> monos;
    std::vector<uint32_t> cur(n, 0);
    auto rec = [&](auto&& self, size_t pos, uint32_t left) -> void {
        if (pos == n) {
            monos.push_back(cur);
            return;
        }
        for (uint32_t e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, 4);

    auto value_of = [&](const std::vector<uint32_t>& mono,
                        const std::vector<int>& relabel) -> FieldElement {
        FieldElement acc = N.field->one();
        for (size_t i = 0; i < n; ++i)
            for (uint32_t e = 0; e < mono[i]; ++e)
                acc = acc * N.roots[static_cast<size_t>(relabel[i])];
        return acc;
    };

    std::vector<int> id(n);
    for (size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);

    // kernel of the evaluation matrix = the relation space
    Matrix<Rational> eval(static_cast<size_t>(field_dim), monos.size(), Rational(0));
    for (size_t c = 0; c < monos.size(); ++c) {
        FieldElement v = value_of(monos[c], id);
        for (int r = 0; r < field_dim; ++r)
            eval.at(static_cast<size_t>(r), c) = v.coords()[static_cast<size_t>(r)];
    }
    auto kernel = nullspace(eval, Rational(0), Rational(1));

    std::vector<Perm> keep;
    std::vector<int> perm = id;
    do {
        bool good = true;
        for (const auto& rel : kernel) {
            FieldElement acc = N.field->zero();
            for (size_t c = 0; c < monos.size() && good; ++c) {
                if (rel[c] == 0) continue;
                acc = acc + value_of(monos[c], perm) * rel[c];
            }
            if (!acc.is_zero()) {
                good = false;
                break;
            }
        }
        if (good) keep.push_back(Perm{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return keep;
}

bool groups_equal_as_perm_sets(const PermutationGroup& g, std::vector<Perm> perms) {
    if (g.order() != perms.size()) return false;
    std::sort(perms.begin(), perms.end());
    for (size_t i = 0; i < perms.size(); ++i)
        if (!(g.elements[i].perm == perms[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("splitting field of x^2-2") {
    SplittingField N = splitting_field(QPoly({-2, 0, 1}));
    CHECK(N.field->degree() == 2);
    CHECK(N.roots.size() == 2);
    PermutationGroup G = automorphism_group_over_q(N);
    CHECK(G.order() == 2);
    CHECK(groups_equal_as_perm_sets(G, relation_preserving_permutations(N)));
    GroupElement tau = complex_conjugation(N);
    CHECK(tau.perm.is_identity());
}

TEST_CASE("splitting field of x^3-2") {
    SplittingField N = splitting_field(QPoly({-2, 0, 0, 1}));
    CHECK(N.field->degree() == 6);
    CHECK(N.roots.size() == 3);
    for (const auto& r : N.roots) {
        FieldElement v = (r * r * r) - N.field->from_rational(2);
        CHECK(v.is_zero());
    }
    PermutationGroup G = automorphism_group_over_q(N);
    CHECK(G.order() == 6);
    CHECK_FALSE(G.is_abelian());
    CHECK(groups_equal_as_perm_sets(G, relation_preserving_permutations(N)));
}

TEST_CASE("splitting field of the 5th cyclotomic polynomial") {
    SplittingField N = splitting_field(QPoly({1, 1, 1, 1, 1}));
    CHECK(N.field->degree() == 4);
    CHECK(N.roots.size() == 4);
    PermutationGroup G = automorphism_group_over_q(N);
    CHECK(G.order() == 4);
    CHECK(G.is_cyclic());
    CHECK(groups_equal_as_perm_sets(G, relation_preserving_permutations(N)));
    // complex conjugation sends the generator to its 4th power
    GroupElement tau = complex_conjugation(N);
    CHECK(tau.gen_image == N.field->generator().pow(4));
    CHECK_FALSE(tau.perm.is_identity());
    // involution
    CHECK(compose(tau.perm, tau.perm).is_identity());
}

TEST_CASE("splitting field of x^4-2: dihedral of order 8") {
    SplittingField N = splitting_field(QPoly({-2, 0, 0, 0, 1}));
    CHECK(N.field->degree() == 8);
    CHECK(N.roots.size() == 4);
    PermutationGroup G = automorphism_group_over_q(N);
    CHECK(G.order() == 8);
    CHECK_FALSE(G.is_abelian());
    CHECK(groups_equal_as_perm_sets(G, relation_preserving_permutations(N)));
    auto subs = subgroups_between(G, {0});
    CHECK(subs.size() == 10);
}

TEST_CASE("cyclic group of order 4 has 3 subgroups") {
    SplittingField N = splitting_field(QPoly({1, 1, 1, 1, 1}));
    PermutationGroup G = automorphism_group_over_q(N);
    auto subs = subgroups_between(G, {0});
    CHECK(subs.size() == 3);
    auto all = subgroups_between(G, Subgroup{0, 1, 2, 3});
    CHECK(all.size() == 1);
}

TEST_CASE("fixed fields and the Galois correspondence") {
    SplittingField N = splitting_field(QPoly({1, 1, 1, 1, 1}));
    PermutationGroup G = automorphism_group_over_q(N);

    auto [full_fixed, full_emb] = fixed_field(N, G.elements);
    CHECK(full_fixed->degree() == 1);
    (void)full_emb;

    auto [trivial_fixed, trivial_emb] = fixed_field(N, {G.elements[0]});
    CHECK(trivial_fixed->degree() == 4);
    (void)trivial_emb;

    // the order-2 subgroup generated by conjugation fixes Q(sqrt5)
    GroupElement tau = complex_conjugation(N);
    int tau_idx = G.index_of(tau.perm);
    REQUIRE(tau_idx >= 0);
    Subgroup two = subgroup_closure(G, {tau_idx});
    REQUIRE(two.size() == 2);
    auto [mid, mid_emb] = fixed_field(N, select(G, two));
    CHECK(mid->degree() == 2);
    CHECK(mid->defining_polynomial() == QPoly({-1, 1, 1}));  // x^2 + x - 1

    // correspondence round-trip on every subgroup
    for (const auto& s : subgroups_between(G, {0})) {
        auto [sub, emb] = fixed_field(N, select(G, s));
        CHECK(static_cast<size_t>(sub->degree()) * s.size() == G.order());
        CHECK(stabilizer_of(G, emb.image) == s);
    }
}

TEST_CASE("automorphisms permute the root list exactly") {
    SplittingField N = splitting_field(QPoly({-2, 0, 0, 0, 1}));
    PermutationGroup G = automorphism_group_over_q(N);
    for (const auto& e : G.elements) {
        std::vector<bool> seen(N.roots.size(), false);
        for (size_t i = 0; i < N.roots.size(); ++i) {
            int img = e.perm(static_cast<int>(i));
            CHECK(!seen[static_cast<size_t>(img)]);
            seen[static_cast<size_t>(img)] = true;
        }
    }
}

TEST_CASE("complex conjugation for an imaginary quadratic") {
    SplittingField N = splitting_field(QPoly({1, 0, 1}));
    GroupElement tau = complex_conjugation(N);
    CHECK_FALSE(tau.perm.is_identity());
    CHECK(tau.gen_image == -N.field->generator());
}

TEST_CASE("degree cap reporting") {
    GaloisOptions opts;
    opts.max_degree = 4;
    CHECK_THROWS_AS(splitting_field(QPoly({-2, 0, 0, 1}), opts), degree_cap_error);
}
