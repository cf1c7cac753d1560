#include "hyperdense/mpoly.hpp"

#include <algorithm>

namespace hyperdense {

namespace {
void fill_monomials(size_t nvars, unsigned remaining, size_t pos, Monomial& cur,
                    std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur.exps[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        cur.exps[pos] = e;
        fill_monomials(nvars, remaining - e, pos + 1, cur, out);
    }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) return out;
    Monomial cur{std::vector<uint32_t>(nvars, 0)};
    fill_monomials(nvars, d, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace hyperdense
