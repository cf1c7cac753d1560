#ifndef HYPERDENSE_MPOLY_HPP
#define HYPERDENSE_MPOLY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperdense/rational.hpp"

namespace hyperdense {

/// Exponent vector with graded-lexicographic ordering.
struct Monomial {
    std::vector<uint32_t> exps;

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator<(const Monomial& o) const {
        unsigned da = total_degree(), db = o.total_degree();
        if (da != db) return da < db;
        return exps < o.exps;
    }
    Monomial operator+(const Monomial& o) const {
        if (exps.size() != o.exps.size()) throw std::invalid_argument("monomial arity mismatch");
        Monomial m = *this;
        for (size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
        return m;
    }
};

/// Sparse multivariate polynomial over an exact coefficient ring C.
/// C needs +, -, *, equality, and a usable "is zero" via entry_is_zero (ADL).
template <class C>
class MPoly {
  public:
    MPoly() : nvars_(0) {}
    explicit MPoly(size_t nvars) : nvars_(nvars) {}

    static MPoly constant(size_t nvars, const C& c) {
        MPoly p(nvars);
        if (!entry_is_zero(c)) p.terms_[Monomial{std::vector<uint32_t>(nvars, 0)}] = c;
        return p;
    }
    static MPoly variable(size_t nvars, size_t i, const C& one) {
        MPoly p(nvars);
        Monomial m{std::vector<uint32_t>(nvars, 0)};
        m.exps[i] = 1;
        p.terms_[m] = one;
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, C>& terms() const { return terms_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            if (d < 0) d = static_cast<int>(m.total_degree());
            else if (d != static_cast<int>(m.total_degree())) return false;
        }
        return true;
    }

    void add_term(const Monomial& m, const C& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!entry_is_zero(c)) terms_[m] = c;
        } else {
            it->second = it->second + c;
            if (entry_is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        check_arity(o);
        MPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        check_arity(o);
        MPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        check_arity(o);
        MPoly r(nvars_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
        return r;
    }
    MPoly scaled(const C& s) const {
        MPoly r(nvars_);
        if (entry_is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Evaluate at a point; V needs *, +, and construction from C via the
    /// given lift functor.
    template <class V, class Lift>
    V eval(const std::vector<V>& point, const V& zero, Lift lift) const {
        if (point.size() != nvars_) throw std::invalid_argument("eval arity mismatch");
        V acc = zero;
        for (const auto& [m, c] : terms_) {
            V term = lift(c);
            for (size_t i = 0; i < nvars_; ++i)
                for (uint32_t e = 0; e < m.exps[i]; ++e) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    MPoly pow(unsigned e, const C& one) const {
        MPoly acc = constant(nvars_, one);
        MPoly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

  private:
    void check_arity(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("mpoly arity mismatch");
    }
    size_t nvars_;
    std::map<Monomial, C> terms_;
};

/// All exponent vectors of total degree exactly d in n variables,
/// ascending graded-lex order.
std::vector<Monomial> monomials_of_degree(size_t nvars, unsigned d);

/// C(n + d, n): number of monomials of degree d in n + 1 variables is
/// binomial(n + d, n); exposed for density probes.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace hyperdense

#endif
