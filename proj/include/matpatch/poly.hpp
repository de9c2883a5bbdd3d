#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matpatch/coeff.hpp"

namespace matpatch {

// Exponent vector indexed by the ring's variable list.
struct Monomial {
    std::vector<std::uint32_t> exp;

    explicit Monomial(std::size_t nvars = 0) : exp(nvars, 0) {}

    std::size_t nvars() const { return exp.size(); }
    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool is_constant() const { return total_degree() == 0; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& m) const { // *this / m
        Monomial q(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i) q.exp[i] = exp[i] - m.exp[i];
        return q;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = exp[i] + m.exp[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp.size());
        for (std::size_t i = 0; i < a.exp.size(); ++i)
            r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator!=(const Monomial& o) const { return exp != o.exp; }
};

// Graded lexicographic order, variable significance = declaration order.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    return 0;
}

inline bool operator<(const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) < 0; }

// Sparse polynomial: term list sorted strictly increasing in graded lex,
// no zero coefficients.
class MultiPoly {
public:
    using Term = std::pair<Monomial, Coeff>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(std::size_t nvars, const Coeff& c);
    static MultiPoly term(const Monomial& m, const Coeff& c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // leading term = greatest in graded lex
    const Term& leading() const { return terms_.back(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;

    MultiPoly mul_term(const Monomial& m, const Coeff& c) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return terms_ != o.terms_; }

    // total order for canonical representatives (compares term lists)
    int cmp(const MultiPoly& o) const;

    // building block: accumulate and normalize a term map
    static MultiPoly from_map(std::map<Monomial, Coeff>&& acc);

private:
    std::vector<Term> terms_;
};

} // namespace matpatch
