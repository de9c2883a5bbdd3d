#include "matpatch/poly.hpp"

namespace matpatch {

MultiPoly MultiPoly::constant(std::size_t nvars, const Coeff& c) {
    return term(Monomial(nvars), c);
}

MultiPoly MultiPoly::term(const Monomial& m, const Coeff& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_map(std::map<Monomial, Coeff>&& acc) {
    MultiPoly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grlex_cmp(terms_[i].first, o.terms_[j].first);
        if (c < 0) r.terms_.push_back(terms_[i++]);
        else if (c > 0) r.terms_.push_back(o.terms_[j++]);
        else {
            Coeff s = terms_[i].second + o.terms_[j].second;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].first, s});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::mul_term(const Monomial& m, const Coeff& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [tm, tc] : terms_) {
        Coeff p = tc * c;
        if (!p.is_zero()) r.terms_.push_back({tm * m, p});
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    std::map<Monomial, Coeff> acc;
    for (const auto& [am, ac] : terms_)
        for (const auto& [bm, bc] : o.terms_) {
            Monomial m = am * bm;
            Coeff p = ac * bc;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), std::move(p));
            else it->second = it->second + p;
        }
    return from_map(std::move(acc));
}

int MultiPoly::cmp(const MultiPoly& o) const {
    std::size_t n = terms_.size() < o.terms_.size() ? terms_.size() : o.terms_.size();
    for (std::size_t i = 0; i < n; ++i) {
        int c = grlex_cmp(terms_[i].first, o.terms_[i].first);
        if (c != 0) return c;
        if (terms_[i].second != o.terms_[i].second)
            return terms_[i].second < o.terms_[i].second ? -1 : 1;
    }
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
    return 0;
}

} // namespace matpatch
