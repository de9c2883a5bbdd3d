#include "matpatch/ringelem.hpp"

#include <sstream>

namespace matpatch {

RingElem RingElem::variable(const SpecPtr& s, const std::string& name) {
    return var_power(s, name, 1);
}

RingElem RingElem::var_power(const SpecPtr& s, const std::string& name, unsigned k) {
    auto idx = s->var_index(name);
    require(idx.has_value(), "UnknownVariable", "variable " + name + " not declared");
    Monomial m(s->nvars());
    m.exp[*idx] = k;
    return RingElem(s, MultiPoly::term(m, Coeff::one(s->base())));
}

void RingElem::check_same(const RingElem& o) const {
    require(spec_ == o.spec_ || (spec_ && o.spec_ && spec_->same_presentation(*o.spec_)),
            "SpecMismatch", "operands belong to different rings");
}

bool RingElem::is_one() const {
    return poly_.size() == 1 && poly_.terms()[0].first.is_constant() &&
           poly_.terms()[0].second.is_one();
}

bool RingElem::is_constant() const {
    return poly_.is_zero() || (poly_.size() == 1 && poly_.terms()[0].first.is_constant());
}

Coeff RingElem::constant_coeff() const {
    for (const auto& [m, c] : poly_.terms())
        if (m.is_constant()) return c;
    return Coeff::zero(spec_->base());
}

RingElem RingElem::operator+(const RingElem& o) const {
    check_same(o);
    return RingElem(spec_, poly_ + o.poly_);
}

RingElem RingElem::operator-(const RingElem& o) const {
    check_same(o);
    return RingElem(spec_, poly_ - o.poly_);
}

RingElem RingElem::operator*(const RingElem& o) const {
    check_same(o);
    return RingElem(spec_, poly_ * o.poly_);
}

RingElem RingElem::operator-() const { return RingElem(spec_, -poly_); }

RingElem RingElem::pow(unsigned k) const {
    RingElem r = one(spec_);
    RingElem b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool RingElem::operator==(const RingElem& o) const {
    check_same(o);
    return poly_ == o.poly_;
}

bool RingElem::in_truncation_ideal() const {
    if (!spec_->truncation()) return is_zero();
    for (const auto& [m, c] : poly_.terms())
        if (spec_->trunc_degree(m) == 0) return false;
    return true;
}

RingElem RingElem::residue_part() const {
    if (!spec_->truncation()) return *this;
    std::map<Monomial, Coeff> acc;
    for (const auto& [m, c] : poly_.terms())
        if (spec_->trunc_degree(m) == 0) acc.emplace(m, c);
    return RingElem(spec_, MultiPoly::from_map(std::move(acc)));
}

RingElem normal_form(const SpecPtr& spec, const MultiPoly& p) {
    return RingElem(spec, p);
}

namespace {

// inverse of a unit base constant + nilpotent rest, by geometric series;
// `order` bounds the nilpotency index of the non-constant part.
RingElem series_inverse(const RingElem& e, const Coeff& c0, unsigned order) {
    RingElem c0inv = RingElem(e.spec(), MultiPoly::constant(e.spec()->nvars(), c0.inverse()));
    // e = c0 (1 - u), u = 1 - c0^{-1} e;  e^{-1} = c0^{-1} sum u^k
    RingElem u = RingElem::one(e.spec()) - c0inv * e;
    RingElem sum = RingElem::one(e.spec());
    RingElem upow = u;
    for (unsigned k = 1; k < order && !upow.is_zero(); ++k) {
        sum = sum + upow;
        upow = upow * u;
    }
    RingElem inv = c0inv * sum;
    require((e * inv).is_one(), "NotInvertible", "series inverse failed to verify");
    return inv;
}

unsigned max_prime_exponent(std::int64_t n) {
    unsigned best = 1;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (e > best) best = e;
        }
    }
    return best;
}

} // namespace

std::optional<RingElem> is_unit(const RingElem& e) {
    const auto& spec = e.spec();
    if (e.is_zero()) return std::nullopt;

    // pure base constants are decided by the base domain over any spec
    if (e.is_constant()) {
        Coeff c = e.constant_coeff();
        if (!c.is_unit()) {
            // over Z/n a nilpotent-free constant decision is exact; over Z a
            // non-(+-1) constant is a unit in no quotient we construct
            if (spec->base().kind == BaseKind::ModN || spec->rules().empty() ||
                spec->truncation())
                return std::nullopt;
            fail("UnsupportedSpec", "constant unit test over quotient of Z-algebra");
        }
        return RingElem(spec, MultiPoly::constant(spec->nvars(), c.inverse()));
    }

    if (spec->truncation()) {
        RingElem r = e.residue_part();
        if (!r.is_constant())
            fail("UnsupportedSpec",
                 "unit test over a truncated spec needs a candidate that is constant "
                 "modulo the truncation ideal");
        Coeff c0 = r.constant_coeff();
        if (!c0.is_unit()) return std::nullopt;
        return series_inverse(e, c0, spec->truncation()->order);
    }

    if (spec->rules().empty()) {
        // pure polynomial ring
        Coeff c0 = e.constant_coeff();
        if (!c0.is_unit()) return std::nullopt;
        if (spec->base().kind == BaseKind::ModN && !spec->base().is_prime_modulus()) {
            // unit iff constant unit and all other coefficients nilpotent
            for (const auto& [m, c] : e.poly().terms())
                if (!m.is_constant() && !c.is_nilpotent()) return std::nullopt;
            unsigned order = max_prime_exponent(spec->base().n);
            // non-constant part u satisfies u^order = 0 coefficientwise; the
            // series needs order * (number of terms growth) head room, so give
            // it the exact bound: (c0^{-1}(e-c0))^order has all coefficients
            // divisible by rad(n)^order = 0 mod n.
            return series_inverse(e, c0, order);
        }
        // over a domain a non-constant polynomial is never a unit
        return std::nullopt;
    }

    fail("UnsupportedSpec", "unit test for non-constant element over a relation quotient");
}

namespace {

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << vars[i];
        if (m.exp[i] > 1) os << "^" << m.exp[i];
    }
    return os.str();
}

} // namespace

std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    // canonical printing: descending graded lex
    const auto& ts = p.terms();
    for (std::size_t k = ts.size(); k-- > 0;) {
        const auto& [m, c] = ts[k];
        bool lead = (k + 1 == ts.size());
        BigRat v = c.value();
        bool neg = v < 0;
        BigRat av = neg ? BigRat(-v) : v;
        if (lead) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string ms = monomial_str(m, vars);
        Coeff abs_c(c.domain(), av);
        if (ms.empty()) os << abs_c.str();
        else if (abs_c.is_one()) os << ms;
        else os << abs_c.str() << "*" << ms;
    }
    return os.str();
}

std::string RingElem::str() const { return poly_to_string(poly_, spec_->vars()); }

std::string to_string(const RingElem& e) { return e.str(); }

} // namespace matpatch
