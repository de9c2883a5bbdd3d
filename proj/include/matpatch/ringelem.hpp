#pragma once

#include <optional>
#include <string>

#include "matpatch/ringspec.hpp"

namespace matpatch {

// Element of a RingSpec quotient, kept in normal form.
class RingElem {
public:
    RingElem() = default;
    RingElem(SpecPtr spec, MultiPoly p) : spec_(std::move(spec)), poly_(spec_->normal_form(std::move(p))) {}

    static RingElem zero(const SpecPtr& s) { return RingElem(s, MultiPoly::zero()); }
    static RingElem one(const SpecPtr& s) {
        return RingElem(s, MultiPoly::constant(s->nvars(), Coeff::one(s->base())));
    }
    static RingElem constant(const SpecPtr& s, const BigRat& v) {
        return RingElem(s, MultiPoly::constant(s->nvars(), Coeff::from_rat(s->base(), v)));
    }
    static RingElem variable(const SpecPtr& s, const std::string& name);
    static RingElem var_power(const SpecPtr& s, const std::string& name, unsigned k);

    const SpecPtr& spec() const { return spec_; }
    const MultiPoly& poly() const { return poly_; }

    bool is_zero() const { return poly_.is_zero(); }
    bool is_one() const;
    // true when the normal form is a base constant
    bool is_constant() const;
    Coeff constant_coeff() const; // coefficient of the constant monomial (0 if absent)

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    RingElem pow(unsigned k) const;

    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }
    int cmp(const RingElem& o) const { return poly_.cmp(o.poly_); }

    // every monomial has positive degree in the truncated variables
    bool in_truncation_ideal() const;
    // the image after setting truncated variables to 0
    RingElem residue_part() const;

    std::string str() const;

private:
    SpecPtr spec_;
    MultiPoly poly_;

    void check_same(const RingElem& o) const;
};

// normal_form as the spec-level operation: reduce an arbitrary polynomial.
RingElem normal_form(const SpecPtr& spec, const MultiPoly& p);

// Unit test with inverse. Supports (i) truncated specs whose candidate is a
// base constant plus truncation-ideal terms and (ii) untruncated polynomial
// rings over Z, Q or Z/n; base constants are decided over any spec.
// Returns the inverse when the element is a unit, nullopt when it provably
// is not; throws UnsupportedSpec outside the supported cases.
std::optional<RingElem> is_unit(const RingElem& e);

std::string to_string(const RingElem& e);
std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& vars);

} // namespace matpatch
