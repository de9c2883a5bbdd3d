#pragma once

#include "matpatch/ringelem.hpp"

namespace matpatch {

// Element num / d^k of a single-element localization A_d over an integral
// domain presentation. Equality is cross-multiplication of normal forms.
class LocFraction {
public:
    LocFraction() = default;
    LocFraction(RingElem num, RingElem den_base, unsigned k);

    static LocFraction from_elem(const RingElem& e, const RingElem& den_base) {
        return LocFraction(e, den_base, 0);
    }
    static LocFraction zero(const SpecPtr& s, const RingElem& den_base) {
        return LocFraction(RingElem::zero(s), den_base, 0);
    }
    static LocFraction one(const SpecPtr& s, const RingElem& den_base) {
        return LocFraction(RingElem::one(s), den_base, 0);
    }

    const RingElem& num() const { return num_; }
    const RingElem& den_base() const { return den_; }
    unsigned exponent() const { return k_; }
    const SpecPtr& spec() const { return num_.spec(); }

    LocFraction operator+(const LocFraction& o) const;
    LocFraction operator-(const LocFraction& o) const;
    LocFraction operator*(const LocFraction& o) const;
    LocFraction operator-() const;

    bool eq(const LocFraction& o) const;
    bool is_zero() const { return num_.is_zero(); }

    // drops common d-powers when the numerator is exactly divisible
    LocFraction reduced() const;

    std::string str() const;

private:
    RingElem num_;
    RingElem den_;
    unsigned k_ = 0;

    void check_compatible(const LocFraction& o) const;
};

bool frac_eq(const LocFraction& a, const LocFraction& b);
inline LocFraction frac_add(const LocFraction& a, const LocFraction& b) { return a + b; }
inline LocFraction frac_mul(const LocFraction& a, const LocFraction& b) { return a * b; }

} // namespace matpatch
