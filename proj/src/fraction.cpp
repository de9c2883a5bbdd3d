#include "matpatch/fraction.hpp"

namespace matpatch {

LocFraction::LocFraction(RingElem num, RingElem den_base, unsigned k)
    : num_(std::move(num)), den_(std::move(den_base)), k_(k) {
    require(num_.spec() == den_.spec() || num_.spec()->same_presentation(*den_.spec()),
            "SpecMismatch", "numerator and denominator base in different rings");
    require(num_.spec()->is_domain(), "UnsupportedSpec",
            "localization is only supported over integral-domain presentations");
    require(!den_.is_zero(), "DenominatorMismatch", "denominator base is zero");
}

void LocFraction::check_compatible(const LocFraction& o) const {
    require(num_.spec() == o.num_.spec() ||
                num_.spec()->same_presentation(*o.num_.spec()),
            "SpecMismatch", "fractions over different rings");
    require(den_ == o.den_, "DenominatorMismatch",
            "fractions with different denominator bases: " + den_.str() + " vs " +
                o.den_.str());
}

LocFraction LocFraction::operator+(const LocFraction& o) const {
    check_compatible(o);
    unsigned k = k_ > o.k_ ? k_ : o.k_;
    RingElem a = num_ * den_.pow(k - k_);
    RingElem b = o.num_ * den_.pow(k - o.k_);
    return LocFraction(a + b, den_, k);
}

LocFraction LocFraction::operator-(const LocFraction& o) const { return *this + (-o); }

LocFraction LocFraction::operator*(const LocFraction& o) const {
    check_compatible(o);
    return LocFraction(num_ * o.num_, den_, k_ + o.k_);
}

LocFraction LocFraction::operator-() const { return LocFraction(-num_, den_, k_); }

bool LocFraction::eq(const LocFraction& o) const {
    check_compatible(o);
    // cross multiplication; d is a nonzerodivisor in a domain
    return num_ * den_.pow(o.k_) == o.num_ * den_.pow(k_);
}

LocFraction LocFraction::reduced() const {
    if (k_ == 0 || num_.is_zero()) return LocFraction(num_, den_, num_.is_zero() ? 0 : k_);
    // try to peel d-factors off the numerator by long division in the free
    // polynomial module: num = d * q exactly iff num - d*q normalizes to 0
    LocFraction r = *this;
    while (r.k_ > 0) {
        // exact divisibility test by recursive reduction: compute num / den
        // term by term against the leading monomial of den
        const MultiPoly& d = r.den_.poly();
        if (d.is_zero()) break;
        MultiPoly rem = r.num_.poly();
        MultiPoly quot = MultiPoly::zero();
        bool ok = true;
        while (!rem.is_zero()) {
            const auto& [lm, lc] = rem.leading();
            const auto& [dm, dc] = d.leading();
            if (!dm.divides(lm) || !dc.is_unit()) { ok = false; break; }
            Monomial qm = lm.quotient(dm);
            Coeff qc = lc * dc.inverse();
            quot = quot + MultiPoly::term(qm, qc);
            rem = rem - d.mul_term(qm, qc);
        }
        if (!ok) break;
        r = LocFraction(RingElem(r.num_.spec(), quot), r.den_, r.k_ - 1);
    }
    return r;
}

std::string LocFraction::str() const {
    std::string s = num_.str();
    if (k_ > 0) {
        s = "(" + s + ")/(" + den_.str() + ")";
        if (k_ > 1) s += "^" + std::to_string(k_);
    }
    return s;
}

bool frac_eq(const LocFraction& a, const LocFraction& b) { return a.eq(b); }

} // namespace matpatch
