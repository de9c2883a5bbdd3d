#include "matpatch/coeff.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace matpatch {

namespace {

BigInt mod_reduce(const BigInt& v, std::int64_t n) {
    BigInt r = v % n;
    if (r < 0) r += n;
    return r;
}

// radical of n (product of distinct prime factors) and the largest prime
// exponent; n is a machine-size modulus so trial division is fine.
void factor_radical(std::int64_t n, BigInt& radical, unsigned& max_exp) {
    radical = 1;
    max_exp = 1;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            radical *= p;
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (e > max_exp) max_exp = e;
        }
    }
    if (m > 1) radical *= m;
}

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    BigInt x1, y1;
    BigInt g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

bool Domain::is_prime_modulus() const {
    if (kind != BaseKind::ModN) return false;
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::string Domain::name() const {
    switch (kind) {
        case BaseKind::Integers: return "Z";
        case BaseKind::Rationals: return "Q";
        case BaseKind::ModN: return "Z/" + std::to_string(n);
    }
    return "?";
}

Domain Domain::mod(std::int64_t n) {
    require(n >= 2, "InvalidModulus", "modulus must be >= 2, got " + std::to_string(n));
    return {BaseKind::ModN, n};
}

Coeff::Coeff(Domain dom, BigRat v) : dom_(dom), v_(std::move(v)) { reduce(); }

void Coeff::reduce() {
    if (dom_.kind == BaseKind::ModN) {
        require(denominator(v_) == 1, "InvalidCoefficient",
                "non-integral value over " + dom_.name());
        v_ = BigRat(mod_reduce(numerator(v_), dom_.n));
    } else if (dom_.kind == BaseKind::Integers) {
        require(denominator(v_) == 1, "InvalidCoefficient",
                "non-integral value over Z: " + v_.str());
    }
}

Coeff Coeff::from_int(const Domain& dom, const BigInt& v) {
    return Coeff(dom, BigRat(v));
}

Coeff Coeff::from_rat(const Domain& dom, const BigRat& v) {
    if (dom.kind == BaseKind::ModN && denominator(v) != 1) {
        // p/q makes sense when q is invertible mod n
        Coeff q = Coeff::from_int(dom, denominator(v));
        require(q.is_unit(), "InvalidCoefficient",
                "denominator " + denominator(v).str() + " not invertible in " + dom.name());
        return Coeff::from_int(dom, numerator(v)) * q.inverse();
    }
    return Coeff(dom, v);
}

Coeff Coeff::operator+(const Coeff& o) const {
    require(dom_ == o.dom_, "SpecMismatch", "coefficient domain mismatch");
    return Coeff(dom_, v_ + o.v_);
}

Coeff Coeff::operator-(const Coeff& o) const {
    require(dom_ == o.dom_, "SpecMismatch", "coefficient domain mismatch");
    return Coeff(dom_, v_ - o.v_);
}

Coeff Coeff::operator*(const Coeff& o) const {
    require(dom_ == o.dom_, "SpecMismatch", "coefficient domain mismatch");
    return Coeff(dom_, v_ * o.v_);
}

Coeff Coeff::operator-() const { return Coeff(dom_, -v_); }

bool Coeff::is_unit() const {
    switch (dom_.kind) {
        case BaseKind::Integers: return v_ == 1 || v_ == -1;
        case BaseKind::Rationals: return v_ != 0;
        case BaseKind::ModN: {
            BigInt x, y;
            return egcd(numerator(v_), BigInt(dom_.n), x, y) == 1;
        }
    }
    return false;
}

Coeff Coeff::inverse() const {
    require(is_unit(), "NotInvertible", "coefficient " + str() + " is not a unit of " + dom_.name());
    switch (dom_.kind) {
        case BaseKind::Integers: return *this; // +-1
        case BaseKind::Rationals: return Coeff(dom_, 1 / v_);
        case BaseKind::ModN: {
            BigInt x, y;
            egcd(numerator(v_), BigInt(dom_.n), x, y);
            return Coeff(dom_, BigRat(mod_reduce(x, dom_.n)));
        }
    }
    fail("NotInvertible", "unreachable");
}

bool Coeff::is_nilpotent() const {
    if (dom_.kind != BaseKind::ModN) return is_zero();
    BigInt radical;
    unsigned max_exp;
    factor_radical(dom_.n, radical, max_exp);
    return numerator(v_) % radical == 0;
}

std::string Coeff::str() const {
    if (denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
}

Coeff convert_coeff(const Coeff& c, const Domain& target) {
    if (c.domain() == target) return c;
    if (c.domain().kind == BaseKind::Integers)
        return Coeff::from_rat(target, c.value());
    if (c.domain().kind == BaseKind::ModN && target.kind == BaseKind::ModN &&
        c.domain().n % target.n == 0)
        return Coeff::from_rat(target, c.value());
    fail("SpecMismatch",
         "no canonical map " + c.domain().name() + " -> " + target.name());
}

} // namespace matpatch
