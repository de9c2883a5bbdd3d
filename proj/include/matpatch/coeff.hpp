#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "matpatch/error.hpp"

namespace matpatch {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class BaseKind { Integers, Rationals, ModN };

struct Domain {
    BaseKind kind = BaseKind::Integers;
    std::int64_t n = 0; // modulus, only for ModN (n >= 2)

    bool operator==(const Domain& o) const { return kind == o.kind && n == o.n; }
    bool operator!=(const Domain& o) const { return !(*this == o); }

    bool is_prime_modulus() const;
    std::string name() const;

    static Domain integers() { return {BaseKind::Integers, 0}; }
    static Domain rationals() { return {BaseKind::Rationals, 0}; }
    static Domain mod(std::int64_t n);
};

// Exact coefficient in one of the base domains. ModN values are reduced
// representatives in [0, n); rationals are kept in lowest terms with a
// positive denominator (cpp_rational maintains that invariant).
class Coeff {
public:
    Coeff() = default;
    Coeff(Domain dom, BigRat v);

    static Coeff from_int(const Domain& dom, const BigInt& v);
    static Coeff from_rat(const Domain& dom, const BigRat& v);
    static Coeff zero(const Domain& dom) { return from_int(dom, 0); }
    static Coeff one(const Domain& dom) { return from_int(dom, 1); }

    const Domain& domain() const { return dom_; }
    const BigRat& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator-() const;

    bool operator==(const Coeff& o) const { return dom_ == o.dom_ && v_ == o.v_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }
    // total order used for canonical representatives
    bool operator<(const Coeff& o) const { return v_ < o.v_; }

    // Multiplicative inverse if this is a unit of the base domain.
    bool is_unit() const;
    Coeff inverse() const;

    // True when the coefficient is nilpotent in the base (0 over a domain;
    // divisible by rad(n) over Z/n).
    bool is_nilpotent() const;

    std::string str() const;

private:
    Domain dom_;
    BigRat v_ = 0;

    void reduce();
};

// Maps a coefficient into another base domain when a canonical homomorphism
// exists (Z -> anything, Q -> Q, Z/n -> Z/m for m | n). Throws SpecMismatch
// otherwise.
Coeff convert_coeff(const Coeff& c, const Domain& target);

} // namespace matpatch
