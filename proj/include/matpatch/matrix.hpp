#pragma once

#include <vector>

#include "matpatch/hom.hpp"
#include "matpatch/ringelem.hpp"

namespace matpatch {

// Square matrix over a RingSpec quotient, row-major.
class Mat {
public:
    Mat() = default;
    Mat(SpecPtr spec, std::size_t r);

    static Mat identity(const SpecPtr& spec, std::size_t r);
    static Mat from_entries(const SpecPtr& spec, std::vector<std::vector<RingElem>> rows);

    std::size_t size() const { return r_; }
    const SpecPtr& spec() const { return spec_; }

    const RingElem& at(std::size_t i, std::size_t j) const { return e_[i * r_ + j]; }
    RingElem& at(std::size_t i, std::size_t j) { return e_[i * r_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat transpose() const;
    Mat operator-() const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_identity() const;
    bool is_zero() const;

    RingElem trace() const;

    // exact determinant by memoized Laplace expansion
    RingElem det() const;

    // adjugate matrix: mat * adjugate == det * Id
    Mat adjugate() const;

    // entrywise image under a ring homomorphism
    Mat map(const RingHom& h) const;

    std::string str() const;

private:
    SpecPtr spec_;
    std::size_t r_ = 0;
    std::vector<RingElem> e_;
};

RingElem mat_det(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);

// sigma^{-1} = det^{-1} * adjugate; requires det to be a unit.
Mat adjugate_inverse(const Mat& m);

// embeds a 2x2 block at rows/cols (i, i+1) of an identity matrix
Mat embed_block2(const SpecPtr& spec, std::size_t r, std::size_t i, const RingElem& a,
                 const RingElem& b, const RingElem& c, const RingElem& d);

} // namespace matpatch
