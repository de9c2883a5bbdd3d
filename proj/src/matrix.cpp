#include "matpatch/matrix.hpp"

#include <sstream>
#include <unordered_map>

namespace matpatch {

Mat::Mat(SpecPtr spec, std::size_t r) : spec_(std::move(spec)), r_(r) {
    e_.assign(r * r, RingElem::zero(spec_));
}

Mat Mat::identity(const SpecPtr& spec, std::size_t r) {
    Mat m(spec, r);
    for (std::size_t i = 0; i < r; ++i) m.at(i, i) = RingElem::one(spec);
    return m;
}

Mat Mat::from_entries(const SpecPtr& spec, std::vector<std::vector<RingElem>> rows) {
    std::size_t r = rows.size();
    Mat m(spec, r);
    for (std::size_t i = 0; i < r; ++i) {
        require(rows[i].size() == r, "SizeMismatch", "matrix must be square");
        for (std::size_t j = 0; j < r; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    require(r_ == o.r_, "SizeMismatch", "matrix sizes differ");
    Mat out(spec_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) {
            RingElem s = RingElem::zero(spec_);
            for (std::size_t k = 0; k < r_; ++k) s = s + at(i, k) * o.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    require(r_ == o.r_, "SizeMismatch", "matrix sizes differ");
    Mat out(spec_, r_);
    for (std::size_t i = 0; i < r_ * r_; ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    require(r_ == o.r_, "SizeMismatch", "matrix sizes differ");
    Mat out(spec_, r_);
    for (std::size_t i = 0; i < r_ * r_; ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

Mat Mat::operator-() const {
    Mat out(spec_, r_);
    for (std::size_t i = 0; i < r_ * r_; ++i) out.e_[i] = -e_[i];
    return out;
}

Mat Mat::transpose() const {
    Mat out(spec_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::operator==(const Mat& o) const {
    if (r_ != o.r_) return false;
    for (std::size_t i = 0; i < r_ * r_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Mat::is_identity() const { return *this == identity(spec_, r_); }

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RingElem Mat::trace() const {
    RingElem t = RingElem::zero(spec_);
    for (std::size_t i = 0; i < r_; ++i) t = t + at(i, i);
    return t;
}

RingElem Mat::det() const {
    if (r_ == 0) return RingElem::one(spec_);
    // f(mask) = det of the submatrix on rows r-|mask|..r-1 and columns in mask
    std::unordered_map<std::uint64_t, RingElem> memo;
    const Mat& M = *this;

    auto minor_det = [&](auto&& self, std::uint64_t mask) -> RingElem {
        if (mask == 0) return RingElem::one(spec_);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t row = r_ - k;
        RingElem acc = RingElem::zero(spec_);
        int sign = 1;
        for (std::size_t j = 0; j < r_; ++j) {
            if (!(mask & (1ULL << j))) continue;
            if (!M.at(row, j).is_zero()) {
                RingElem sub = self(self, mask & ~(1ULL << j));
                RingElem term = M.at(row, j) * sub;
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };

    std::uint64_t full = r_ >= 64 ? ~0ULL : ((1ULL << r_) - 1);
    require(r_ < 64, "SizeMismatch", "determinant size limit exceeded");
    return minor_det(minor_det, full);
}

Mat Mat::adjugate() const {
    Mat adj(spec_, r_);
    if (r_ == 1) {
        adj.at(0, 0) = RingElem::one(spec_);
        return adj;
    }
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) {
            // cofactor C_ij = (-1)^{i+j} det(minor deleting row i, col j)
            Mat minor(spec_, r_ - 1);
            for (std::size_t a = 0, ai = 0; a < r_; ++a) {
                if (a == i) continue;
                for (std::size_t b = 0, bj = 0; b < r_; ++b) {
                    if (b == j) continue;
                    minor.at(ai, bj) = at(a, b);
                    ++bj;
                }
                ++ai;
            }
            RingElem c = minor.det();
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

Mat Mat::map(const RingHom& h) const {
    Mat out(h.target(), r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) out.at(i, j) = h.apply(at(i, j));
    return out;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < r_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RingElem mat_det(const Mat& m) { return m.det(); }
Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Mat adjugate_inverse(const Mat& m) {
    RingElem d = m.det();
    auto dinv = is_unit(d);
    require(dinv.has_value(), "NotInvertible", "determinant " + d.str() + " is not a unit");
    Mat adj = m.adjugate();
    Mat out(m.spec(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out.at(i, j) = adj.at(i, j) * *dinv;
    return out;
}

Mat embed_block2(const SpecPtr& spec, std::size_t r, std::size_t i, const RingElem& a,
                 const RingElem& b, const RingElem& c, const RingElem& d) {
    require(i + 1 < r, "SizeMismatch", "block position out of range");
    Mat m = Mat::identity(spec, r);
    m.at(i, i) = a;
    m.at(i, i + 1) = b;
    m.at(i + 1, i) = c;
    m.at(i + 1, i + 1) = d;
    return m;
}

} // namespace matpatch
