#pragma once

#include <vector>

#include "matpatch/matrix.hpp"

namespace matpatch {

// e_{i,j}(z): identity plus z in position (i, j). Indices are 1-based.
struct ElemGen {
    std::size_t i = 1, j = 2;
    RingElem z;

    ElemGen() = default;
    ElemGen(std::size_t i_, std::size_t j_, RingElem z_) : i(i_), j(j_), z(std::move(z_)) {
        require(i != j && i >= 1 && j >= 1, "SizeMismatch", "elementary generator needs i != j");
    }

    Mat to_mat(std::size_t r) const;
    ElemGen inverse() const { return ElemGen(i, j, -z); }
};

struct ElemWord {
    std::size_t r = 2;
    std::vector<ElemGen> gens;

    ElemWord() = default;
    ElemWord(std::size_t r_, std::vector<ElemGen> g) : r(r_), gens(std::move(g)) { check(); }

    void check() const {
        for (const auto& g : gens)
            require(g.i <= r && g.j <= r, "SizeMismatch", "generator index exceeds word size");
    }

    ElemWord inverse() const;
    ElemWord concat(const ElemWord& o) const;
    std::size_t length() const { return gens.size(); }
};

Mat word_to_mat(const ElemWord& w, const SpecPtr& spec);

// ---- symplectic generators -------------------------------------------------

// chi_r: 2r x 2r block diagonal with [[0,1],[-1,0]] blocks
Mat chi_form(const SpecPtr& spec, std::size_t r);

// the index swap sigma(2i) = 2i-1, sigma(2i-1) = 2i (1-based)
inline std::size_t sp_sigma(std::size_t k) { return (k % 2 == 1) ? k + 1 : k - 1; }

// se_{i,j}(z), the two-case elementary symplectic generator
struct SpGen {
    std::size_t i = 1, j = 2;
    RingElem z;

    SpGen() = default;
    SpGen(std::size_t i_, std::size_t j_, RingElem z_) : i(i_), j(j_), z(std::move(z_)) {
        require(i != j && i >= 1 && j >= 1, "SizeMismatch", "symplectic generator needs i != j");
    }

    Mat to_mat(std::size_t r) const; // 2r x 2r
    SpGen inverse() const { return SpGen(i, j, -z); }
};

struct SpWord {
    std::size_t r = 2; // matrices are 2r x 2r
    std::vector<SpGen> gens;

    SpWord() = default;
    SpWord(std::size_t r_, std::vector<SpGen> g) : r(r_), gens(std::move(g)) { check(); }

    void check() const {
        for (const auto& g : gens)
            require(g.i <= 2 * r && g.j <= 2 * r, "SizeMismatch",
                    "generator index exceeds 2r");
    }
    std::size_t length() const { return gens.size(); }
};

Mat word_to_mat(const SpWord& w, const SpecPtr& spec);

// alpha^t chi_r alpha == chi_r, for a 2r x 2r matrix
bool is_symplectic(const Mat& m, std::size_t r);

// Gram matrix of the hyperbolic module H(R^n) on (standard basis, dual basis):
// the 2n x 2n block matrix [[0, I],[-I, 0]].
Mat hyperbolic_form(const SpecPtr& spec, std::size_t n);

// alternating: m^t = -m with zero diagonal (characteristic-2 safe)
bool is_alternating(const Mat& form);

// ---- Whitehead factorization ------------------------------------------------

// ElemWord of size 2r multiplying to diag(sigma, sigma^{-1}); uses
// diag(s,s^{-1}) = (I s;0 I)(I 0;-s^{-1} I)(I s;0 I)(0 -I;I 0) with the
// rotation expanded as three triangular blocks. Length <= 3r^2 + 3r.
ElemWord whitehead_double(const Mat& sigma);

// ElemWord of size r multiplying to diag(u_1..u_r) with product of units 1.
ElemWord diagonal_to_word(const std::vector<RingElem>& units, const SpecPtr& spec);

} // namespace matpatch
