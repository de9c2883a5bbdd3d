#include "matpatch/words.hpp"

#include <algorithm>

namespace matpatch {

Mat ElemGen::to_mat(std::size_t r) const {
    require(i <= r && j <= r, "SizeMismatch", "generator index exceeds size");
    Mat m = Mat::identity(z.spec(), r);
    m.at(i - 1, j - 1) = z;
    return m;
}

ElemWord ElemWord::inverse() const {
    std::vector<ElemGen> out;
    out.reserve(gens.size());
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) out.push_back(it->inverse());
    return ElemWord(r, std::move(out));
}

ElemWord ElemWord::concat(const ElemWord& o) const {
    require(r == o.r, "SizeMismatch", "concatenating words of different sizes");
    std::vector<ElemGen> out = gens;
    out.insert(out.end(), o.gens.begin(), o.gens.end());
    return ElemWord(r, std::move(out));
}

Mat word_to_mat(const ElemWord& w, const SpecPtr& spec) {
    Mat m = Mat::identity(spec, w.r);
    for (const auto& g : w.gens) m = m * g.to_mat(w.r);
    return m;
}

Mat chi_form(const SpecPtr& spec, std::size_t r) {
    Mat m(spec, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        m.at(2 * i, 2 * i + 1) = RingElem::one(spec);
        m.at(2 * i + 1, 2 * i) = -RingElem::one(spec);
    }
    return m;
}

Mat SpGen::to_mat(std::size_t r) const {
    require(i <= 2 * r && j <= 2 * r, "SizeMismatch", "generator index exceeds 2r");
    const SpecPtr& spec = z.spec();
    Mat m = Mat::identity(spec, 2 * r);
    if (i == sp_sigma(j)) {
        m.at(i - 1, j - 1) = z;
    } else {
        m.at(i - 1, j - 1) = z;
        RingElem signed_z = ((i + j) % 2 == 0) ? z : -z; // -(-1)^{i+j} z
        m.at(sp_sigma(j) - 1, sp_sigma(i) - 1) = -signed_z;
    }
    return m;
}

Mat word_to_mat(const SpWord& w, const SpecPtr& spec) {
    Mat m = Mat::identity(spec, 2 * w.r);
    for (const auto& g : w.gens) m = m * g.to_mat(w.r);
    return m;
}

bool is_symplectic(const Mat& m, std::size_t r) {
    require(m.size() == 2 * r, "SizeMismatch", "symplectic test needs a 2r x 2r matrix");
    Mat chi = chi_form(m.spec(), r);
    return m.transpose() * chi * m == chi;
}

Mat hyperbolic_form(const SpecPtr& spec, std::size_t n) {
    Mat m(spec, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, n + i) = RingElem::one(spec);
        m.at(n + i, i) = -RingElem::one(spec);
    }
    return m;
}

bool is_alternating(const Mat& form) {
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (!form.at(i, i).is_zero()) return false;
        for (std::size_t j = 0; j < form.size(); ++j)
            if (form.at(i, j) != -form.at(j, i)) return false;
    }
    return true;
}

namespace {

// appends e_{i, r+j} style generators realizing [[I, B],[0, I]] (upper) or
// [[I, 0],[B, I]] (lower) inside a 2r x 2r word; zero entries are skipped
void append_triangular(std::vector<ElemGen>& out, const Mat& B, std::size_t r, bool upper) {
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const RingElem& z = B.at(i, j);
            if (z.is_zero()) continue;
            if (upper) out.emplace_back(i + 1, r + j + 1, z);
            else out.emplace_back(r + i + 1, j + 1, z);
        }
}

} // namespace

ElemWord whitehead_double(const Mat& sigma) {
    const SpecPtr& spec = sigma.spec();
    std::size_t r = sigma.size();
    Mat inv = adjugate_inverse(sigma);
    std::vector<ElemGen> gens;
    // (I sigma; 0 I) (I 0; -sigma^{-1} I) (I sigma; 0 I)
    append_triangular(gens, sigma, r, true);
    append_triangular(gens, -inv, r, false);
    append_triangular(gens, sigma, r, true);
    // (0 -I; I 0) = (I -I; 0 I)(I 0; I I)(I -I; 0 I)
    Mat id = Mat::identity(spec, r);
    append_triangular(gens, -id, r, true);
    append_triangular(gens, id, r, false);
    append_triangular(gens, -id, r, true);
    return ElemWord(2 * r, std::move(gens));
}

ElemWord diagonal_to_word(const std::vector<RingElem>& units, const SpecPtr& spec) {
    std::size_t r = units.size();
    require(r >= 1, "SizeMismatch", "empty diagonal");
    // check the product is 1
    RingElem prod = RingElem::one(spec);
    for (const auto& u : units) prod = prod * u;
    require(prod.is_one(), "NotInvertible", "diagonal determinant is not 1");

    std::vector<ElemGen> gens;
    RingElem prefix = RingElem::one(spec);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        prefix = prefix * units[i];
        auto vinv = is_unit(prefix);
        require(vinv.has_value(), "DiagonalNotUnit",
                "diagonal entry product " + prefix.str() + " is not a unit");
        // embedded diag(v, v^{-1}) at rows (i, i+1):
        // w(v) = e12(v) e21(-v^{-1}) e12(v), diag(v, v^{-1}) = w(v) w(-1)
        const RingElem& v = prefix;
        RingElem one = RingElem::one(spec);
        gens.emplace_back(i + 1, i + 2, v);
        gens.emplace_back(i + 2, i + 1, -*vinv);
        gens.emplace_back(i + 1, i + 2, v);
        gens.emplace_back(i + 1, i + 2, -one);
        gens.emplace_back(i + 2, i + 1, one);
        gens.emplace_back(i + 1, i + 2, -one);
    }
    return ElemWord(r, std::move(gens));
}

} // namespace matpatch
