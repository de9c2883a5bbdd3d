#pragma once

#include <utility>
#include <vector>

#include "matpatch/fraction.hpp"
#include "matpatch/words.hpp"

namespace matpatch {

// Bezout witness u*f + v*g = 1.
struct ComaxWitness {
    RingElem f, g, u, v;

    ComaxWitness(RingElem f_, RingElem g_, RingElem u_, RingElem v_)
        : f(std::move(f_)), g(std::move(g_)), u(std::move(u_)), v(std::move(v_)) {
        require((u * f + v * g).is_one(), "NotComaximal",
                "u*f + v*g does not normalize to 1");
    }
};

// Per-generator split c_k = b_k + a_k.
struct Splitting {
    std::vector<std::pair<RingElem, RingElem>> parts; // (b_k, a_k)
};

// Closed form of gamma e_21(t g) gamma^{-1} where (b, d) is the second column
// of gamma: [[1 + tg bd, -tg b^2],[tg d^2, 1 - tg bd]]. side=upper returns the
// transposed pattern (the e_12 case).
enum class ConjSide { Lower, Upper };
Mat suslin_conjugate(const RingElem& b, const RingElem& d, const RingElem& tg,
                     ConjSide side = ConjSide::Lower);

// [[1+xyz, -x^2 z],[y^2 z, 1-xyz]] in SL_2, determinant 1 identically.
Mat mennicke_core(const RingElem& x, const RingElem& y, const RingElem& z);

// Regrouping identity: for w = prod_k e_{i_k j_k}(c_k) and c_k = b_k + a_k,
//   w = prod_{k=m..1} sigma_k e(b_k) sigma_k^{-1} * prod_{k=1..m} e(a_k)
// with sigma_k the product of the first k-1 original generators.
struct RegroupedWord {
    struct ConjFactor {
        Mat prefix; // sigma_k
        ElemGen gen; // e_{i_k j_k}(b_k)
    };
    std::vector<ConjFactor> conjugated; // in product order (k = m..1)
    ElemWord tail;                      // e_{i_k j_k}(a_k), k = 1..m

    Mat remultiply(const SpecPtr& spec) const;
};
RegroupedWord regroup_word(const ElemWord& w, const Splitting& split, const SpecPtr& spec);

// Splits c with denominator (fg)^k into x + y with denominators f^k and g^k,
// by expanding 1 = (uf+vg)^{2k-1} and bucketing terms: the summands carrying
// at least k factors of g land in the f-denominator bucket.
std::pair<LocFraction, LocFraction> partial_fractions(const LocFraction& c,
                                                      const ComaxWitness& w);

// Column reduction of sigma == Id mod the truncation ideal into an explicit
// elementary word (diagonal pivots are units since the ideal is nilpotent).
ElemWord radical_reduce(const Mat& sigma);

// ---- 2x2 matrices over a localization (used by the Zariski split) ----------

struct FracGen {
    std::size_t i = 1, j = 2; // in {1,2}, i != j
    LocFraction z;
};

struct FracMat2 {
    LocFraction a, b, c, d; // [[a,b],[c,d]]

    static FracMat2 identity(const SpecPtr& spec, const RingElem& den);
    FracMat2 mul(const FracMat2& o) const;
    bool eq(const FracMat2& o) const;
};

FracMat2 frac_word_to_mat(const std::vector<FracGen>& word, const SpecPtr& spec,
                          const RingElem& den);

// Certificate over A_f: sigma' in SL_2(Z[T]) together with a fraction-valued
// assignment (a localization is not a RingSpec, so the evaluation target is
// the fraction model of A_f).
struct FracCert {
    SpecPtr zt;                        // Z[T]
    Mat sigma_prime;                   // over zt
    std::vector<LocFraction> images;   // image of each variable of zt
    SpecPtr target;                    // A
    RingElem den;                      // f

    FracMat2 evaluate() const; // over A_f
    // push into A_{den * cofactor}
    FracMat2 evaluate_rebased(const RingElem& cofactor, const RingElem& new_den) const;
};

// Weak Zariski excision at r = 2: factors an elementary word over A_{fg} into
// a pseudoelementary certificate over A_f and an elementary word over A_g.
struct ZariskiSplit {
    FracCert cert_f;                 // over A_f
    std::vector<FracGen> word_g;     // over A_g
};
ZariskiSplit zariski_split_2(const std::vector<FracGen>& eps, const ComaxWitness& w);

} // namespace matpatch
