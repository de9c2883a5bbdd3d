#include "matpatch/factor.hpp"

namespace matpatch {

Mat suslin_conjugate(const RingElem& b, const RingElem& d, const RingElem& tg,
                     ConjSide side) {
    const SpecPtr& spec = b.spec();
    RingElem one = RingElem::one(spec);
    RingElem bd = tg * b * d;
    RingElem b2 = tg * b * b;
    RingElem d2 = tg * d * d;
    Mat m(spec, 2);
    if (side == ConjSide::Lower) {
        m.at(0, 0) = one + bd;
        m.at(0, 1) = -b2;
        m.at(1, 0) = d2;
        m.at(1, 1) = one - bd;
    } else {
        m.at(0, 0) = one + bd;
        m.at(0, 1) = d2;
        m.at(1, 0) = -b2;
        m.at(1, 1) = one - bd;
    }
    return m;
}

Mat mennicke_core(const RingElem& x, const RingElem& y, const RingElem& z) {
    const SpecPtr& spec = x.spec();
    RingElem one = RingElem::one(spec);
    Mat m(spec, 2);
    m.at(0, 0) = one + x * y * z;
    m.at(0, 1) = -(x * x * z);
    m.at(1, 0) = y * y * z;
    m.at(1, 1) = one - x * y * z;
    return m;
}

Mat RegroupedWord::remultiply(const SpecPtr& spec) const {
    std::size_t r = tail.r;
    Mat acc = Mat::identity(spec, r);
    for (const auto& f : conjugated) {
        Mat inv = adjugate_inverse(f.prefix);
        acc = acc * f.prefix * f.gen.to_mat(r) * inv;
    }
    return acc * word_to_mat(tail, spec);
}

RegroupedWord regroup_word(const ElemWord& w, const Splitting& split, const SpecPtr& spec) {
    require(split.parts.size() == w.gens.size(), "SplitLengthMismatch",
            "splitting must cover every generator of the word");
    for (std::size_t k = 0; k < w.gens.size(); ++k) {
        const auto& [b, a] = split.parts[k];
        require(b + a == w.gens[k].z, "SplitLengthMismatch",
                "split of generator " + std::to_string(k) + " does not sum to its parameter");
    }

    RegroupedWord out;
    out.tail.r = w.r;
    std::vector<Mat> prefixes;
    Mat sigma = Mat::identity(spec, w.r);
    for (std::size_t k = 0; k < w.gens.size(); ++k) {
        prefixes.push_back(sigma);
        sigma = sigma * w.gens[k].to_mat(w.r);
    }
    for (std::size_t k = w.gens.size(); k-- > 0;) {
        const auto& g = w.gens[k];
        out.conjugated.push_back({prefixes[k], ElemGen(g.i, g.j, split.parts[k].first)});
    }
    for (std::size_t k = 0; k < w.gens.size(); ++k) {
        const auto& g = w.gens[k];
        out.tail.gens.emplace_back(g.i, g.j, split.parts[k].second);
    }
    return out;
}

namespace {

BigInt binomial(unsigned n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace

std::pair<LocFraction, LocFraction> partial_fractions(const LocFraction& c,
                                                      const ComaxWitness& w) {
    const SpecPtr& spec = c.spec();
    RingElem fg = w.f * w.g;
    require(c.den_base() == fg, "DenominatorMismatch",
            "input must have denominator base f*g");
    unsigned k = c.exponent();
    if (k == 0) {
        return {LocFraction(c.num(), w.f, 0), LocFraction::zero(spec, w.g)};
    }

    LocFraction x = LocFraction::zero(spec, w.f);
    LocFraction y = LocFraction::zero(spec, w.g);
    unsigned e = 2 * k - 1;
    for (unsigned i = 0; i <= e; ++i) {
        RingElem coeff = RingElem(spec, MultiPoly::constant(
            spec->nvars(), Coeff::from_int(spec->base(), binomial(e, i))));
        RingElem base = coeff * c.num() * w.u.pow(i) * w.v.pow(e - i);
        if (i < k) {
            // carries g^{e-i} with e-i >= k: lands over A_f with denominator f^{k-i}
            x = x + LocFraction(base * w.g.pow(k - 1 - i), w.f, k - i);
        } else {
            // carries f^i with i >= k: lands over A_g with denominator g^{i-k+1}
            y = y + LocFraction(base * w.f.pow(i - k), w.g, i - k + 1);
        }
    }
    // normalize both denominators to exponent exactly k
    x = LocFraction(x.num() * w.f.pow(k - x.exponent()), w.f, k);
    y = LocFraction(y.num() * w.g.pow(k - y.exponent()), w.g, k);
    return {x, y};
}

ElemWord radical_reduce(const Mat& sigma) {
    const SpecPtr& spec = sigma.spec();
    std::size_t r = sigma.size();
    require(spec->truncation().has_value(), "UnsupportedSpec",
            "radical reduction needs a truncated spec");

    RingElem one = RingElem::one(spec);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            RingElem d = (i == j) ? sigma.at(i, j) - one : sigma.at(i, j);
            require(d.in_truncation_ideal(), "NotCongruentToIdentity",
                    "matrix is not congruent to the identity modulo the truncation ideal");
        }
    require(sigma.det().is_one(), "NotInvertible", "matrix is not in SL_r");

    Mat m = sigma;
    std::vector<ElemGen> clears; // applied left to right on the right of sigma
    for (std::size_t j = 0; j < r; ++j) {
        if (r == 1) break;
        // solve (M restricted away from row/col j) z = -col_j to zero the
        // off-diagonal entries of column j in one shot
        Mat minor(spec, r - 1);
        std::vector<RingElem> rhs;
        std::vector<std::size_t> idx;
        for (std::size_t a = 0; a < r; ++a)
            if (a != j) idx.push_back(a);
        for (std::size_t a = 0; a < r - 1; ++a) {
            for (std::size_t b = 0; b < r - 1; ++b) minor.at(a, b) = m.at(idx[a], idx[b]);
            rhs.push_back(m.at(idx[a], j));
        }
        Mat minv = adjugate_inverse(minor);
        std::vector<RingElem> z(r - 1, RingElem::zero(spec));
        for (std::size_t a = 0; a < r - 1; ++a) {
            RingElem s = RingElem::zero(spec);
            for (std::size_t b = 0; b < r - 1; ++b) s = s + minv.at(a, b) * rhs[b];
            z[a] = -s;
        }
        for (std::size_t a = 0; a < r - 1; ++a) {
            if (z[a].is_zero()) continue;
            ElemGen g(idx[a] + 1, j + 1, z[a]);
            clears.push_back(g);
            m = m * g.to_mat(r);
        }
        for (std::size_t a = 0; a < r - 1; ++a)
            require(m.at(idx[a], j).is_zero(), "DiagonalNotUnit",
                    "column clearing failed");
    }

    // m is now diagonal with unit entries and determinant 1
    std::vector<RingElem> diag;
    for (std::size_t i = 0; i < r; ++i) diag.push_back(m.at(i, i));
    ElemWord dw = diagonal_to_word(diag, spec);

    // sigma * clears = diag  =>  sigma = diag * clears^{-1}
    ElemWord cw(r, clears);
    return dw.concat(cw.inverse());
}

// ---- fraction-valued 2x2 machinery ------------------------------------------

FracMat2 FracMat2::identity(const SpecPtr& spec, const RingElem& den) {
    return {LocFraction::one(spec, den), LocFraction::zero(spec, den),
            LocFraction::zero(spec, den), LocFraction::one(spec, den)};
}

FracMat2 FracMat2::mul(const FracMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool FracMat2::eq(const FracMat2& o) const {
    return a.eq(o.a) && b.eq(o.b) && c.eq(o.c) && d.eq(o.d);
}

FracMat2 frac_word_to_mat(const std::vector<FracGen>& word, const SpecPtr& spec,
                          const RingElem& den) {
    FracMat2 m = FracMat2::identity(spec, den);
    for (const auto& g : word) {
        FracMat2 e = FracMat2::identity(spec, den);
        if (g.i == 1 && g.j == 2) e.b = g.z;
        else if (g.i == 2 && g.j == 1) e.c = g.z;
        else fail("SizeMismatch", "fraction generators must be 2x2");
        m = m.mul(e);
    }
    return m;
}

namespace {

LocFraction eval_poly_frac(const MultiPoly& p, const std::vector<LocFraction>& images,
                           const SpecPtr& target, const RingElem& den) {
    LocFraction acc = LocFraction::zero(target, den);
    for (const auto& [m, c] : p.terms()) {
        LocFraction term(RingElem(target, MultiPoly::constant(
                             target->nvars(), convert_coeff(c, target->base()))),
                         den, 0);
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            for (unsigned e = 0; e < m.exp[i]; ++e) term = term * images[i];
        acc = acc + term;
    }
    return acc;
}

// x / d^k  ->  x * cof^k / (d * cof)^k
LocFraction rebase(const LocFraction& v, const RingElem& cof, const RingElem& new_den) {
    require(v.den_base() * cof == new_den, "DenominatorMismatch",
            "rebase cofactor does not match");
    return LocFraction(v.num() * cof.pow(v.exponent()), new_den, v.exponent());
}

} // namespace

FracMat2 FracCert::evaluate() const {
    require(sigma_prime.size() == 2, "CertInvalid", "bad certificate");
    FracMat2 out = FracMat2::identity(target, den);
    out.a = eval_poly_frac(sigma_prime.at(0, 0).poly(), images, target, den);
    out.b = eval_poly_frac(sigma_prime.at(0, 1).poly(), images, target, den);
    out.c = eval_poly_frac(sigma_prime.at(1, 0).poly(), images, target, den);
    out.d = eval_poly_frac(sigma_prime.at(1, 1).poly(), images, target, den);
    return out;
}

FracMat2 FracCert::evaluate_rebased(const RingElem& cofactor, const RingElem& new_den) const {
    FracMat2 m = evaluate();
    return {rebase(m.a, cofactor, new_den), rebase(m.b, cofactor, new_den),
            rebase(m.c, cofactor, new_den), rebase(m.d, cofactor, new_den)};
}

ZariskiSplit zariski_split_2(const std::vector<FracGen>& eps, const ComaxWitness& w) {
    const SpecPtr& spec = w.f.spec();
    RingElem fg = w.f * w.g;
    require(spec->is_domain(), "UnsupportedSpec", "Zariski split needs a domain");

    // prefix matrices over A_{fg}
    std::vector<FracMat2> prefixes;
    FracMat2 sigma = FracMat2::identity(spec, fg);
    for (const auto& g : eps) {
        require(g.z.den_base() == fg, "DenominatorMismatch",
                "word parameters must live over A_{fg}");
        prefixes.push_back(sigma);
        FracMat2 e = FracMat2::identity(spec, fg);
        if (g.i == 1 && g.j == 2) e.b = g.z;
        else if (g.i == 2 && g.j == 1) e.c = g.z;
        else fail("SizeMismatch", "Zariski split is a 2x2 operation");
        sigma = sigma.mul(e);
    }

    // sigma' accumulates the product of Mennicke blocks over Z[T]
    std::vector<std::string> vars;
    std::size_t m = eps.size();
    for (std::size_t k = 0; k < 3 * m; ++k) vars.push_back("t" + std::to_string(k + 1));
    SpecPtr zt = RingSpec::make(Domain::integers(), vars);

    ZariskiSplit out;
    out.cert_f.zt = zt;
    out.cert_f.sigma_prime = Mat::identity(zt, 2);
    out.cert_f.images.assign(3 * m, LocFraction::zero(spec, w.f));
    out.cert_f.target = spec;
    out.cert_f.den = w.f;

    std::vector<std::pair<std::size_t, Mat>> blocks; // (k, mennicke over zt)

    for (std::size_t k = 0; k < m; ++k) {
        const auto& gen = eps[k];
        const FracMat2& pre = prefixes[k];
        // relevant column: second for e21, first for e12
        LocFraction P = (gen.i == 2) ? pre.b : pre.a;
        LocFraction Q = (gen.i == 2) ? pre.d : pre.c;
        unsigned K = P.exponent() > Q.exponent() ? P.exponent() : Q.exponent();
        RingElem phat = P.num() * fg.pow(K - P.exponent());
        RingElem qhat = Q.num() * fg.pow(K - Q.exponent());

        // split c_k / g^{2K} = xt + yt with xt over A_f, yt over A_g
        LocFraction cprime(gen.z.num() * w.f.pow(2 * K), fg, gen.z.exponent() + 2 * K);
        auto [xt, yt] = partial_fractions(cprime, w);

        // tail generator parameter g^{2K} * yt over A_g
        LocFraction tail_param(yt.num() * w.g.pow(2 * K), w.g, yt.exponent());
        out.word_g.push_back({gen.i, gen.j, tail_param});

        // Mennicke certificate data over A_f; e12 conjugation flips the z sign
        RingElem xv = RingElem::variable(zt, vars[3 * k]);
        RingElem yv = RingElem::variable(zt, vars[3 * k + 1]);
        RingElem zv = RingElem::variable(zt, vars[3 * k + 2]);
        blocks.push_back({k, mennicke_core(xv, yv, zv)});

        out.cert_f.images[3 * k] = LocFraction(phat, w.f, K);
        out.cert_f.images[3 * k + 1] = LocFraction(qhat, w.f, K);
        out.cert_f.images[3 * k + 2] = (gen.i == 2) ? xt : -xt;
    }

    // product in order k = m..1
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        out.cert_f.sigma_prime = out.cert_f.sigma_prime * it->second;
    require(out.cert_f.sigma_prime.det().is_one(), "CertInvalid",
            "certificate matrix must have determinant 1");
    return out;
}

} // namespace matpatch
