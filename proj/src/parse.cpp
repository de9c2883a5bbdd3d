#include "matpatch/parse.hpp"

#include <cctype>

namespace matpatch {

namespace {

// Parses over the raw polynomial ring (no reduction); reduction happens when
// the result is wrapped into a RingElem.
class Parser {
public:
    Parser(const std::string& src, const Domain& base, const std::vector<std::string>& vars)
        : src_(src), base_(base), vars_(vars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != src_.size()) err("unexpected trailing input");
        return p;
    }

    // first term of the topmost expression, as written (for rule orientation)
    MultiPoly first_term;

private:
    const std::string& src_;
    Domain base_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    [[noreturn]] void err(const std::string& what) const {
        fail("SyntaxError", what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    MultiPoly expr() {
        ++depth_;
        bool negate = eat('-');
        MultiPoly p = term();
        if (negate) p = -p;
        if (depth_ == 1) first_term = p;
        while (true) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else break;
        }
        --depth_;
        return p;
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    MultiPoly factor() {
        MultiPoly p = atom();
        while (eat('^')) {
            unsigned k = natural();
            MultiPoly r = MultiPoly::constant(vars_.size(), Coeff::one(base_));
            MultiPoly b = p;
            unsigned e = k;
            while (e) {
                if (e & 1) r = r * b;
                b = b * b;
                e >>= 1;
            }
            p = r;
        }
        return p;
    }

    MultiPoly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            MultiPoly p = expr_nested();
            if (!eat(')')) err("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return coeff();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return var();
        err("expected coefficient, variable or '('");
    }

    // parenthesized expressions do not affect first_term tracking
    MultiPoly expr_nested() {
        int saved = depth_;
        depth_ = 100;
        bool negate = eat('-');
        MultiPoly p = term();
        if (negate) p = -p;
        while (true) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else break;
        }
        depth_ = saved;
        return p;
    }

    unsigned natural() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            err("expected a natural number");
        unsigned long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
            if (v > 1000000) err("exponent too large");
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    MultiPoly coeff() {
        skip_ws();
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            digits += src_[pos_++];
        BigInt num(digits);
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::string den;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                den += src_[pos_++];
            if (den.empty()) err("expected denominator digits");
            BigInt d(den);
            if (d == 0) err("zero denominator");
            return MultiPoly::constant(vars_.size(), Coeff::from_rat(base_, BigRat(num, d)));
        }
        pos_ = save;
        return MultiPoly::constant(vars_.size(), Coeff::from_int(base_, num));
    }

    MultiPoly var() {
        skip_ws();
        std::string name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            name += src_[pos_++];
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) {
                Monomial m(vars_.size());
                m.exp[i] = 1;
                return MultiPoly::term(m, Coeff::one(base_));
            }
        fail("UnknownVariable", "variable " + name + " not declared in the ring");
    }
};

} // namespace

RingElem parse_poly(const std::string& src, const SpecPtr& spec) {
    Parser p(src, spec->base(), spec->vars());
    return RingElem(spec, p.parse());
}

RewriteRule parse_relation(const std::string& src, const Domain& base,
                           const std::vector<std::string>& vars) {
    Parser p(src, base, vars);
    MultiPoly whole = p.parse();
    require(p.first_term.size() == 1, "InvalidRelation",
            "relation must start with a single head term: " + src);
    auto [head_mono, head_coeff] = p.first_term.terms()[0];
    require(head_coeff.is_one() || (-head_coeff).is_one(), "InvalidRelation",
            "relation head coefficient must be +-1: " + src);
    // head - rhs = +-whole  =>  rhs = head - whole/coeff
    MultiPoly rest = whole.mul_term(Monomial(vars.size()), head_coeff.inverse());
    MultiPoly rhs = MultiPoly::term(head_mono, Coeff::one(base)) - rest;
    return RewriteRule{head_mono, rhs};
}

} // namespace matpatch
