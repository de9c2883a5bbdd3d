#include "matpatch/ringspec.hpp"

#include <algorithm>
#include <set>

namespace matpatch {

std::optional<std::size_t> RingSpec::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool RingSpec::is_truncated_var(std::size_t i) const {
    if (!trunc_) return false;
    return std::find(trunc_->vars.begin(), trunc_->vars.end(), i) != trunc_->vars.end();
}

unsigned RingSpec::trunc_degree(const Monomial& m) const {
    if (!trunc_) return 0;
    unsigned d = 0;
    for (auto i : trunc_->vars) d += m.exp[i];
    return d;
}

SpecPtr RingSpec::make(Domain base, std::vector<std::string> vars,
                       std::vector<RewriteRule> rules, std::optional<Truncation> trunc) {
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->base_ = base;
    spec->vars_ = std::move(vars);
    spec->rules_ = std::move(rules);
    spec->trunc_ = std::move(trunc);
    spec->validate();
    return spec;
}

void RingSpec::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        require(!v.empty(), "InvalidRelation", "empty variable name");
        require(seen.insert(v).second, "InvalidRelation", "duplicate variable " + v);
    }
    if (trunc_) {
        require(trunc_->order >= 1, "InvalidRelation", "truncation order must be >= 1");
        require(!trunc_->vars.empty(), "InvalidRelation", "truncation needs variables");
        for (auto i : trunc_->vars)
            require(i < vars_.size(), "InvalidRelation", "truncation variable out of range");
    }

    // variables bound by some rule head; used by the termination guard
    std::vector<bool> bound(vars_.size(), false);
    for (const auto& r : rules_)
        for (std::size_t i = 0; i < r.lhs.exp.size(); ++i)
            if (r.lhs.exp[i] > 0) bound[i] = true;

    auto bound_degree = [&](const Monomial& m) {
        unsigned d = 0;
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            if (bound[i]) d += m.exp[i];
        return d;
    };

    for (const auto& r : rules_) {
        require(r.lhs.nvars() == vars_.size(), "InvalidRelation", "rule arity mismatch");
        require(r.lhs.total_degree() >= 1, "InvalidRelation", "rule head must be non-constant");
        // shape: pure power of one variable, or squarefree product
        std::size_t nz = 0, sqfree = 0;
        for (auto e : r.lhs.exp) {
            if (e > 0) ++nz;
            if (e == 1) ++sqfree;
        }
        bool pure_power = nz == 1;
        bool squarefree = nz >= 1 && sqfree == nz;
        require(pure_power || squarefree, "InvalidRelation",
                "rule head must be a pure power or a product of distinct variables");
        unsigned lhs_bd = bound_degree(r.lhs);
        for (const auto& [m, c] : r.rhs.terms()) {
            require(!r.lhs.divides(m), "InvalidRelation",
                    "rule head divides a monomial of its right-hand side");
            require(bound_degree(m) < lhs_bd, "InvalidRelation",
                    "rewrite does not decrease the bound-variable degree (non-terminating)");
            require(c.domain() == base_, "SpecMismatch", "rule coefficient domain mismatch");
        }
    }

    // local confluence: every head overlap reduces to the same normal form
    for (std::size_t i = 0; i < rules_.size(); ++i)
        for (std::size_t j = i + 1; j < rules_.size(); ++j) {
            Monomial m = Monomial::lcm(rules_[i].lhs, rules_[j].lhs);
            MultiPoly r1 = normal_form(rules_[i].rhs.mul_term(
                m.quotient(rules_[i].lhs), Coeff::one(base_)));
            MultiPoly r2 = normal_form(rules_[j].rhs.mul_term(
                m.quotient(rules_[j].lhs), Coeff::one(base_)));
            require(r1 == r2, "RelationNotConfluent",
                    "S-polynomial overlap of rules " + std::to_string(i) + " and " +
                        std::to_string(j) + " does not reduce to a common form");
        }
}

MultiPoly RingSpec::truncate(const MultiPoly& p) const {
    if (!trunc_) return p;
    std::map<Monomial, Coeff> acc;
    for (const auto& [m, c] : p.terms())
        if (trunc_degree(m) < trunc_->order) acc.emplace(m, c);
    return MultiPoly::from_map(std::move(acc));
}

MultiPoly RingSpec::rewrite_fixed_point(MultiPoly p) const {
    if (rules_.empty()) return p;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [m, c] : p.terms()) {
            for (const auto& r : rules_) {
                if (r.lhs.divides(m)) {
                    MultiPoly repl = r.rhs.mul_term(m.quotient(r.lhs), c);
                    p = p - MultiPoly::term(m, c) + repl;
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return p;
}

MultiPoly RingSpec::normal_form(MultiPoly p) const {
    while (true) {
        p = rewrite_fixed_point(std::move(p));
        MultiPoly q = truncate(p);
        if (q == p) return p;
        p = std::move(q);
    }
}

bool RingSpec::is_domain() const {
    if (trunc_) return false;
    bool field_or_z = base_.kind == BaseKind::Integers || base_.kind == BaseKind::Rationals ||
                      base_.is_prime_modulus();
    if (!field_or_z) return false;
    if (rules_.empty()) return true;
    if (rules_.size() != 1) return false;
    const auto& r = rules_[0];
    std::size_t nz = 0;
    for (auto e : r.lhs.exp)
        if (e > 0) { ++nz; if (e != 1) return false; }
    if (nz != 2) return false;
    if (r.rhs.is_zero()) return false; // xy = 0 has zero divisors
    for (const auto& [m, c] : r.rhs.terms())
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            if (m.exp[i] > 0 && r.lhs.exp[i] > 0) return false;
    return true;
}

SpecPtr RingSpec::residue_spec() const {
    require(trunc_.has_value(), "UnsupportedSpec", "residue spec of an untruncated ring");
    if (!residue_cache_) {
        Truncation t = *trunc_;
        t.order = 1;
        residue_cache_ = make(base_, vars_, rules_, t);
    }
    return residue_cache_;
}

bool RingSpec::same_presentation(const RingSpec& o) const {
    if (base_ != o.base_ || vars_ != o.vars_ || rules_.size() != o.rules_.size()) return false;
    for (std::size_t i = 0; i < rules_.size(); ++i)
        if (rules_[i].lhs != o.rules_[i].lhs || rules_[i].rhs != o.rules_[i].rhs) return false;
    if (trunc_.has_value() != o.trunc_.has_value()) return false;
    if (trunc_ && (trunc_->vars != o.trunc_->vars || trunc_->order != o.trunc_->order))
        return false;
    return true;
}

} // namespace matpatch
