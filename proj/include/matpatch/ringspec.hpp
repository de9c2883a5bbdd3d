#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matpatch/poly.hpp"

namespace matpatch {

// Oriented rewrite rule: the leading monomial rewrites to the right-hand
// polynomial. Leading monomials are restricted to squarefree products of
// distinct variables (like xy) or pure powers (like t^2).
struct RewriteRule {
    Monomial lhs;
    MultiPoly rhs;
};

struct Truncation {
    std::vector<std::size_t> vars; // indices of truncated variables
    unsigned order = 1;            // (V)^order = 0
};

class RingSpec;
using SpecPtr = std::shared_ptr<const RingSpec>;

// Quotient of a multivariate polynomial ring by a confluent oriented rewrite
// system, optionally truncated I-adically. Immutable after construction.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
public:
    // Validates rule shapes, termination and local confluence
    // (S-polynomial overlaps); throws RelationNotConfluent / InvalidRelation.
    static SpecPtr make(Domain base, std::vector<std::string> vars,
                        std::vector<RewriteRule> rules = {},
                        std::optional<Truncation> trunc = std::nullopt);

    const Domain& base() const { return base_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::optional<Truncation>& truncation() const { return trunc_; }

    std::size_t nvars() const { return vars_.size(); }
    std::optional<std::size_t> var_index(const std::string& name) const;
    bool is_truncated_var(std::size_t i) const;

    // degree of a monomial in the truncated variables
    unsigned trunc_degree(const Monomial& m) const;

    // Fully reduces a polynomial: rewrite to fixed point, truncate, repeat.
    MultiPoly normal_form(MultiPoly p) const;

    // Integral-domain classification used by the localization machinery:
    // base is Z, Q or F_p, no truncation, and relations are empty or a single
    // binomial rule xy -> m with x,y distinct variables not occurring in m
    // (quotient by an irreducible xy + f over a UFD).
    bool is_domain() const;

    // residue spec R/I of a truncated spec: same presentation, order 1
    SpecPtr residue_spec() const;

    bool same_presentation(const RingSpec& o) const;

private:
    RingSpec() = default;

    Domain base_;
    std::vector<std::string> vars_;
    std::vector<RewriteRule> rules_;
    std::optional<Truncation> trunc_;
    mutable std::shared_ptr<const RingSpec> residue_cache_;

    void validate() const;
    MultiPoly rewrite_fixed_point(MultiPoly p) const;
    MultiPoly truncate(const MultiPoly& p) const;
};

} // namespace matpatch
