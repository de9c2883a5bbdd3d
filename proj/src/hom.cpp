#include "matpatch/hom.hpp"

namespace matpatch {

RingHom::RingHom(SpecPtr source, SpecPtr target, std::map<std::string, RingElem> assignment)
    : source_(std::move(source)), target_(std::move(target)) {
    images_.reserve(source_->nvars());
    for (const auto& name : source_->vars()) {
        auto it = assignment.find(name);
        require(it != assignment.end(), "AssignmentNotAHom",
                "no image provided for variable " + name);
        require(it->second.spec() == target_ ||
                    it->second.spec()->same_presentation(*target_),
                "SpecMismatch", "image of " + name + " lives in the wrong ring");
        images_.push_back(it->second);
    }

    // additional assigned names must be declared somewhere
    for (const auto& [name, img] : assignment)
        require(source_->var_index(name).has_value(), "AssignmentNotAHom",
                "assignment mentions undeclared variable " + name);

    // every source relation must map to 0
    for (const auto& rule : source_->rules()) {
        MultiPoly rel = MultiPoly::term(rule.lhs, Coeff::one(source_->base())) - rule.rhs;
        RingElem img = RingElem(target_, apply_raw(rel));
        require(img.is_zero(), "AssignmentNotAHom",
                "relation does not map to zero: " +
                    poly_to_string(rel, source_->vars()));
    }

    // truncated source variables must map to nilpotents of compatible order
    if (source_->truncation()) {
        unsigned n = source_->truncation()->order;
        for (auto idx : source_->truncation()->vars) {
            RingElem img = images_[idx];
            require(img.pow(n).is_zero(), "AssignmentNotAHom",
                    "image of truncated variable " + source_->vars()[idx] +
                        " is not nilpotent of order " + std::to_string(n));
        }
    }
}

RingHom RingHom::canonical(const SpecPtr& source, const SpecPtr& target) {
    std::map<std::string, RingElem> assignment;
    for (const auto& name : source->vars()) {
        if (target->var_index(name))
            assignment.emplace(name, RingElem::variable(target, name));
        else
            assignment.emplace(name, RingElem::zero(target));
    }
    return RingHom(source, target, std::move(assignment));
}

MultiPoly RingHom::apply_raw(const MultiPoly& p) const {
    MultiPoly out = MultiPoly::zero();
    for (const auto& [m, c] : p.terms()) {
        RingElem term = RingElem(target_, MultiPoly::constant(
            target_->nvars(), convert_coeff(c, target_->base())));
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            if (m.exp[i] > 0) term = term * images_[i].pow(m.exp[i]);
        out = out + term.poly();
    }
    return out;
}

RingElem RingHom::apply(const RingElem& e) const {
    require(e.spec() == source_ || e.spec()->same_presentation(*source_), "SpecMismatch",
            "element does not belong to the source ring");
    return RingElem(target_, apply_raw(e.poly()));
}

} // namespace matpatch
