#pragma once

#include <map>
#include <string>

#include "matpatch/ringelem.hpp"

namespace matpatch {

// Ring homomorphism given by a variable assignment. Construction verifies
// that every source relation maps to 0 and that truncated source variables
// map to nilpotents of compatible order.
class RingHom {
public:
    RingHom(SpecPtr source, SpecPtr target, std::map<std::string, RingElem> assignment);

    // canonical map between specs sharing variable names: each source
    // variable goes to the same-named target variable (normalized there)
    static RingHom canonical(const SpecPtr& source, const SpecPtr& target);

    const SpecPtr& source() const { return source_; }
    const SpecPtr& target() const { return target_; }
    const RingElem& image_of(std::size_t var_idx) const { return images_[var_idx]; }

    RingElem apply(const RingElem& e) const;
    MultiPoly apply_raw(const MultiPoly& p) const; // p over the source presentation

private:
    SpecPtr source_;
    SpecPtr target_;
    std::vector<RingElem> images_; // indexed by source variable
};

inline RingElem apply_hom(const RingHom& h, const RingElem& e) { return h.apply(e); }

} // namespace matpatch
