#pragma once

#include "trilab/enumerate.hpp"

namespace trilab {

// Unique normal form equivalent to t: fit into the width box, then pick the
// single box member the fitted triangle is equivalent to.
inline NormalForm canonical_form(const Triangle& t) {
    FitResult fit = fit_to_rectangle(t);
    std::optional<NormalForm> found;
    for_each_normal_form(fit.box.w, fit.box.h, [&](const NormalForm& nf) {
        if (!found && are_equivalent(fit.triangle, nf.triangle)) found = nf;
    });
    if (!found) throw std::logic_error("no normal form equivalent to the fitted triangle");
    return *found;
}

}  // namespace trilab
