#pragma once

#include <vector>

#include "lagr/phase_space.hpp"

namespace lagr {

/// A sampled closed loop of lagrangians over [0, 1] in the standard
/// symplectic space.  The final sample must equal the first up to
/// subspace_equal; consecutive samples stay within pi/4.
class LagrangianLoop {
public:
    LagrangianLoop(EpsSpacePtr space, std::vector<double> thetas,
                   std::vector<Subspace> samples, const Tolerance& tol = {});

    const EpsSpacePtr& space() const { return space_; }
    const std::vector<double>& thetas() const { return thetas_; }
    const std::vector<Lagrangian>& samples() const { return samples_; }

private:
    EpsSpacePtr space_;
    std::vector<double> thetas_;
    std::vector<Lagrangian> samples_;
};

/// Winding number of det(X + iY)^2 along the loop; integer valued.
/// Throws SamplingTooCoarse when any single phase increment reaches
/// pi/2 (the winding would be ambiguous).
int loop_maslov_index(const LagrangianLoop& loop, const Tolerance& tol = {});

/// Concatenation of two loops sharing a basepoint; index additive.
LagrangianLoop concatenate(const LagrangianLoop& a, const LagrangianLoop& b,
                           const Tolerance& tol = {});

/// The same loop traversed backwards; index negated.
LagrangianLoop reverse(const LagrangianLoop& loop, const Tolerance& tol = {});

/// Inserts factor - 1 interpolated samples between consecutive entries
/// along the unitary rotation family; index invariant.
LagrangianLoop refine(const LagrangianLoop& loop, int factor,
                      const Tolerance& tol = {});

} // namespace lagr
