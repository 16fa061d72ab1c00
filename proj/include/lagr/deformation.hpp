#pragma once

#include <vector>

#include "lagr/phase_space.hpp"

namespace lagr {

/// A sampled one-parameter family of lagrangians over t in [0, 1].
/// Samples are validated on construction: t strictly increasing from 0
/// to 1, every entry lagrangian, consecutive entries within pi/4.
class LagrangianPath {
public:
    LagrangianPath(EpsSpacePtr space, std::vector<double> ts,
                   std::vector<Subspace> samples, const Tolerance& tol = {});

    const EpsSpacePtr& space() const { return space_; }
    const std::vector<double>& ts() const { return ts_; }
    const std::vector<Lagrangian>& samples() const { return samples_; }
    const Lagrangian& start() const { return samples_.front(); }
    const Lagrangian& end() const { return samples_.back(); }

private:
    EpsSpacePtr space_;
    std::vector<double> ts_;
    std::vector<Lagrangian> samples_;
};

/// Path t -> graph((1-t) g + t I) in the standard symplectic space;
/// the endpoint is transversal to both hyperbolic factors.
LagrangianPath deform_third_to_transversal(int nprime, const GraphMap& g,
                                           int steps,
                                           const Tolerance& tol = {});

/// Paths for a family g_3, ..., g_m; the i-th (0-based) input targets
/// (i+3) * I, so all endpoints are pairwise transversal and transversal
/// to both factors.
std::vector<LagrangianPath> deform_family_to_mutually_transversal(
    int nprime, const std::vector<GraphMap>& gs, int steps,
    const Tolerance& tol = {});

struct SkewDeformationResult {
    bool stabilized = false;
    int original_nprime = 0;
    int effective_nprime = 0;
    std::vector<LagrangianPath> paths;
};

/// Symmetric (eps = +1) analogue: skew graph maps are deformed to
/// multiples of the standard invertible skew matrix.  Odd n' is first
/// stabilized by doubling (L -> L + L).
SkewDeformationResult deform_family_symmetric(int nprime,
                                              const std::vector<GraphMap>& gs,
                                              int steps,
                                              const Tolerance& tol = {});

/// A complex structure J (J^2 = -I) compatible with a nondegenerate
/// skew form, via polar decomposition of the form matrix.
Eigen::MatrixXd compatible_complex_structure(const BilinearFormMatrix& form);

/// Path rotating l2 to a lagrangian transversal to l1, using the flow
/// exp(theta J); the stopping angle is picked from a fixed grid of 64
/// candidates maximizing the smallest principal angle to l1.
LagrangianPath make_transversal_pair(const EpsSpacePtr& space,
                                     const Lagrangian& l1,
                                     const Lagrangian& l2, int steps,
                                     const Tolerance& tol = {});

} // namespace lagr
