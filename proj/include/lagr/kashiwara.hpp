#pragma once

#include <array>
#include <optional>

#include "lagr/phase_space.hpp"

namespace lagr {

/// The symmetric polarization Psi of the Leray-Kashiwara quadratic
/// form q(x1,x2,x3) = phi(x1,x2) + phi(x2,x3) + phi(x3,x1) on
/// L1 + L2 + L3, expressed in the supplied bases of the three slots.
/// Psi(x, x) = 2 q(x); blocks (1,2), (2,3), (3,1) are Bi^T M Bj.
struct KashiwaraForm {
    BilinearFormMatrix matrix;          // 3n' x 3n', eps = +1
    std::array<int, 3> block_dims;
};

/// A nonzero vector in the radical of Psi built from an intersection
/// vector y placed in the two intersecting slots (and 0 in the third).
struct RadicalWitness {
    Eigen::VectorXd vector;   // 3n' coordinates w.r.t. the slot bases
    int pair_first = 0;       // 1-based slot indices
    int pair_second = 0;
    Eigen::VectorXd carrier;  // the ambient intersection vector y
};

struct TransversalityReport {
    bool pairwise_transversal = false;
    bool form_nondegenerate = false;
    std::optional<RadicalWitness> witness;
};

/// Raw-basis entry point: each basis is n x n', full column rank and
/// isotropic (columns need not be orthonormal).  The matrix entries
/// depend on the chosen bases; rank and signature do not.
KashiwaraForm kashiwara_bilinear(const EpsSpacePtr& space,
                                 const Eigen::MatrixXd& b1,
                                 const Eigen::MatrixXd& b2,
                                 const Eigen::MatrixXd& b3,
                                 const Tolerance& tol = {});

KashiwaraForm kashiwara_bilinear(const EpsSpacePtr& space,
                                 const Lagrangian& l1, const Lagrangian& l2,
                                 const Lagrangian& l3,
                                 const Tolerance& tol = {});

/// Both sides of the transversality criterion, computed independently:
/// pairwise intersections versus numerical rank of Psi.
TransversalityReport transversality_criterion(const EpsSpacePtr& space,
                                              const Lagrangian& l1,
                                              const Lagrangian& l2,
                                              const Lagrangian& l3,
                                              const Tolerance& tol = {});

/// signature(Psi) = positives - negatives; for degenerate triples the
/// tolerance band drops the radical, giving the quotient signature.
int triple_index(const EpsSpacePtr& space, const Lagrangian& l1,
                 const Lagrangian& l2, const Lagrangian& l3,
                 const Tolerance& tol = {});

struct SplittingReport {
    double hyperbolic_residual = 0.0;  // Psi on {(x1,x2,0)} vs H(L1)
    double complement_residual = 0.0;  // Psi-orthogonality of E3 to H(L1)
    double restriction_residual = 0.0; // Psi|E3 vs -2 g
    int rank = 0;
    Signature psi_signature;
};

/// Checks the orthogonal splitting F = E3 perp H(L1) for the standard
/// triple (L, L*, graph(g)) with invertible symmetric g.
SplittingReport verify_splitting(int nprime, const GraphMap& g,
                                 const Tolerance& tol = {});

/// The fiber-scale class [Psi] - H(L1) as (rank delta, signature).
struct LKClass {
    int rank_delta = 0;
    int signature = 0;
    bool operator==(const LKClass&) const = default;
};

/// Requires the triple pairwise transversal; rank_delta = rank(Psi) - 2n'
/// and signature = signature(Psi).  Equals (n', -signature(g)) for a
/// normalized graph triple.
LKClass lk_invariant(const EpsSpacePtr& space, const Lagrangian& l1,
                     const Lagrangian& l2, const Lagrangian& l3,
                     const Tolerance& tol = {});

} // namespace lagr
