#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "lagr/forms.hpp"
#include "lagr/subspace.hpp"

namespace lagr {

/// An even-dimensional real space with a nondegenerate eps-hermitian form.
class EpsSpace {
public:
    EpsSpace(BilinearFormMatrix form, const Tolerance& tol = {});

    int dim() const { return form_.dim(); }
    int half_dim() const { return form_.dim() / 2; }
    int epsilon() const { return form_.epsilon(); }
    const BilinearFormMatrix& form() const { return form_; }

    /// True when the form is the standard hyperbolic one in these
    /// coordinates (needed by graph-lagrangian operations).
    bool is_standard(const Tolerance& tol = {}) const;

private:
    BilinearFormMatrix form_;
};

using EpsSpacePtr = std::shared_ptr<const EpsSpace>;

/// A validated half-dimensional self-orthogonal subspace.
struct Lagrangian {
    EpsSpacePtr space;
    Subspace subspace;
    double isotropy_residual = 0.0;
};

/// An n' x n' map g : L -> L* whose graph is lagrangian; requires
/// g^T = -eps * g.
struct GraphMap {
    int epsilon;
    Eigen::MatrixXd entries;

    GraphMap(int eps, Eigen::MatrixXd m, const Tolerance& tol = {});
    int dim() const { return static_cast<int>(entries.rows()); }
};

struct StandardSpace {
    EpsSpacePtr space;
    Lagrangian l_factor;     // span of the first n' coordinates
    Lagrangian lstar_factor; // span of the last n' coordinates
};

/// H(L) = L + L* with form [[0, I], [eps*I, 0]], i.e. the pairing
/// phi((a,alpha),(b,beta)) = <a,beta> + eps <b,alpha>.
StandardSpace standard_space(int nprime, int epsilon);

Lagrangian validate_lagrangian(const EpsSpacePtr& space,
                               const Subspace& candidate,
                               const Tolerance& tol = {});

bool same_space(const Lagrangian& a, const Lagrangian& b,
                const Tolerance& tol = {});

bool are_transversal(const Lagrangian& l1, const Lagrangian& l2,
                     const Tolerance& tol = {});

/// The subspace {(u, g u)}; always lagrangian, always transversal to
/// the L* factor, transversal to the L factor iff g is invertible.
Lagrangian graph_lagrangian(const EpsSpacePtr& space, const GraphMap& g,
                            const Tolerance& tol = {});

/// Inverse of graph_lagrangian: requires l3 transversal to the L* factor.
GraphMap extract_graph_map(const EpsSpacePtr& space, const Lagrangian& l3,
                           const Tolerance& tol = {});

struct StabilizedData {
    EpsSpacePtr space;
    std::vector<Lagrangian> lagrangians;
};

/// E -> E + H(R^k); every lagrangian gains the L-factor summand of the
/// added hyperbolic block.
StabilizedData stabilize(const EpsSpacePtr& space,
                         const std::vector<Lagrangian>& lagrangians, int k,
                         const Tolerance& tol = {});

/// Invertible P with P^T M P = hyperbolic(n', eps), carrying the L
/// factor onto l2 and the L* factor onto l1.
Eigen::MatrixXd darboux_pair_normalization(const EpsSpacePtr& space,
                                           const Lagrangian& l1,
                                           const Lagrangian& l2,
                                           const Tolerance& tol = {});

} // namespace lagr
