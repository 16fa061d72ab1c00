#pragma once

#include <Eigen/Dense>

#include "lagr/forms.hpp"
#include "lagr/tolerance.hpp"

namespace lagr {

/// A linear subspace of R^n stored as an n x k matrix with orthonormal
/// columns.  k = 0 (the zero subspace) is a first-class value.
class Subspace {
public:
    /// Wraps an already-orthonormal basis; checks Q^T Q = I.
    Subspace(Eigen::MatrixXd orthonormal_basis, const Tolerance& tol = {});

    /// The zero subspace of R^n.
    static Subspace zero(int ambient_dim);
    /// Full space R^n.
    static Subspace full(int ambient_dim);
    /// Span of the coordinate vectors e_{first}, ..., e_{first+count-1}.
    static Subspace coordinate_span(int ambient_dim, int first, int count);

    int ambient_dim() const { return static_cast<int>(basis_.rows()); }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXd& basis() const { return basis_; }

private:
    Eigen::MatrixXd basis_;
};

/// Orthonormal basis of the numerical column space of `raw`; the
/// reported dimension is the numerical rank.
Subspace canonicalize(const Eigen::MatrixXd& raw, const Tolerance& tol = {});

/// Cosines of the principal angles between a and b (sorted descending);
/// length min(dim a, dim b).
Eigen::VectorXd principal_angle_cosines(const Subspace& a, const Subspace& b);

/// Largest principal angle between a and b, in radians.  Subspaces of
/// different dimension compare via the smaller one's angles plus pi/2
/// for the unmatched directions.
double largest_principal_angle(const Subspace& a, const Subspace& b);

Subspace intersect(const Subspace& a, const Subspace& b,
                   const Tolerance& tol = {});

Subspace sum(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

bool subspace_equal(const Subspace& a, const Subspace& b,
                    const Tolerance& tol = {});

/// {x : phi(x, v) = 0 for every v in a}, the kernel of basis^T M.
Subspace orthogonal_complement_wrt(const BilinearFormMatrix& form,
                                   const Subspace& a,
                                   const Tolerance& tol = {});

/// Image of a subspace under an invertible linear map (re-canonicalized).
Subspace map_subspace(const Eigen::MatrixXd& map, const Subspace& a,
                      const Tolerance& tol = {});

} // namespace lagr
