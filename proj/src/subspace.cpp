#include "lagr/subspace.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace lagr {

Subspace::Subspace(Eigen::MatrixXd orthonormal_basis, const Tolerance& tol)
    : basis_(std::move(orthonormal_basis)) {
    const int k = dim();
    if (k > ambient_dim())
        throw DimensionMismatch("subspace dimension exceeds ambient dimension");
    if (k > 0) {
        const double residual =
            (basis_.transpose() * basis_ -
             Eigen::MatrixXd::Identity(k, k))
                .cwiseAbs()
                .maxCoeff();
        if (residual > std::max(tol.band(1.0), 1e-8))
            throw InvalidArgument("basis columns are not orthonormal, residual " +
                                  std::to_string(residual));
    }
}

Subspace Subspace::zero(int ambient_dim) {
    return Subspace(Eigen::MatrixXd(ambient_dim, 0));
}

Subspace Subspace::full(int ambient_dim) {
    return Subspace(Eigen::MatrixXd::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::coordinate_span(int ambient_dim, int first, int count) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(ambient_dim, count);
    for (int j = 0; j < count; ++j) b(first + j, j) = 1.0;
    return Subspace(std::move(b));
}

Subspace canonicalize(const Eigen::MatrixXd& raw, const Tolerance& tol) {
    const int n = static_cast<int>(raw.rows());
    if (n < 1) throw DimensionMismatch("ambient dimension must be >= 1");
    if (raw.cols() == 0) return Subspace::zero(n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(raw, Eigen::ComputeThinU);
    const Eigen::VectorXd sv = svd.singularValues();
    const double tau = tol.band(sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tau) ++rank;
    return Subspace(svd.matrixU().leftCols(rank));
}

Eigen::VectorXd principal_angle_cosines(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("principal angles: ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Eigen::VectorXd(0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.basis().transpose() * b.basis());
    // clamp rounding overshoot above 1
    return svd.singularValues().cwiseMin(1.0);
}

double largest_principal_angle(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return M_PI / 2.0;
    if (a.dim() == 0) return 0.0;
    const Eigen::VectorXd c = principal_angle_cosines(a, b);
    return std::acos(std::clamp(c[c.size() - 1], -1.0, 1.0));
}

Subspace intersect(const Subspace& a, const Subspace& b,
                   const Tolerance& tol) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("intersect: ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.basis().transpose() * b.basis(),
                                          Eigen::ComputeThinU);
    const Eigen::VectorXd c = svd.singularValues();
    int k = 0;
    for (int i = 0; i < c.size(); ++i)
        if (c[i] >= 1.0 - tol.rel_eps) ++k;
    if (k == 0) return Subspace::zero(a.ambient_dim());
    return Subspace(a.basis() * svd.matrixU().leftCols(k));
}

Subspace sum(const Subspace& a, const Subspace& b, const Tolerance& tol) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("sum: ambient dimension mismatch");
    Eigen::MatrixXd joined(a.ambient_dim(), a.dim() + b.dim());
    joined << a.basis(), b.basis();
    return canonicalize(joined, tol);
}

bool subspace_equal(const Subspace& a, const Subspace& b,
                    const Tolerance& tol) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace_equal: ambient dimension mismatch");
    if (a.dim() != b.dim()) return false;
    if (a.dim() == 0) return true;
    const Eigen::VectorXd c = principal_angle_cosines(a, b);
    return c[c.size() - 1] >= 1.0 - tol.rel_eps;
}

Subspace orthogonal_complement_wrt(const BilinearFormMatrix& form,
                                   const Subspace& a, const Tolerance& tol) {
    if (form.dim() != a.ambient_dim())
        throw DimensionMismatch("orthogonal_complement_wrt: form/subspace dimension mismatch");
    const int n = a.ambient_dim();
    if (a.dim() == 0) return Subspace::full(n);
    const Eigen::MatrixXd constraints = a.basis().transpose() * form.entries();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double tau = tol.band(sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tau) ++rank;
    return Subspace(svd.matrixV().rightCols(n - rank));
}

Subspace map_subspace(const Eigen::MatrixXd& map, const Subspace& a,
                      const Tolerance& tol) {
    if (map.cols() != a.ambient_dim())
        throw DimensionMismatch("map_subspace: dimension mismatch");
    if (a.dim() == 0) return Subspace::zero(static_cast<int>(map.rows()));
    return canonicalize(map * a.basis(), tol);
}

} // namespace lagr
