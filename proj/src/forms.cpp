#include "lagr/forms.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace lagr {

BilinearFormMatrix::BilinearFormMatrix(int epsilon, Eigen::MatrixXd entries,
                                       const Tolerance& tol)
    : epsilon_(epsilon), entries_(std::move(entries)) {
    if (epsilon_ != 1 && epsilon_ != -1)
        throw InvalidArgument("epsilon must be +1 or -1");
    if (entries_.rows() != entries_.cols())
        throw DimensionMismatch("form matrix must be square");
    const double scale = entries_.size() > 0
                             ? entries_.cwiseAbs().maxCoeff()
                             : 0.0;
    const double residual =
        entries_.size() > 0
            ? (entries_.transpose() - epsilon_ * entries_).cwiseAbs().maxCoeff()
            : 0.0;
    if (residual > tol.band(scale))
        throw SymmetryViolation(
            "matrix violates declared epsilon-symmetry, residual " +
            std::to_string(residual));
}

Signature signature(const BilinearFormMatrix& form, const Tolerance& tol) {
    if (form.epsilon() != 1)
        throw EpsilonMismatch("signature is defined for symmetric (eps=+1) forms only");
    const int n = form.dim();
    if (n == 0) return {0, 0, 0};
    Eigen::MatrixXd sym =
        0.5 * (form.entries() + form.entries().transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double tau = tol.band(ev.cwiseAbs().maxCoeff());
    Signature s;
    for (int i = 0; i < n; ++i) {
        if (ev[i] > tau)
            ++s.positives;
        else if (ev[i] < -tau)
            ++s.negatives;
        else
            ++s.zeros;
    }
    return s;
}

bool is_nondegenerate(const BilinearFormMatrix& form, const Tolerance& tol) {
    const int n = form.dim();
    if (n == 0) return true;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(form.entries());
    const Eigen::VectorXd sv = svd.singularValues();
    const double tau = tol.band(sv[0]);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tau) ++rank;
    return rank == n;
}

BilinearFormMatrix hyperbolic_form(int k, int epsilon) {
    if (k < 0) throw InvalidArgument("hyperbolic_form: k must be >= 0");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    m.topRightCorner(k, k) = Eigen::MatrixXd::Identity(k, k);
    m.bottomLeftCorner(k, k) =
        epsilon * Eigen::MatrixXd::Identity(k, k);
    return BilinearFormMatrix(epsilon, std::move(m));
}

BilinearFormMatrix direct_sum(const BilinearFormMatrix& f1,
                              const BilinearFormMatrix& f2) {
    if (f1.epsilon() != f2.epsilon())
        throw EpsilonMismatch("direct_sum: mismatched epsilon");
    const int n1 = f1.dim(), n2 = f2.dim();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
    m.topLeftCorner(n1, n1) = f1.entries();
    m.bottomRightCorner(n2, n2) = f2.entries();
    return BilinearFormMatrix(f1.epsilon(), std::move(m));
}

} // namespace lagr
