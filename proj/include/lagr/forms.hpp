#pragma once

#include <Eigen/Dense>

#include "lagr/errors.hpp"
#include "lagr/tolerance.hpp"

namespace lagr {

/// Eigenvalue counts of a symmetric form relative to a zero band.
struct Signature {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;

    int index() const { return positives - negatives; }
    int rank() const { return positives + negatives; }

    Signature operator+(const Signature& o) const {
        return {positives + o.positives, negatives + o.negatives,
                zeros + o.zeros};
    }
    bool operator==(const Signature&) const = default;
};

/// An n x n real matrix with a declared symmetry sign:
/// M^T = eps * M (symmetric for eps = +1, skew for eps = -1).
class BilinearFormMatrix {
public:
    BilinearFormMatrix(int epsilon, Eigen::MatrixXd entries,
                       const Tolerance& tol = {});

    int epsilon() const { return epsilon_; }
    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const { return entries_; }

    /// phi(x, y) = x^T M y
    double evaluate(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
        return x.dot(entries_ * y);
    }

private:
    int epsilon_;
    Eigen::MatrixXd entries_;
};

/// Eigenvalue signature of a symmetric (eps = +1) form.  Eigenvalues
/// within the band tol.band(spectral radius) count as zeros.
Signature signature(const BilinearFormMatrix& form, const Tolerance& tol = {});

/// Numerical rank (singular values above tol.band(sigma_max)) equals n.
bool is_nondegenerate(const BilinearFormMatrix& form,
                      const Tolerance& tol = {});

/// The 2k x 2k block form [[0, I], [eps*I, 0]].
BilinearFormMatrix hyperbolic_form(int k, int epsilon);

/// Block-diagonal sum; requires matching epsilon.
BilinearFormMatrix direct_sum(const BilinearFormMatrix& f1,
                              const BilinearFormMatrix& f2);

} // namespace lagr
