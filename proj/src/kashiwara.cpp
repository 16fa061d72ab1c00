#include "lagr/kashiwara.hpp"

#include <Eigen/SVD>

namespace lagr {

namespace {

int numerical_rank(const Eigen::MatrixXd& m, const Tolerance& tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd sv = svd.singularValues();
    const double tau = tol.band(sv[0]);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tau) ++rank;
    return rank;
}

void check_slot_basis(const EpsSpacePtr& space, const Eigen::MatrixXd& b,
                      int slot, const Tolerance& tol) {
    const int n = space->dim();
    const int np = space->half_dim();
    if (b.rows() != n || b.cols() != np)
        throw WrongDimension("kashiwara slot " + std::to_string(slot) +
                             ": basis must be " + std::to_string(n) + " x " +
                             std::to_string(np));
    if (numerical_rank(b, tol) < np)
        throw WrongDimension("kashiwara slot " + std::to_string(slot) +
                             ": basis is rank deficient");
    const Eigen::MatrixXd gram =
        b.transpose() * space->form().entries() * b;
    const double scale = b.cwiseAbs().maxCoeff() * b.cwiseAbs().maxCoeff() *
                         space->form().entries().cwiseAbs().maxCoeff() *
                         space->dim();
    if (gram.cwiseAbs().maxCoeff() > tol.band(scale))
        throw NotIsotropic("kashiwara slot " + std::to_string(slot) +
                           ": basis is not isotropic");
}

} // namespace

KashiwaraForm kashiwara_bilinear(const EpsSpacePtr& space,
                                 const Eigen::MatrixXd& b1,
                                 const Eigen::MatrixXd& b2,
                                 const Eigen::MatrixXd& b3,
                                 const Tolerance& tol) {
    if (space->epsilon() != -1)
        throw EpsilonMismatch("the Leray-Kashiwara form needs a symplectic space");
    check_slot_basis(space, b1, 1, tol);
    check_slot_basis(space, b2, 2, tol);
    check_slot_basis(space, b3, 3, tol);
    const int np = space->half_dim();
    const Eigen::MatrixXd& m = space->form().entries();
    Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(3 * np, 3 * np);
    const Eigen::MatrixXd s12 = b1.transpose() * m * b2;
    const Eigen::MatrixXd s23 = b2.transpose() * m * b3;
    const Eigen::MatrixXd s31 = b3.transpose() * m * b1;
    psi.block(0, np, np, np) = s12;
    psi.block(np, 0, np, np) = s12.transpose();
    psi.block(np, 2 * np, np, np) = s23;
    psi.block(2 * np, np, np, np) = s23.transpose();
    psi.block(2 * np, 0, np, np) = s31;
    psi.block(0, 2 * np, np, np) = s31.transpose();
    return KashiwaraForm{BilinearFormMatrix(+1, std::move(psi), tol),
                         {np, np, np}};
}

KashiwaraForm kashiwara_bilinear(const EpsSpacePtr& space,
                                 const Lagrangian& l1, const Lagrangian& l2,
                                 const Lagrangian& l3, const Tolerance& tol) {
    if (!same_space(l1, l2, tol) || !same_space(l1, l3, tol))
        throw DimensionMismatch("kashiwara_bilinear: lagrangians live in different spaces");
    return kashiwara_bilinear(space, l1.subspace.basis(), l2.subspace.basis(),
                              l3.subspace.basis(), tol);
}

TransversalityReport transversality_criterion(const EpsSpacePtr& space,
                                              const Lagrangian& l1,
                                              const Lagrangian& l2,
                                              const Lagrangian& l3,
                                              const Tolerance& tol) {
    const KashiwaraForm psi = kashiwara_bilinear(space, l1, l2, l3, tol);
    TransversalityReport report;
    report.form_nondegenerate = is_nondegenerate(psi.matrix, tol);

    const std::array<const Lagrangian*, 3> ls = {&l1, &l2, &l3};
    const std::array<std::pair<int, int>, 3> pairs = {
        {{0, 1}, {0, 2}, {1, 2}}};
    report.pairwise_transversal = true;
    const int np = space->half_dim();
    for (const auto& [i, j] : pairs) {
        const Subspace common =
            intersect(ls[i]->subspace, ls[j]->subspace, tol);
        if (common.dim() == 0) continue;
        report.pairwise_transversal = false;
        if (!report.witness) {
            const Eigen::VectorXd y = common.basis().col(0);
            Eigen::VectorXd w = Eigen::VectorXd::Zero(3 * np);
            w.segment(i * np, np) =
                ls[i]->subspace.basis().colPivHouseholderQr().solve(y);
            w.segment(j * np, np) =
                ls[j]->subspace.basis().colPivHouseholderQr().solve(y);
            report.witness = RadicalWitness{w, i + 1, j + 1, y};
        }
    }
    return report;
}

int triple_index(const EpsSpacePtr& space, const Lagrangian& l1,
                 const Lagrangian& l2, const Lagrangian& l3,
                 const Tolerance& tol) {
    const KashiwaraForm psi = kashiwara_bilinear(space, l1, l2, l3, tol);
    return signature(psi.matrix, tol).index();
}

SplittingReport verify_splitting(int nprime, const GraphMap& g,
                                 const Tolerance& tol) {
    if (g.epsilon != -1)
        throw EpsilonMismatch("verify_splitting expects a symmetric graph map (eps = -1)");
    if (g.dim() != nprime)
        throw DimensionMismatch("graph map size does not match nprime");
    if (numerical_rank(g.entries, tol) < nprime)
        throw NotInvertible("verify_splitting: graph map must be invertible");

    const auto std_space = standard_space(nprime, -1);
    const int np = nprime;
    Eigen::MatrixXd b1(2 * np, np), b2(2 * np, np), b3(2 * np, np);
    b1 << Eigen::MatrixXd::Identity(np, np), Eigen::MatrixXd::Zero(np, np);
    b2 << Eigen::MatrixXd::Zero(np, np), Eigen::MatrixXd::Identity(np, np);
    b3 << Eigen::MatrixXd::Identity(np, np), g.entries;
    const KashiwaraForm kf =
        kashiwara_bilinear(std_space.space, b1, b2, b3, tol);
    const Eigen::MatrixXd& psi = kf.matrix.entries();

    SplittingReport report;
    // (i) {(x1, x2, 0)} carries H(L1)
    report.hyperbolic_residual =
        (psi.topLeftCorner(2 * np, 2 * np) -
         hyperbolic_form(np, +1).entries())
            .cwiseAbs()
            .maxCoeff();
    // (ii) E3 = {(u, g u, u)} in slot coordinates is Psi-orthogonal to it
    Eigen::MatrixXd e3(3 * np, np);
    e3 << Eigen::MatrixXd::Identity(np, np), g.entries,
        Eigen::MatrixXd::Identity(np, np);
    report.complement_residual =
        (psi * e3).topRows(2 * np).cwiseAbs().maxCoeff();
    // (iii) Psi restricted to E3 equals -2 <u, g v>
    report.restriction_residual =
        (e3.transpose() * psi * e3 + 2.0 * g.entries).cwiseAbs().maxCoeff();

    report.psi_signature = signature(kf.matrix, tol);
    report.rank = report.psi_signature.rank();
    return report;
}

LKClass lk_invariant(const EpsSpacePtr& space, const Lagrangian& l1,
                     const Lagrangian& l2, const Lagrangian& l3,
                     const Tolerance& tol) {
    const TransversalityReport crit =
        transversality_criterion(space, l1, l2, l3, tol);
    if (!crit.pairwise_transversal || !crit.form_nondegenerate)
        throw NotTransversalTriple(
            "lk_invariant requires a pairwise transversal triple");
    const KashiwaraForm psi = kashiwara_bilinear(space, l1, l2, l3, tol);
    const Signature s = signature(psi.matrix, tol);
    return LKClass{s.rank() - space->dim(), s.index()};
}

} // namespace lagr
