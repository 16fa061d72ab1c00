#include "lagr/phase_space.hpp"

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

} // namespace

EpsSpace::EpsSpace(BilinearFormMatrix form, const Tolerance& tol)
    : form_(std::move(form)) {
    if (form_.dim() % 2 != 0)
        throw DimensionMismatch("eps-hermitian space dimension must be even");
    if (!is_nondegenerate(form_, tol))
        throw InvalidArgument("eps-hermitian form must be nondegenerate");
}

bool EpsSpace::is_standard(const Tolerance& tol) const {
    const BilinearFormMatrix std_form = hyperbolic_form(half_dim(), epsilon());
    const double residual =
        (form_.entries() - std_form.entries()).cwiseAbs().maxCoeff();
    return residual <= tol.band(1.0);
}

GraphMap::GraphMap(int eps, Eigen::MatrixXd m, const Tolerance& tol)
    : epsilon(eps), entries(std::move(m)) {
    if (entries.rows() != entries.cols())
        throw DimensionMismatch("graph map must be square");
    if (entries.size() > 0) {
        const double scale = std::max(entries.cwiseAbs().maxCoeff(), 1.0);
        const double residual =
            (entries.transpose() + eps * entries).cwiseAbs().maxCoeff();
        if (residual > tol.band(scale))
            throw SymmetryViolation(
                "graph map must satisfy g^T = -eps*g, residual " +
                std::to_string(residual));
    }
}

StandardSpace standard_space(int nprime, int epsilon) {
    if (nprime < 1) throw InvalidArgument("standard_space: nprime must be >= 1");
    auto space = std::make_shared<EpsSpace>(hyperbolic_form(nprime, epsilon));
    StandardSpace out{space,
                      validate_lagrangian(
                          space, Subspace::coordinate_span(2 * nprime, 0, nprime)),
                      validate_lagrangian(
                          space,
                          Subspace::coordinate_span(2 * nprime, nprime, nprime))};
    return out;
}

Lagrangian validate_lagrangian(const EpsSpacePtr& space,
                               const Subspace& candidate,
                               const Tolerance& tol) {
    if (candidate.ambient_dim() != space->dim())
        throw DimensionMismatch("lagrangian candidate lives in the wrong ambient space");
    if (candidate.dim() != space->half_dim())
        throw WrongDimension("lagrangian must have dimension " +
                             std::to_string(space->half_dim()) + ", got " +
                             std::to_string(candidate.dim()));
    const Eigen::MatrixXd gram = candidate.basis().transpose() *
                                 space->form().entries() * candidate.basis();
    const double residual =
        gram.size() > 0 ? gram.cwiseAbs().maxCoeff() : 0.0;
    const double scale = space->form().entries().cwiseAbs().maxCoeff();
    if (residual > tol.band(scale))
        throw NotIsotropic("candidate is not isotropic, residual " +
                           std::to_string(residual));
    return Lagrangian{space, candidate, residual};
}

bool same_space(const Lagrangian& a, const Lagrangian& b,
                const Tolerance& tol) {
    if (a.space == b.space) return true;
    if (a.space->dim() != b.space->dim() ||
        a.space->epsilon() != b.space->epsilon())
        return false;
    const double residual =
        (a.space->form().entries() - b.space->form().entries())
            .cwiseAbs()
            .maxCoeff();
    return residual <= tol.band(1.0);
}

bool are_transversal(const Lagrangian& l1, const Lagrangian& l2,
                     const Tolerance& tol) {
    if (!same_space(l1, l2, tol))
        throw DimensionMismatch("are_transversal: lagrangians live in different spaces");
    return intersect(l1.subspace, l2.subspace, tol).dim() == 0;
}

Lagrangian graph_lagrangian(const EpsSpacePtr& space, const GraphMap& g,
                            const Tolerance& tol) {
    if (!space->is_standard(tol))
        throw InvalidArgument("graph_lagrangian requires the standard hyperbolic space");
    if (g.epsilon != space->epsilon())
        throw EpsilonMismatch("graph_lagrangian: epsilon mismatch");
    const int np = space->half_dim();
    if (g.dim() != np)
        throw DimensionMismatch("graph map size does not match the space");
    Eigen::MatrixXd raw(2 * np, np);
    raw.topRows(np) = Eigen::MatrixXd::Identity(np, np);
    raw.bottomRows(np) = g.entries;
    return validate_lagrangian(space, canonicalize(raw, tol), tol);
}

GraphMap extract_graph_map(const EpsSpacePtr& space, const Lagrangian& l3,
                           const Tolerance& tol) {
    if (!space->is_standard(tol))
        throw InvalidArgument("extract_graph_map requires the standard hyperbolic space");
    const int np = space->half_dim();
    if (l3.subspace.ambient_dim() != space->dim() || l3.subspace.dim() != np)
        throw DimensionMismatch("extract_graph_map: wrong lagrangian shape");
    const Eigen::MatrixXd top = l3.subspace.basis().topRows(np);
    if (numerical_rank(top, tol) < np)
        throw NotTransversalToLstar(
            "lagrangian is not transversal to the L* factor");
    const Eigen::MatrixXd bottom = l3.subspace.basis().bottomRows(np);
    Eigen::MatrixXd g = bottom * top.inverse();
    // project onto the exact symmetry type
    g = 0.5 * (g - space->epsilon() * g.transpose());
    return GraphMap(space->epsilon(), std::move(g), tol);
}

StabilizedData stabilize(const EpsSpacePtr& space,
                         const std::vector<Lagrangian>& lagrangians, int k,
                         const Tolerance& tol) {
    if (k < 0) throw InvalidArgument("stabilize: k must be >= 0");
    const int n = space->dim();
    const int np = space->half_dim();
    auto bigger = std::make_shared<EpsSpace>(
        direct_sum(space->form(), hyperbolic_form(k, space->epsilon())));
    StabilizedData out;
    out.space = bigger;
    for (const auto& l : lagrangians) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n + 2 * k, np + k);
        b.topLeftCorner(n, np) = l.subspace.basis();
        b.block(n, np, k, k) = Eigen::MatrixXd::Identity(k, k);
        out.lagrangians.push_back(
            validate_lagrangian(bigger, Subspace(std::move(b), tol), tol));
    }
    return out;
}

Eigen::MatrixXd darboux_pair_normalization(const EpsSpacePtr& space,
                                           const Lagrangian& l1,
                                           const Lagrangian& l2,
                                           const Tolerance& tol) {
    if (!same_space(l1, l2, tol))
        throw DimensionMismatch("darboux_pair_normalization: space mismatch");
    const int np = space->half_dim();
    const Eigen::MatrixXd& m = space->form().entries();
    const Eigen::MatrixXd& b2 = l2.subspace.basis();
    const Eigen::MatrixXd& a1 = l1.subspace.basis();
    // The restricted pairing l2 x l1 is nondegenerate iff the pair is
    // transversal.
    const Eigen::MatrixXd pairing = b2.transpose() * m * a1;
    if (numerical_rank(pairing, tol) < np)
        throw NotTransversal("darboux_pair_normalization: lagrangians are not transversal");
    const Eigen::MatrixXd dual = a1 * pairing.inverse();
    Eigen::MatrixXd p(space->dim(), 2 * np);
    p.leftCols(np) = b2;
    p.rightCols(np) = dual;
    return p;
}

} // namespace lagr
