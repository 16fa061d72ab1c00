#include "lagr/deformation.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace lagr {

namespace {

std::vector<double> linear_grid(int steps) {
    if (steps < 2) throw InvalidArgument("steps must be >= 2");
    std::vector<double> ts(steps);
    for (int i = 0; i < steps; ++i)
        ts[i] = static_cast<double>(i) / (steps - 1);
    ts.front() = 0.0;
    ts.back() = 1.0;
    return ts;
}

LagrangianPath graph_segment(const StandardSpace& std_space,
                             const Eigen::MatrixXd& g_start,
                             const Eigen::MatrixXd& g_end, int steps,
                             const Tolerance& tol) {
    const int np = std_space.space->half_dim();
    const auto ts = linear_grid(steps);
    std::vector<Subspace> samples;
    samples.reserve(ts.size());
    Eigen::MatrixXd raw(2 * np, np);
    raw.topRows(np) = Eigen::MatrixXd::Identity(np, np);
    for (double t : ts) {
        raw.bottomRows(np) = (1.0 - t) * g_start + t * g_end;
        samples.push_back(canonicalize(raw, tol));
    }
    return LagrangianPath(std_space.space, ts, std::move(samples), tol);
}

Eigen::MatrixXd standard_skew(int nprime) {
    if (nprime % 2 != 0)
        throw InvalidArgument("standard skew matrix needs even size");
    const int half = nprime / 2;
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(nprime, nprime);
    omega.topRightCorner(half, half) = Eigen::MatrixXd::Identity(half, half);
    omega.bottomLeftCorner(half, half) =
        -Eigen::MatrixXd::Identity(half, half);
    return omega;
}

} // namespace

LagrangianPath::LagrangianPath(EpsSpacePtr space, std::vector<double> ts,
                               std::vector<Subspace> samples,
                               const Tolerance& tol)
    : space_(std::move(space)), ts_(std::move(ts)) {
    if (ts_.size() != samples.size() || ts_.size() < 2)
        throw InvalidArgument("path needs at least two matching samples");
    if (ts_.front() != 0.0 || ts_.back() != 1.0)
        throw InvalidArgument("path parameter must run from 0 to 1");
    for (std::size_t i = 1; i < ts_.size(); ++i)
        if (!(ts_[i] > ts_[i - 1]))
            throw InvalidArgument("path parameter must be strictly increasing");
    samples_.reserve(samples.size());
    for (auto& s : samples)
        samples_.push_back(validate_lagrangian(space_, s, tol));
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        const double angle = largest_principal_angle(
            samples_[i - 1].subspace, samples_[i].subspace);
        if (angle >= M_PI / 4.0)
            throw SamplingTooCoarse(
                "consecutive path samples are further apart than pi/4");
    }
}

LagrangianPath deform_third_to_transversal(int nprime, const GraphMap& g,
                                           int steps, const Tolerance& tol) {
    if (g.epsilon != -1)
        throw EpsilonMismatch("deform_third_to_transversal expects eps = -1");
    if (g.dim() != nprime)
        throw DimensionMismatch("graph map size does not match nprime");
    const auto std_space = standard_space(nprime, -1);
    return graph_segment(std_space, g.entries,
                         Eigen::MatrixXd::Identity(nprime, nprime), steps,
                         tol);
}

std::vector<LagrangianPath> deform_family_to_mutually_transversal(
    int nprime, const std::vector<GraphMap>& gs, int steps,
    const Tolerance& tol) {
    const auto std_space = standard_space(nprime, -1);
    std::vector<LagrangianPath> out;
    out.reserve(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto& g = gs[i];
        if (g.epsilon != -1)
            throw EpsilonMismatch("deform_family_to_mutually_transversal expects eps = -1");
        if (g.dim() != nprime)
            throw DimensionMismatch("graph map size does not match nprime");
        const double scale = static_cast<double>(i) + 3.0;
        out.push_back(graph_segment(
            std_space, g.entries,
            scale * Eigen::MatrixXd::Identity(nprime, nprime), steps, tol));
    }
    return out;
}

SkewDeformationResult deform_family_symmetric(int nprime,
                                              const std::vector<GraphMap>& gs,
                                              int steps, const Tolerance& tol) {
    SkewDeformationResult result;
    result.original_nprime = nprime;
    result.stabilized = (nprime % 2 != 0);
    result.effective_nprime = result.stabilized ? 2 * nprime : nprime;
    const int np = result.effective_nprime;
    const auto std_space = standard_space(np, +1);
    const Eigen::MatrixXd omega = standard_skew(np);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto& g = gs[i];
        if (g.epsilon != +1)
            throw EpsilonMismatch("deform_family_symmetric expects eps = +1");
        if (g.dim() != nprime)
            throw DimensionMismatch("graph map size does not match nprime");
        Eigen::MatrixXd start = Eigen::MatrixXd::Zero(np, np);
        // Stabilizing L -> L + L adds the graph of the zero map.
        start.topLeftCorner(nprime, nprime) = g.entries;
        const double scale = static_cast<double>(i) + 3.0;
        result.paths.push_back(
            graph_segment(std_space, start, scale * omega, steps, tol));
    }
    return result;
}

Eigen::MatrixXd compatible_complex_structure(const BilinearFormMatrix& form) {
    if (form.epsilon() != -1)
        throw EpsilonMismatch("compatible complex structure requires a skew form");
    const Eigen::MatrixXd& m = form.entries();
    // J = M (M^T M)^{-1/2}; M^T M is SPD for nondegenerate M.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.transpose() * m);
    const Eigen::MatrixXd inv_sqrt =
        es.eigenvectors() *
        es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
        es.eigenvectors().transpose();
    return m * inv_sqrt;
}

LagrangianPath make_transversal_pair(const EpsSpacePtr& space,
                                     const Lagrangian& l1,
                                     const Lagrangian& l2, int steps,
                                     const Tolerance& tol) {
    if (space->epsilon() != -1)
        throw EpsilonMismatch("make_transversal_pair requires eps = -1");
    const int n = space->dim();
    const Eigen::MatrixXd j = compatible_complex_structure(space->form());
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

    constexpr int kCandidates = 64;
    double best_theta = 0.0;
    double best_gap = -1.0;
    for (int k = 0; k < kCandidates; ++k) {
        const double theta = M_PI * k / kCandidates;
        const Eigen::MatrixXd rot = std::cos(theta) * id + std::sin(theta) * j;
        const Subspace moved = map_subspace(rot, l2.subspace, tol);
        // smallest principal angle to l1 = acos(largest cosine)
        const Eigen::VectorXd c = principal_angle_cosines(moved, l1.subspace);
        const double gap = std::acos(std::clamp(c.size() > 0 ? c[0] : 0.0,
                                                -1.0, 1.0));
        if (gap > best_gap) {
            best_gap = gap;
            best_theta = theta;
        }
    }

    const auto ts = linear_grid(steps);
    std::vector<Subspace> samples;
    samples.reserve(ts.size());
    for (double t : ts) {
        const double theta = t * best_theta;
        const Eigen::MatrixXd rot = std::cos(theta) * id + std::sin(theta) * j;
        samples.push_back(map_subspace(rot, l2.subspace, tol));
    }
    return LagrangianPath(space, ts, std::move(samples), tol);
}

} // namespace lagr
