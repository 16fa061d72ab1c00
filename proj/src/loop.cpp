#include "lagr/loop.hpp"

#include <cmath>
#include <complex>

#include <unsupported/Eigen/MatrixFunctions>

namespace lagr {

namespace {

/// Unitary frame W = X + iY of a lagrangian basis [X; Y] in standard
/// symplectic coordinates.
Eigen::MatrixXcd frame_to_unitary(const Subspace& s) {
    const int np = s.dim();
    const Eigen::MatrixXd x = s.basis().topRows(np);
    const Eigen::MatrixXd y = s.basis().bottomRows(np);
    return x.cast<std::complex<double>>() +
           std::complex<double>(0.0, 1.0) * y.cast<std::complex<double>>();
}

Subspace unitary_to_frame(const Eigen::MatrixXcd& w) {
    const int np = static_cast<int>(w.rows());
    Eigen::MatrixXd basis(2 * np, np);
    basis.topRows(np) = w.real();
    basis.bottomRows(np) = w.imag();
    return Subspace(std::move(basis));
}

/// Rotates Wa toward the lagrangian of Wb along the unitary geodesic
/// through the symmetric-unitary coordinates S = W W^T.
Eigen::MatrixXcd interpolate_frames(const Eigen::MatrixXcd& wa,
                                    const Eigen::MatrixXcd& wb, double t) {
    const Eigen::MatrixXcd sb = wb * wb.transpose();
    const Eigen::MatrixXcd s_rel = wa.adjoint() * sb * wa.conjugate();
    Eigen::MatrixXcd k = s_rel.log();
    k = 0.5 * (k + k.transpose().eval());
    return wa * (0.5 * t * k).exp();
}

} // namespace

LagrangianLoop::LagrangianLoop(EpsSpacePtr space, std::vector<double> thetas,
                               std::vector<Subspace> samples,
                               const Tolerance& tol)
    : space_(std::move(space)), thetas_(std::move(thetas)) {
    if (space_->epsilon() != -1)
        throw EpsilonMismatch("lagrangian loops require eps = -1");
    if (!space_->is_standard(tol))
        throw InvalidArgument("lagrangian loops require standard symplectic coordinates");
    if (thetas_.size() != samples.size() || thetas_.size() < 3)
        throw InvalidArgument("loop needs at least three matching samples");
    if (thetas_.front() != 0.0 || thetas_.back() != 1.0)
        throw InvalidArgument("loop parameter must run from 0 to 1");
    for (std::size_t i = 1; i < thetas_.size(); ++i)
        if (!(thetas_[i] > thetas_[i - 1]))
            throw InvalidArgument("loop parameter must be strictly increasing");
    samples_.reserve(samples.size());
    for (auto& s : samples)
        samples_.push_back(validate_lagrangian(space_, s, tol));
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        const double angle = largest_principal_angle(
            samples_[i - 1].subspace, samples_[i].subspace);
        if (angle >= M_PI / 4.0)
            throw SamplingTooCoarse(
                "consecutive loop samples are further apart than pi/4");
    }
    if (!subspace_equal(samples_.front().subspace, samples_.back().subspace,
                        tol))
        throw NotClosed("loop is not closed");
}

int loop_maslov_index(const LagrangianLoop& loop, const Tolerance&) {
    const auto& samples = loop.samples();
    std::vector<std::complex<double>> det_sq;
    det_sq.reserve(samples.size());
    for (const auto& l : samples) {
        const std::complex<double> d = frame_to_unitary(l.subspace).determinant();
        det_sq.push_back(d * d);
    }
    double total = 0.0;
    for (std::size_t i = 1; i < det_sq.size(); ++i) {
        const double inc = std::arg(det_sq[i] * std::conj(det_sq[i - 1]));
        if (std::abs(inc) >= M_PI / 2.0)
            throw SamplingTooCoarse(
                "phase increment of det^2 reaches pi/2; winding is ambiguous");
        total += inc;
    }
    // closure correction (the endpoints are the same subspace, so this
    // increment is a rounding-level quantity)
    total += std::arg(det_sq.front() * std::conj(det_sq.back()));
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

LagrangianLoop concatenate(const LagrangianLoop& a, const LagrangianLoop& b,
                           const Tolerance& tol) {
    if (a.space()->dim() != b.space()->dim())
        throw DimensionMismatch("concatenate: loops live in different spaces");
    if (!subspace_equal(a.samples().back().subspace,
                        b.samples().front().subspace, tol))
        throw InvalidArgument("concatenate: endpoint mismatch");
    std::vector<double> thetas;
    std::vector<Subspace> samples;
    for (std::size_t i = 0; i < a.thetas().size(); ++i) {
        thetas.push_back(0.5 * a.thetas()[i]);
        samples.push_back(a.samples()[i].subspace);
    }
    for (std::size_t i = 1; i < b.thetas().size(); ++i) {
        thetas.push_back(0.5 + 0.5 * b.thetas()[i]);
        samples.push_back(b.samples()[i].subspace);
    }
    return LagrangianLoop(a.space(), std::move(thetas), std::move(samples),
                          tol);
}

LagrangianLoop reverse(const LagrangianLoop& loop, const Tolerance& tol) {
    const std::size_t n = loop.thetas().size();
    std::vector<double> thetas;
    std::vector<Subspace> samples;
    for (std::size_t i = 0; i < n; ++i) {
        thetas.push_back(1.0 - loop.thetas()[n - 1 - i]);
        samples.push_back(loop.samples()[n - 1 - i].subspace);
    }
    thetas.front() = 0.0;
    thetas.back() = 1.0;
    return LagrangianLoop(loop.space(), std::move(thetas), std::move(samples),
                          tol);
}

LagrangianLoop refine(const LagrangianLoop& loop, int factor,
                      const Tolerance& tol) {
    if (factor < 2) throw InvalidArgument("refine: factor must be >= 2");
    std::vector<double> thetas;
    std::vector<Subspace> samples;
    const std::size_t n = loop.thetas().size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double t0 = loop.thetas()[i];
        const double t1 = loop.thetas()[i + 1];
        const Eigen::MatrixXcd wa =
            frame_to_unitary(loop.samples()[i].subspace);
        const Eigen::MatrixXcd wb =
            frame_to_unitary(loop.samples()[i + 1].subspace);
        thetas.push_back(t0);
        samples.push_back(loop.samples()[i].subspace);
        for (int j = 1; j < factor; ++j) {
            const double s = static_cast<double>(j) / factor;
            thetas.push_back(t0 + s * (t1 - t0));
            samples.push_back(unitary_to_frame(interpolate_frames(wa, wb, s)));
        }
    }
    thetas.push_back(1.0);
    samples.push_back(loop.samples().back().subspace);
    return LagrangianLoop(loop.space(), std::move(thetas), std::move(samples),
                          tol);
}

} // namespace lagr
