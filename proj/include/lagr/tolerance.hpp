#pragma once

#include <algorithm>

namespace lagr {

/// Relative/absolute threshold pair used by every rank, signature and
/// residual decision in the library.
struct Tolerance {
    double rel_eps = 1e-10;
    double abs_eps = 1e-12;

    /// Zero band for quantities living at the given scale
    /// (largest singular value, spectral radius, ...).
    double band(double scale) const {
        return std::max(rel_eps * scale, abs_eps);
    }
};

} // namespace lagr
