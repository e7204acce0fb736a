#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgrowth/maps.hpp"

namespace lgrowth {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    /// Set when the check could not be evaluated; residual is then NaN.
    std::optional<std::string> error;
    std::string detail;
};

/// Named residuals in registration order.
struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(std::string name, double residual, double tolerance, std::string detail = {});
    void add_error(std::string name, double tolerance, std::string message);
    const CheckResult* find(const std::string& name) const;
    bool all_pass() const;
    bool any_error() const;
};

/// Relative residual of w^2 f'' - 2w f'/(w^2 - 1) + V f = 0 at |w| >= 1.01.
double ode_residual(const MapFamily& family, cplx w);

struct AEstimate {
    double A = 0.0;
    /// (max - min) / mean over the sample points.
    double spread = 0.0;
    std::vector<double> samples;
};

/// A from the Wronskian of f(w) and f(1/w) at points with |w| = 1.05,
/// Im w > 0. With `strict` the estimate is rejected (ConvergenceError) when
/// the relative spread exceeds 1e-6.
AEstimate estimate_A(const MapFamily& family, bool strict = true);

/// Max over n circle samples of |LHS - RHS| / r for the boundary dynamics
/// with df/dT = f / A and f(1/w) = conj f(w) on |w| = 1.
double dynamical_residual(const MapFamily& family, const TimeState& state, std::size_t n = 128);

struct NormalVelocity {
    double kinematic = 0.0;
    double darcy = 0.0;
};

/// Both sides of the Darcy law at w = e^{i phi}.
NormalVelocity normal_velocity(const MapFamily& family, const TimeState& state, double phi);

struct DarcyResult {
    double max_mismatch = 0.0;
    double min_velocity = 0.0;
};

/// Max relative mismatch of kinematic and Darcy normal velocity over n samples.
DarcyResult darcy_check(const MapFamily& family, const TimeState& state, std::size_t n = 256);

struct ConformalityResult {
    /// (1/2 pi) times the increment of arg f' along |w| = e^epsilon.
    int winding = 0;
    /// Turning number of the image of |w| = e^epsilon.
    int turning = 0;
    bool ok = false;
    bool unstable = false;
    double epsilon = 0.0;
};

/// Argument-principle test: f' has no zeros in |w| > e^epsilon iff the
/// winding is 0. Cross-checked against turning = 1 + winding; a mismatch is
/// retried once at epsilon / 2 and then reported as unstable.
ConformalityResult conformality_check(const MapFamily& family, double epsilon = 1e-3,
                                      std::size_t n = 256);

struct CornerFit {
    double exponent = 0.0;
    double expected = 0.0;
    double relative_error = 0.0;
    double residual_norm = 0.0;
};

/// Local exponent of |f| at a corner pre-image (one of +-1, +-i), fitted on
/// arc distances in [1e-6, 1e-3].
CornerFit corner_exponent(const MapFamily& family, cplx corner);

/// Max over `points` of the residual of the one-petal integral equation for
/// g = f / sqrt(w^2 - 1).
double integral_equation_residual(double alpha, std::span<const cplx> points);

/// Max over x in `points` (real, in (-1, 1), nonzero) of the relative mismatch
/// f(x + i0) + f(x - i0) - 2 cos(2 alpha) f(1/x) for the one-petal map.
double jump_relation_residual(double alpha, std::span<const double> points);

/// M_+(z) = (1/pi i) times the integral of |Im z'| dz' / (z' - z) over the trace.
/// z must lie inside the pattern, at least 2% of the diameter from it.
cplx m_plus_cauchy(const BoundaryTrace& trace, cplx z);
/// Closed form -+2i sin^2(alpha) z + T of the one-petal M_+.
cplx m_plus_expected(const MapFamily& family, double T, cplx z);

/// Contour form (1 / pi i k) of the integral of |Im z| z^-k dz.
/// Throws IllDefinedError for self-similar traces (they touch the origin) or
/// when the origin is not strictly inside.
double harmonic_moment(const BoundaryTrace& trace, int k);
/// Area form (2 / pi k) of the integral of Im(z^-k) over the exterior upper
/// half, with the radial integral done exactly and the angular one by
/// Gauss-Legendre on a star-shaped trace.
double harmonic_moment_area(const BoundaryTrace& trace, int k, std::size_t nodes = 2048);

/// Unit circle polyline: upper half-disk and its mirror image.
BoundaryTrace half_disk_trace(std::size_t n);

/// Width of the first-quadrant petal (upper half for one petal): max distance
/// of its points from the line through 0 and its farthest point.
double petal_width(const BoundaryTrace& trace);

struct SweepEntry {
    double alpha = 0.0;
    double beta = 0.0;
    int winding = 0;
    bool conformal = false;
    bool degenerate = false;
    bool unstable = false;
    std::optional<std::string> error;
};

struct SweepResult {
    std::vector<double> alphas;
    std::vector<double> betas;
    /// Row-major: alphas outer, betas inner.
    std::vector<SweepEntry> entries;
};

struct SweepOptions {
    double epsilon = 1e-3;
    std::size_t circle_samples = 256;
    std::size_t trace_samples = 1024;
    double degenerate_fraction = 1e-3;
};

/// Two-petal conformality and degeneracy over a grid, in parallel.
SweepResult sweep(std::span<const double> alphas, std::span<const double> betas,
                  const SweepOptions& options = {});
SweepResult sweep_serial(std::span<const double> alphas, std::span<const double> betas,
                         const SweepOptions& options = {});

/// Default tolerance of every registered check.
std::map<std::string, double> default_tolerances();

/// Runs every check that applies to the family. Check errors are recorded,
/// not thrown. Unknown override names throw DomainError.
VerificationReport run_full_verification(const MapFamily& family, const TimeState& state,
                                         const std::map<std::string, double>& overrides = {});

}  // namespace lgrowth
