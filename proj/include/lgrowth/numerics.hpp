#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lgrowth {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// A discretized integration path.
///
/// Closed contours are sampled on a uniform periodic grid (trapezoidal rule,
/// nodes offset by half a step); open ones carry Gauss-Legendre nodes.
/// `tangents` holds dz/dt at every node so that a sum of
/// integrand(z_j) * tangent_j * weight_j approximates the contour integral.
struct Contour {
    enum class Kind { ClosedPeriodic, OpenInterval };

    Kind kind = Kind::ClosedPeriodic;
    std::vector<double> params;
    std::vector<cplx> points;
    std::vector<cplx> tangents;
    std::vector<double> weights;
    /// Length of the parameter period (closed) or interval (open).
    double span = 0.0;

    /// Counter-clockwise circle |z - center| = radius with n nodes at
    /// t_j = (j + 1/2) 2 pi / n.
    static Contour circle(cplx center, double radius, std::size_t n);
    /// Straight segment a -> b with n Gauss-Legendre nodes.
    static Contour segment(cplx a, cplx b, std::size_t n);

    std::size_t size() const noexcept { return points.size(); }
    /// Throws DomainError when an invariant is broken.
    void validate() const;
};

struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
GaussLegendreRule gauss_legendre(std::size_t n);

/// Approximates the contour integral of `integrand` dz.
cplx contour_quadrature(const std::function<cplx(cplx)>& integrand, const Contour& contour);

struct EndpointExponents {
    double at_a = 0.0;
    double at_b = 0.0;
};

/// Integral over [a, b] of an integrand that behaves like
/// (x-a)^mu_a near a and (b-x)^mu_b near b (mu > -1). Each half of the
/// interval is mapped with x = end + h s^(2/(1+mu)), which turns the
/// algebraic endpoint factor into a smooth one, and then integrated with
/// Gauss-Legendre.
///
/// Nodes come within rounding distance of the endpoints, so an integrand
/// that forms b - x itself loses relative accuracy there (about 1e-8 for
/// mu = -1/2). The second form passes the exact offsets x - a and b - x.
cplx singular_endpoint_quadrature(const std::function<cplx(double)>& integrand, double a, double b,
                                  EndpointExponents exponents, std::size_t nodes_per_half = 96);
cplx singular_endpoint_quadrature(const std::function<cplx(double x, double from_a, double from_b)>& integrand,
                                  double a, double b, EndpointExponents exponents,
                                  std::size_t nodes_per_half = 96);

/// Signed number of turns of the closed polyline `trace` around z0.
/// Throws DomainError when z0 lies within `tolerance` (relative to the
/// trace diameter) of a segment.
int winding_number(std::span<const cplx> trace, cplx z0, double tolerance = 1e-12);

/// Sum of argument increments of the closed polyline around z0, in turns
/// (not rounded).
double winding_turns(std::span<const cplx> trace, cplx z0);

/// Shoelace area of a closed polyline; positive when counter-clockwise.
double polyline_area(std::span<const cplx> trace);

/// Distance from z to the segment [a, b].
double segment_distance(cplx z, cplx a, cplx b);

struct PowerSample {
    double distance;
    double magnitude;
};

struct PowerLawFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double residual_norm = 0.0;
};

/// Least-squares slope of log(magnitude) against log(distance).
PowerLawFit fit_power_law(std::span<const PowerSample> samples);

/// Derivative of a complex-valued function of a real variable by central
/// differences with Ridders' polynomial extrapolation, starting at step h0.
/// If `error` is given it receives the extrapolation error estimate.
cplx ridders_derivative(const std::function<cplx(double)>& fn, double x, double h0,
                        double* error = nullptr);

}  // namespace lgrowth
