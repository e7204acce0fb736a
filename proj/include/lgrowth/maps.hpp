#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgrowth/numerics.hpp"
#include "lgrowth/special_functions.hpp"

namespace lgrowth {

enum class Variant { OnePetal, TwoPetal };

/// One self-similar solution: the one-petal family (alpha) or the
/// two-petal family (alpha, beta). Immutable; constants of the closed forms
/// are computed once at construction.
class MapFamily {
public:
    /// alpha in (0, pi/2): base angle of the petal with the real axis.
    static MapFamily one_petal(double alpha);
    /// alpha, beta in (0, pi/2); 2 beta is the opening between the petals.
    static MapFamily two_petal(double alpha, double beta);

    Variant variant() const noexcept { return variant_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    /// 2 alpha / pi - 1/2, in (-1/2, 1/2).
    double gamma() const noexcept { return gamma_; }
    /// 2 beta / pi (zero for the one-petal family).
    double delta() const noexcept { return delta_; }

    /// Pre-images of the origin on the unit circle: +-1, and +-i for two petals.
    std::vector<cplx> corners() const;
    std::string describe() const;

    // Two-petal constants of the |p| < 2 continuation. Two coefficient sets
    // are kept when beta sits on pi/4, where the value is a symmetric limit.
    struct InnerBranch {
        double alpha;
        double beta;
        cplx c1;
        cplx c2;
        Hyp2F1Params f1;
        Hyp2F1Params f2;
        double mu;  // 2 beta / pi
        double weight;
    };
    const std::vector<InnerBranch>& inner_branches() const noexcept { return inner_; }
    const Hyp2F1Params& outer_params() const noexcept { return outer_; }

private:
    MapFamily() = default;

    Variant variant_ = Variant::OnePetal;
    double alpha_ = 0.0;
    double beta_ = 0.0;
    double gamma_ = 0.0;
    double delta_ = 0.0;
    Hyp2F1Params outer_{};
    std::vector<InnerBranch> inner_;
};

/// (T, A) state of the dilatation; conformal radius r = T / A.
struct TimeState {
    double T = 1.0;
    double A = 1.0;

    static TimeState make(double T, double A);
    double r() const noexcept { return T / A; }
};

struct TraceSample {
    double phi;
    cplx z;
};

/// Sampled image of |w| = 1, the physical contour. `family` is empty for
/// traces read from files or built by hand.
struct BoundaryTrace {
    std::optional<MapFamily> family;
    std::vector<TraceSample> samples;
    bool counter_clockwise = true;

    std::vector<cplx> points() const;
};

/// f(w) = r w + c_0 + c_1 / w + ... and the capacity u_1 of
/// p(z) = z + u_1 / z + ... .
struct LaurentCoefficients {
    double r = 0.0;
    std::vector<double> c;
    double u0 = 0.0;
    double u1 = 0.0;
    double max_imaginary = 0.0;
};

/// Side of the cut (-2, 2) for real p.
enum class PSide { Upper, Lower };

// ---------------------------------------------------------------------------
// Map evaluation. Functions named *_map require |w| >= 1; `map_continued`
// additionally accepts points inside the disk where the closed forms continue
// analytically across the unit circle (away from the corner pre-images).

cplx one_petal_map(const MapFamily& family, cplx w);
cplx two_petal_map(const MapFamily& family, cplx w);
/// Dispatches on the family variant; |w| >= 1.
cplx map_value(const MapFamily& family, cplx w);
/// Value of the closed form continued across |w| = 1.
cplx map_continued(const MapFamily& family, cplx w);

/// One-petal closed form without domain checks; analytic off [-1, 1].
cplx one_petal_closed_form(double gamma, cplx w);
/// g(w) = f(w) / sqrt(w^2 - 1) for the one-petal family (1 at gamma = 0).
cplx one_petal_ratio(double gamma, cplx w);

/// Two-petal map in the variable p = w + 1/w.
cplx z_of_p(const MapFamily& family, cplx p, PSide side = PSide::Upper);

struct MapDerivatives {
    cplx f;
    cplx df;
    cplx d2f;
};

/// Distance from w to the set where the continued closed form stops being
/// analytic (corner pre-images and the cuts inside the disk).
double singular_distance(const MapFamily& family, cplx w);

/// f, f', f'' from a circular stencil of `nodes` points of radius
/// 0.35 * singular_distance(w). Throws DomainError next to a corner.
MapDerivatives map_derivatives(const MapFamily& family, cplx w, int nodes = 32);
cplx map_derivative(const MapFamily& family, cplx w);

/// Solves r f(w) = z for |w| >= 1 by Newton iteration. Without a guess the
/// start is z / r reached through a radial homotopy from far away.
/// Throws ConvergenceError, or DomainError when the root is off the sheet.
cplx invert_map(const MapFamily& family, cplx z, std::optional<cplx> guess = std::nullopt,
                double r = 1.0);

/// (T / A) f(w).
cplx scaled_map(const MapFamily& family, const TimeState& state, cplx w);

/// Coefficient V(w) of the linear ODE satisfied by f(w) and f(1/w).
cplx potential_V(const MapFamily& family, cplx w);

/// phi(z) = Im p(z) = Im[r (w(z) + 1/w(z))].
double pressure(const MapFamily& family, const TimeState& state, cplx z);

/// n samples of r f(e^{i phi}) at phi_j = (j + 1/2) 2 pi / n, counter-clockwise.
/// n >= 16; n must be even (one petal) or a multiple of 4 (two petals) so no
/// sample lands on a corner pre-image. Evaluated in parallel.
BoundaryTrace boundary_trace(const MapFamily& family, const TimeState& state, std::size_t n);
/// Serial reference of boundary_trace; identical output.
BoundaryTrace boundary_trace_serial(const MapFamily& family, const TimeState& state,
                                    std::size_t n);

/// Coefficients r, c_0..c_K from a DFT of f on |w| = radius.
LaurentCoefficients laurent_coefficients(const MapFamily& family, std::size_t K,
                                         double radius = 2.0);

}  // namespace lgrowth
