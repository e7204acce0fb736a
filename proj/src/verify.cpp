#include "lgrowth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lgrowth/errors.hpp"
#include "lgrowth/kernels.hpp"
#include "parallel.hpp"

namespace lgrowth {
namespace {

constexpr double kRingRadius = 1.5;
constexpr std::size_t kRingSamples = 64;
constexpr double kWronskianRadius = 1.05;
constexpr double kJumpOffset = 1e-10;
constexpr std::size_t kCornerSamples = 24;
constexpr double kCornerFitResidual = 0.05;

double phi_at(std::size_t j, std::size_t n) {
    return (static_cast<double>(j) + 0.5) * 2.0 * kPi / static_cast<double>(n);
}

void require_circle_count(const MapFamily& family, std::size_t n) {
    const std::size_t m = family.variant() == Variant::OnePetal ? 2 : 4;
    if (n < m || n % m != 0)
        throw DomainError("circle sample count must be a positive multiple of " + std::to_string(m));
}

// angular distance from phi to the nearest corner pre-image
double corner_gap(const MapFamily& family, double phi) {
    double gap = 1e300;
    for (const cplx c : family.corners()) {
        double d = std::abs(phi - std::arg(c));
        d = std::fmod(d, 2.0 * kPi);
        gap = std::min({gap, d, 2.0 * kPi - d});
    }
    return gap;
}

double diameter(std::span<const cplx> pts) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const cplx& p : pts) {
        lo_x = std::min(lo_x, p.real());
        hi_x = std::max(hi_x, p.real());
        lo_y = std::min(lo_y, p.imag());
        hi_y = std::max(hi_y, p.imag());
    }
    return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

double distance_to_polyline(std::span<const cplx> pts, cplx z) {
    double d = 1e300;
    for (std::size_t j = 0; j < pts.size(); ++j)
        d = std::min(d, segment_distance(z, pts[j], pts[(j + 1) % pts.size()]));
    return d;
}

void require_moment_domain(const BoundaryTrace& trace) {
    if (trace.family)
        throw IllDefinedError(
            "moments ill-defined: a self-similar pattern touches the origin (x- = x+ = 0)");
    const auto pts = trace.points();
    if (pts.size() < 3) throw DomainError("trace needs at least 3 points");
    int w = 0;
    try {
        w = winding_number(pts, 0.0);
    } catch (const DomainError&) {
        throw IllDefinedError("moments ill-defined: the origin lies on the trace");
    }
    if (w == 0) throw IllDefinedError("moments ill-defined: the origin is not inside the domain");
}

// winding of f' and turning of the image along |w| = e^eps
struct ArgCount {
    double winding_turns = 0.0;
    double turning_turns = 0.0;
};

struct RingPoint {
    double theta;
    cplx f;
    cplx df;
};

ArgCount count_args(const MapFamily& family, double eps, std::size_t n) {
    const double rad = std::exp(eps);
    const auto eval = [&](double th) {
        const MapDerivatives d = map_derivatives(family, std::polar(rad, th), 12);
        if (d.df == 0.0) throw DomainError("f' vanishes on the test circle");
        return RingPoint{th, d.f, d.df};
    };
    std::vector<RingPoint> pts;
    pts.reserve(4 * n);
    std::vector<RingPoint> base(n + 1);
    for (std::size_t j = 0; j < n; ++j) base[j] = eval(phi_at(j, n));
    base[n] = base[0];
    base[n].theta += 2.0 * kPi;
    for (std::size_t j = 0; j < n; ++j) {
        // bisect until arg f' moves by at most 0.5 per step
        std::vector<RingPoint> stack{base[j + 1]};
        RingPoint left = base[j];
        pts.push_back(left);
        while (!stack.empty()) {
            const RingPoint right = stack.back();
            const double jump = std::abs(std::arg(right.df / left.df));
            if (jump > 0.5 && right.theta - left.theta > 1e-12) {
                stack.push_back(eval(0.5 * (left.theta + right.theta)));
                continue;
            }
            stack.pop_back();
            if (!stack.empty()) {
                pts.push_back(right);
                left = right;
            }
        }
    }
    ArgCount out;
    const std::size_t m = pts.size();
    for (std::size_t k = 0; k < m; ++k) {
        const RingPoint& a = pts[k];
        const RingPoint& b = pts[(k + 1) % m];
        out.winding_turns += std::arg(b.df / a.df);
        const cplx e1 = b.f - a.f;
        const cplx e2 = pts[(k + 2) % m].f - b.f;
        if (e1 != 0.0 && e2 != 0.0) out.turning_turns += std::arg(e2 / e1);
    }
    out.winding_turns /= 2.0 * kPi;
    out.turning_turns /= 2.0 * kPi;
    return out;
}

SweepEntry sweep_node(double alpha, double beta, const SweepOptions& opt) {
    SweepEntry e;
    e.alpha = alpha;
    e.beta = beta;
    try {
        const MapFamily fam = MapFamily::two_petal(alpha, beta);
        const ConformalityResult c = conformality_check(fam, opt.epsilon, opt.circle_samples);
        e.winding = c.winding;
        e.conformal = c.ok;
        e.unstable = c.unstable;
        const BoundaryTrace t = boundary_trace_serial(fam, TimeState{}, opt.trace_samples);
        e.degenerate = petal_width(t) < opt.degenerate_fraction;
    } catch (const std::exception& ex) {
        e.error = ex.what();
    }
    return e;
}

SweepResult sweep_shell(std::span<const double> alphas, std::span<const double> betas) {
    if (alphas.empty() || betas.empty()) throw DomainError("sweep: empty grid");
    for (double a : alphas)
        if (!(a > 0.0 && a < 0.5 * kPi)) throw DomainError("sweep: alpha outside (0, pi/2)");
    for (double b : betas)
        if (!(b > 0.0 && b < 0.5 * kPi)) throw DomainError("sweep: beta outside (0, pi/2)");
    SweepResult r;
    r.alphas.assign(alphas.begin(), alphas.end());
    r.betas.assign(betas.begin(), betas.end());
    r.entries.resize(alphas.size() * betas.size());
    return r;
}

}  // namespace

void VerificationReport::add(std::string name, double residual, double tolerance, std::string detail) {
    CheckResult c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = residual <= tolerance;
    c.detail = std::move(detail);
    checks.push_back(std::move(c));
}

void VerificationReport::add_error(std::string name, double tolerance, std::string message) {
    CheckResult c;
    c.name = std::move(name);
    c.residual = std::numeric_limits<double>::quiet_NaN();
    c.tolerance = tolerance;
    c.pass = false;
    c.error = std::move(message);
    checks.push_back(std::move(c));
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerificationReport::any_error() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.error.has_value(); });
}

double ode_residual(const MapFamily& family, cplx w) {
    if (!(std::abs(w) >= 1.01)) throw DomainError("ode_residual needs |w| >= 1.01");
    const MapDerivatives d = map_derivatives(family, w);
    const cplx vf = potential_V(family, w) * d.f;
    const cplx lhs = w * w * d.d2f - 2.0 * w * d.df / (w * w - 1.0) + vf;
    return std::abs(lhs) / (1.0 + std::abs(vf));
}

AEstimate estimate_A(const MapFamily& family, bool strict) {
    std::vector<double> angles;
    if (family.variant() == Variant::OnePetal) {
        for (int k = 0; k <= 8; ++k) angles.push_back(kPi * (0.15 + 0.7 * k / 8.0));
    } else {
        angles = {0.2 * kPi, 0.3 * kPi, 0.7 * kPi, 0.8 * kPi};
    }
    AEstimate out;
    for (double th : angles) {
        const cplx w = std::polar(kWronskianRadius, th);
        const cplx wi = 1.0 / w;
        const cplx fw = map_continued(family, w);
        const cplx fi = map_continued(family, wi);
        const cplx dw = map_derivatives(family, w).df;
        const cplx di = map_derivatives(family, wi).df;
        // d/dw f(1/w) = -f'(1/w) / w^2
        const cplx wr = w * dw * fi + di * fw / w;
        out.samples.push_back(std::abs(wr) / std::abs(w - wi));
    }
    const auto [lo, hi] = std::minmax_element(out.samples.begin(), out.samples.end());
    double sum = 0.0;
    for (double a : out.samples) sum += a;
    out.A = sum / static_cast<double>(out.samples.size());
    out.spread = (*hi - *lo) / out.A;
    if (strict && out.spread > 1e-6) {
        std::ostringstream msg;
        msg << "estimate_A: relative spread " << out.spread << " across sample points";
        throw ConvergenceError(msg.str());
    }
    return out;
}

double dynamical_residual(const MapFamily& family, const TimeState& state, std::size_t n) {
    require_circle_count(family, n);
    const double r = state.r();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx w = std::polar(1.0, phi_at(j, n));
        const cplx f = map_value(family, w);
        const cplx df = map_derivatives(family, w).df;
        // df/dT = f / A; f(1/w) = conj f(w) on the circle
        const double lhs = 2.0 * r / state.A * (w * df * std::conj(f)).real();
        const double rhs = r * std::abs(w - 1.0 / w);
        worst = std::max(worst, std::abs(lhs - rhs) / r);
    }
    return worst;
}

NormalVelocity normal_velocity(const MapFamily& family, const TimeState& state, double phi) {
    const double gap = corner_gap(family, phi);
    if (gap < 1e-6) throw DomainError("normal_velocity: too close to a corner pre-image");
    const double r = state.r();
    const auto z_phi = [&](double p) { return r * map_value(family, std::polar(1.0, p)); };
    const cplx zp = ridders_derivative(z_phi, phi, std::min(0.05, 0.25 * gap));
    const cplx w = std::polar(1.0, phi);
    const cplx f = map_value(family, w);
    const double h = 1e-3 * state.T;
    const cplx zt = ((state.T + h) / state.A * f - (state.T - h) / state.A * f) / (2.0 * h);
    NormalVelocity v;
    v.kinematic = (std::conj(zt) * zp).imag() / std::abs(zp);
    const cplx df = map_derivatives(family, w).df;
    v.darcy = 0.5 * std::abs(1.0 - 1.0 / (w * w)) / std::abs(df);
    return v;
}

DarcyResult darcy_check(const MapFamily& family, const TimeState& state, std::size_t n) {
    require_circle_count(family, n);
    DarcyResult out;
    out.min_velocity = 1e300;
    for (std::size_t j = 0; j < n; ++j) {
        const NormalVelocity v = normal_velocity(family, state, phi_at(j, n));
        out.max_mismatch = std::max(out.max_mismatch, std::abs(v.kinematic - v.darcy) / v.darcy);
        out.min_velocity = std::min(out.min_velocity, v.kinematic);
    }
    return out;
}

ConformalityResult conformality_check(const MapFamily& family, double epsilon, std::size_t n) {
    if (!(epsilon >= 1e-4 && epsilon <= 0.1)) throw DomainError("conformality_check: epsilon outside [1e-4, 0.1]");
    if (n < 16) throw DomainError("conformality_check needs n >= 16");
    ConformalityResult out;
    double eps = epsilon;
    for (int attempt = 0; attempt < 2; ++attempt, eps *= 0.5) {
        out.epsilon = eps;
        try {
            const ArgCount c = count_args(family, eps, n);
            out.winding = static_cast<int>(std::lround(c.winding_turns));
            out.turning = static_cast<int>(std::lround(c.turning_turns));
            out.unstable = out.turning != 1 + out.winding;
        } catch (const DomainError&) {
            out.unstable = true;
        }
        if (!out.unstable) break;
    }
    out.ok = !out.unstable && out.winding == 0;
    return out;
}

namespace {

CornerFit fit_corner(const MapFamily& family, cplx corner) {
    const auto cs = family.corners();
    if (std::none_of(cs.begin(), cs.end(), [&](cplx c) { return std::abs(c - corner) < 1e-12; }))
        throw DomainError("corner_exponent: not a corner pre-image of this family");
    const double phic = std::arg(corner);
    std::vector<PowerSample> samples(kCornerSamples);
    for (std::size_t i = 0; i < kCornerSamples; ++i) {
        const double d = std::pow(10.0, -6.0 + 3.0 * static_cast<double>(i) / (kCornerSamples - 1));
        samples[i] = {d, std::abs(map_value(family, std::polar(1.0, phic + d)))};
    }
    const PowerLawFit fit = fit_power_law(samples);
    CornerFit out;
    out.exponent = fit.exponent;
    out.residual_norm = fit.residual_norm;
    if (corner.imag() == 0.0)
        out.expected = 2.0 * family.alpha() / kPi;
    else
        out.expected = std::min(family.delta(), 1.0 - family.delta());
    out.relative_error = std::abs(out.exponent - out.expected) / out.expected;
    return out;
}

}  // namespace

CornerFit corner_exponent(const MapFamily& family, cplx corner) {
    const CornerFit out = fit_corner(family, corner);
    if (out.residual_norm > kCornerFitResidual)
        throw ConvergenceError("corner_exponent: log-log samples are not a power law");
    return out;
}

double integral_equation_residual(double alpha, std::span<const cplx> points) {
    const MapFamily fam = MapFamily::one_petal(alpha);
    const double gamma = fam.gamma();
    // cos(2 alpha), exactly 0 at gamma = 0
    const double c2a = -std::sin(kPi * gamma);
    double worst = 0.0;
    for (const cplx w : points) {
        if (!(std::abs(w) > 1.0)) throw DomainError("integral_equation_residual needs |w| > 1");
        const cplx integral = singular_endpoint_quadrature(
            [&](double x) { return one_petal_ratio(gamma, 1.0 / x) / (x * x - w * w); }, 0.0, 1.0,
            {0.0, gamma});
        const cplx res = one_petal_ratio(gamma, w) - 1.0 + (2.0 * c2a / kPi) * integral;
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

double jump_relation_residual(double alpha, std::span<const double> points) {
    const MapFamily fam = MapFamily::one_petal(alpha);
    const double gamma = fam.gamma();
    const double c2a = -std::sin(kPi * gamma);
    double worst = 0.0;
    for (const double x : points) {
        if (!(std::abs(x) < 1.0) || x == 0.0) throw DomainError("jump_relation_residual needs 0 < |x| < 1");
        const cplx up = one_petal_closed_form(gamma, cplx(x, kJumpOffset));
        const cplx down = one_petal_closed_form(gamma, cplx(x, -kJumpOffset));
        const cplx rhs = 2.0 * c2a * one_petal_closed_form(gamma, 1.0 / x);
        worst = std::max(worst, std::abs(up + down - rhs) / (1.0 + std::abs(rhs)));
    }
    return worst;
}

cplx m_plus_cauchy(const BoundaryTrace& trace, cplx z) {
    const auto pts = trace.points();
    if (pts.size() < 3) throw DomainError("m_plus_cauchy: trace needs at least 3 points");
    if (distance_to_polyline(pts, z) < 0.02 * diameter(pts))
        throw DomainError("m_plus_cauchy: z is too close to the contour");
    if (winding_number(pts, z) == 0) throw DomainError("m_plus_cauchy: z is not inside the pattern");
    return cauchy_polyline(pts, z) / cplx(0.0, kPi);
}

cplx m_plus_expected(const MapFamily& family, double T, cplx z) {
    const double s = std::sin(family.alpha());
    const cplx c(0.0, 2.0 * s * s);
    return (z.imag() >= 0.0 ? -c : c) * z + T;
}

double harmonic_moment(const BoundaryTrace& trace, int k) {
    if (k < 2) throw DomainError("harmonic_moment needs k >= 2");
    require_moment_domain(trace);
    const auto pts = trace.points();
    const cplx v = moment_polyline(pts, k) / cplx(0.0, kPi * k);
    return v.real();
}

double harmonic_moment_area(const BoundaryTrace& trace, int k, std::size_t nodes) {
    if (k < 2) throw DomainError("harmonic_moment_area needs k >= 2");
    require_moment_domain(trace);
    const auto pts = trace.points();
    const std::size_t n = pts.size();
    const GaussLegendreRule rule = gauss_legendre(nodes);
    std::vector<double> vals(nodes);
    detail::parallel_for(nodes, [&](std::size_t i) {
        const double th = 0.5 * kPi * (rule.nodes[i] + 1.0);
        const cplx e = std::polar(1.0, th);
        // outermost crossing of the ray with the polyline
        double R = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx a = pts[j];
            const cplx d = pts[(j + 1) % n] - a;
            const double den = (e * std::conj(d)).imag();
            if (den == 0.0) continue;
            const double s = (a * std::conj(e)).imag() / (-(d * std::conj(e)).imag());
            if (s < 0.0 || s > 1.0) continue;
            const cplx hit = a + s * d;
            const double t = (hit * std::conj(e)).real();
            if (t > R) R = t;
        }
        if (!(R > 0.0)) throw DomainError("harmonic_moment_area: trace is not star-shaped about 0");
        const double F = k == 2 ? -std::log(R) : std::pow(R, 2.0 - k) / (k - 2);
        vals[i] = -std::sin(k * th) * F * 0.5 * kPi * rule.weights[i];
    });
    double sum = 0.0;
    for (double v : vals) sum += v;
    return 2.0 / (kPi * k) * sum;
}

BoundaryTrace half_disk_trace(std::size_t n) {
    if (n < 16) throw DomainError("half_disk_trace needs n >= 16");
    BoundaryTrace t;
    t.samples.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = phi_at(j, n);
        t.samples[j] = {phi, std::polar(1.0, phi)};
    }
    return t;
}

double petal_width(const BoundaryTrace& trace) {
    const double upper = trace.family && trace.family->variant() == Variant::TwoPetal ? 0.5 * kPi : kPi;
    std::vector<cplx> petal;
    for (const auto& s : trace.samples)
        if (s.phi > 0.0 && s.phi < upper) petal.push_back(s.z);
    if (petal.size() < 2) throw DomainError("petal_width: too few samples on the petal");
    cplx far = 0.0;
    for (const cplx& z : petal)
        if (std::abs(z) > std::abs(far)) far = z;
    if (far == 0.0) return 0.0;
    const cplx dir = far / std::abs(far);
    double width = 0.0;
    for (const cplx& z : petal) width = std::max(width, std::abs((z * std::conj(dir)).imag()));
    return width;
}

SweepResult sweep(std::span<const double> alphas, std::span<const double> betas,
                  const SweepOptions& options) {
    SweepResult r = sweep_shell(alphas, betas);
    const std::size_t nb = betas.size();
    detail::parallel_for(r.entries.size(), [&](std::size_t i) {
        r.entries[i] = sweep_node(alphas[i / nb], betas[i % nb], options);
    });
    return r;
}

SweepResult sweep_serial(std::span<const double> alphas, std::span<const double> betas,
                         const SweepOptions& options) {
    SweepResult r = sweep_shell(alphas, betas);
    const std::size_t nb = betas.size();
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        r.entries[i] = sweep_node(alphas[i / nb], betas[i % nb], options);
    return r;
}

std::map<std::string, double> default_tolerances() {
    return {
        {"A_spread", 1e-6},
        {"capacity_positive", 0.0},
        {"conformality", 0.0},
        {"corner_exponent", 0.02},
        {"darcy_mismatch", 1e-6},
        {"dynamical_residual", 1e-7},
        {"integral_equation", 1e-6},
        {"jump_relation", 1e-6},
        {"m_plus", 1e-3},
        {"normalization", 1e-6},
        {"ode_residual", 1e-7},
        {"oddness", 1e-12},
        {"reflection", 1e-12},
    };
}

VerificationReport run_full_verification(const MapFamily& family, const TimeState& state,
                                         const std::map<std::string, double>& overrides) {
    auto tol = default_tolerances();
    for (const auto& [name, value] : overrides) {
        auto it = tol.find(name);
        if (it == tol.end()) throw DomainError("unknown check name in tolerance override: " + name);
        it->second = value;
    }
    const bool one = family.variant() == Variant::OnePetal;
    VerificationReport rep;
    const auto run = [&](const std::string& name, auto&& body) {
        const double t = tol.at(name);
        try {
            body(name, t);
        } catch (const std::exception& ex) {
            rep.add_error(name, t, ex.what());
        }
    };

    run("ode_residual", [&](const std::string& name, double t) {
        double worst = 0.0;
        for (std::size_t j = 0; j < kRingSamples; ++j)
            worst = std::max(worst, ode_residual(family, std::polar(kRingRadius, phi_at(j, kRingSamples))));
        rep.add(name, worst, t, "ring |w| = 1.5, 64 points");
    });
    run("A_spread", [&](const std::string& name, double t) {
        const AEstimate a = estimate_A(family, false);
        std::ostringstream d;
        d.precision(17);
        d << "A = " << a.A;
        rep.add(name, a.spread, t, d.str());
    });
    run("dynamical_residual", [&](const std::string& name, double t) {
        rep.add(name, dynamical_residual(family, state, 128), t, "128 circle samples");
    });
    run("darcy_mismatch", [&](const std::string& name, double t) {
        const DarcyResult d = darcy_check(family, state, 256);
        std::ostringstream s;
        s << "min V_n = " << d.min_velocity;
        rep.add(name, d.min_velocity > 0.0 ? d.max_mismatch : std::numeric_limits<double>::infinity(),
                t, s.str());
    });
    run("conformality", [&](const std::string& name, double t) {
        const ConformalityResult c = conformality_check(family);
        std::ostringstream s;
        s << "winding = " << c.winding << ", turning = " << c.turning
          << (c.unstable ? ", unstable" : "");
        rep.add(name, std::max<double>(std::abs(c.winding), c.unstable ? 1.0 : 0.0), t, s.str());
    });
    run("corner_exponent", [&](const std::string& name, double t) {
        // a corner that is not a power law fails the check instead of erroring
        double worst = 0.0;
        bool power_law = true;
        std::vector<cplx> corners = {1.0};
        if (!one) corners.push_back(cplx(0.0, 1.0));
        for (const cplx c : corners) {
            const CornerFit fit = fit_corner(family, c);
            worst = std::max(worst, fit.relative_error);
            power_law = power_law && fit.residual_norm <= kCornerFitResidual;
        }
        rep.add(name, worst, t, power_law ? "relative error of the fitted exponent"
                                          : "log-log samples are not a power law");
        if (!power_law) rep.checks.back().pass = false;
    });
    run("normalization", [&](const std::string& name, double t) {
        const cplx w = 1e4;
        rep.add(name, std::abs(map_value(family, w) / w - 1.0), t, "|f(w)/w - 1| at w = 1e4");
    });
    const cplx probes[] = {cplx(1.3, 0.4), cplx(-0.7, 1.9), cplx(2.5, -1.1), cplx(0.2, 1.1)};
    run("oddness", [&](const std::string& name, double t) {
        double worst = 0.0;
        for (const cplx w : probes) {
            const cplx f = map_value(family, w);
            worst = std::max(worst, std::abs(map_value(family, -w) + f) / (1.0 + std::abs(f)));
        }
        rep.add(name, worst, t);
    });
    run("reflection", [&](const std::string& name, double t) {
        double worst = 0.0;
        for (const cplx w : probes) {
            const cplx f = map_value(family, w);
            worst = std::max(worst, std::abs(std::conj(map_value(family, std::conj(w))) - f) /
                                        (1.0 + std::abs(f)));
        }
        rep.add(name, worst, t);
    });
    run("capacity_positive", [&](const std::string& name, double t) {
        const LaurentCoefficients lc = laurent_coefficients(family, 4);
        std::ostringstream s;
        s.precision(17);
        s << "u1 = " << lc.u1;
        rep.add(name, std::max(0.0, -lc.u1), t, s.str());
    });
    if (one) {
        run("integral_equation", [&](const std::string& name, double t) {
            const cplx pts[] = {1.2, 1.5, 2.0, 4.0, cplx(1.1, 0.6), cplx(-0.4, 1.3)};
            rep.add(name, integral_equation_residual(family.alpha(), pts), t);
        });
        run("jump_relation", [&](const std::string& name, double t) {
            const double xs[] = {-0.8, -0.5, -0.2, 0.3, 0.6, 0.9};
            rep.add(name, jump_relation_residual(family.alpha(), xs), t);
        });
        run("m_plus", [&](const std::string& name, double t) {
            // polyline error near the corners grows like r; plain oversampling
            const BoundaryTrace trace = boundary_trace(family, state, 1u << 18);
            const cplx top = scaled_map(family, state, cplx(0.0, 1.0));
            const cplx z(0.0, 0.5 * top.imag());
            const double err = std::abs(m_plus_cauchy(trace, z) - m_plus_expected(family, state.T, z));
            rep.add(name, err / state.r(), t, "|error| / r, z on the symmetry axis at half height");
        });
    }
    return rep;
}

}  // namespace lgrowth
