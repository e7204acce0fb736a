#include "lgrowth/maps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lgrowth/errors.hpp"
#include "parallel.hpp"

namespace lgrowth {
namespace {

// |w| = 1 computed in floating point may land a hair inside
constexpr double kUnitSlack = 1e-12;
constexpr double kStencilFraction = 0.35;
constexpr double kMinSingularDistance = 1e-9;
// half-width in delta of the interpolation window around beta = pi/4
constexpr double kGammaPoleWindow = 1e-5;
const double kSqrtPi = std::sqrt(kPi);

MapFamily::InnerBranch make_inner(double alpha, double beta, double weight) {
    const double ap = alpha / kPi;
    const double bp = beta / kPi;
    const double d = 2.0 * bp;
    MapFamily::InnerBranch br{};
    br.alpha = alpha;
    br.beta = beta;
    br.mu = d;
    br.weight = weight;
    br.c1 = cplx(0.0, 1.0) * std::polar(1.0, -beta) * kSqrtPi * gamma_fn(0.5 - d) *
            reciprocal_gamma(ap - bp) * reciprocal_gamma(1.0 - ap - bp);
    br.c2 = std::polar(1.0, beta) * kSqrtPi * gamma_fn(d - 0.5) *
            reciprocal_gamma(ap + bp - 0.5) * reciprocal_gamma(0.5 - ap + bp);
    br.f1 = {ap + bp - 0.5, ap + bp, d + 0.5};
    br.f2 = {ap - bp + 0.5, ap - bp, 1.5 - d};
    return br;
}

void require_angle(double x, const char* name) {
    if (!(x > 0.0 && x < 0.5 * kPi)) {
        std::ostringstream msg;
        msg << name << " must lie in (0, pi/2), got " << x;
        throw DomainError(msg.str());
    }
}

// outer form, |p| > 2
cplx outer_value(const MapFamily& fam, cplx p) {
    const cplx s = 4.0 / (p * p);
    if (!hyp2f1_admissible(s)) throw DomainError("z_of_p: |p| = 2 is a branch point");
    return p * branch_power(1.0 - s, fam.alpha() / kPi) * gauss_2f1(fam.outer_params(), s);
}

// inner form, |p| < 2, and its continuation across (-2, 2) into Im p < 0
cplx inner_value(const MapFamily& fam, cplx p) {
    const cplx t = 0.25 * p * p;
    if (!hyp2f1_admissible(t)) throw DomainError("z_of_p: continuation outside the admissible set");
    const cplx half = 0.5 * p;
    const cplx pre = 2.0 * branch_power(1.0 - t, fam.alpha() / kPi);
    cplx sum = 0.0;
    for (const auto& br : fam.inner_branches()) {
        cplx v = 0.0;
        if (br.c1 != 0.0)
            v += br.c1 * branch_power_cut(half, br.mu, 1.5 * kPi) * gauss_2f1(br.f1, t);
        if (br.c2 != 0.0)
            v += br.c2 * branch_power_cut(half, 1.0 - br.mu, 1.5 * kPi) * gauss_2f1(br.f2, t);
        sum += br.weight * v;
    }
    return pre * sum;
}

cplx one_petal_closed(double gamma, cplx w) {
    const cplx u = 1.0 / w;
    return w * std::sqrt(1.0 - u * u) * one_petal_ratio(gamma, w);
}

// Im w >= 0 half of the two-petal map, continued inside the disk
cplx two_petal_upper(const MapFamily& fam, cplx w) {
    const cplx p = w + 1.0 / w;
    if (std::abs(w) >= 1.0 - kUnitSlack && std::abs(p) >= 2.0 && hyp2f1_admissible(4.0 / (p * p)))
        return outer_value(fam, p);
    return inner_value(fam, p);
}

void reject_corner(const MapFamily& fam, cplx w) {
    for (const cplx c : fam.corners())
        if (std::abs(w - c) < kMinSingularDistance)
            throw DomainError("map evaluated at a corner pre-image");
}

void require_exterior(cplx w) {
    if (!(std::abs(w) >= 1.0 - kUnitSlack)) throw DomainError("map needs |w| >= 1");
}

cplx newton_solve(const MapFamily& fam, cplx target, cplx w) {
    const auto eval = [&](cplx x) { return map_continued(fam, x); };
    cplx fw = eval(w);
    for (int iter = 0; iter < 100; ++iter) {
        const cplx res = fw - target;
        if (std::abs(res) < 1e-13 * (1.0 + std::abs(target))) return w;
        const cplx step = res / map_derivatives(fam, w, 16).df;
        double lambda = 1.0;
        bool moved = false;
        for (int k = 0; k < 40; ++k) {
            const cplx trial = w - lambda * step;
            try {
                const cplx ft = eval(trial);
                if (std::abs(ft - target) < std::abs(res)) {
                    w = trial;
                    fw = ft;
                    moved = true;
                    break;
                }
            } catch (const DomainError&) {
            }
            lambda *= 0.5;
        }
        if (!moved) break;
    }
    if (std::abs(fw - target) < 1e-11 * (1.0 + std::abs(target))) return w;
    throw ConvergenceError("invert_map: Newton iteration did not converge");
}

}  // namespace

cplx one_petal_ratio(double gamma, cplx w) {
    const cplx u = 1.0 / w;
    const cplx q = branch_power((1.0 - u) / (1.0 + u), gamma);
    return 0.5 * (q + 1.0 / q) + 0.5 * u * (q - 1.0 / q);
}

cplx one_petal_closed_form(double gamma, cplx w) { return one_petal_closed(gamma, w); }

MapFamily MapFamily::one_petal(double alpha) {
    require_angle(alpha, "alpha");
    MapFamily f;
    f.variant_ = Variant::OnePetal;
    f.alpha_ = alpha;
    f.gamma_ = 2.0 * alpha / kPi - 0.5;
    return f;
}

MapFamily MapFamily::two_petal(double alpha, double beta) {
    require_angle(alpha, "alpha");
    require_angle(beta, "beta");
    MapFamily f;
    f.variant_ = Variant::TwoPetal;
    f.alpha_ = alpha;
    f.beta_ = beta;
    f.gamma_ = 2.0 * alpha / kPi - 0.5;
    f.delta_ = 2.0 * beta / kPi;
    f.outer_ = {(alpha + beta) / kPi - 0.5, (alpha - beta) / kPi, 0.5};
    const double off = f.delta_ - 0.5;
    if (std::abs(off) < kGammaPoleWindow) {
        // Gamma(1/2 - delta) has a pole here; interpolate across it
        const double lo = 0.5 - kGammaPoleWindow;
        const double hi = 0.5 + kGammaPoleWindow;
        const double wlo = (hi - f.delta_) / (hi - lo);
        f.inner_.push_back(make_inner(alpha, 0.5 * kPi * lo, wlo));
        f.inner_.push_back(make_inner(alpha, 0.5 * kPi * hi, 1.0 - wlo));
    } else {
        f.inner_.push_back(make_inner(alpha, beta, 1.0));
    }
    return f;
}

std::vector<cplx> MapFamily::corners() const {
    if (variant_ == Variant::OnePetal) return {1.0, -1.0};
    return {1.0, cplx(0.0, 1.0), -1.0, cplx(0.0, -1.0)};
}

std::string MapFamily::describe() const {
    std::ostringstream s;
    s.precision(17);
    if (variant_ == Variant::OnePetal)
        s << "one-petal alpha=" << alpha_;
    else
        s << "two-petal alpha=" << alpha_ << " beta=" << beta_;
    return s.str();
}

TimeState TimeState::make(double T, double A) {
    if (!(T > 0.0)) throw DomainError("T must be positive");
    if (!(A > 0.0)) throw DomainError("A must be positive");
    return {T, A};
}

std::vector<cplx> BoundaryTrace::points() const {
    std::vector<cplx> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(),
                   [](const TraceSample& s) { return s.z; });
    return out;
}

cplx one_petal_map(const MapFamily& family, cplx w) {
    if (family.variant() != Variant::OnePetal) throw DomainError("one_petal_map: wrong family");
    require_exterior(w);
    reject_corner(family, w);
    return one_petal_closed(family.gamma(), w);
}

cplx two_petal_map(const MapFamily& family, cplx w) {
    if (family.variant() != Variant::TwoPetal) throw DomainError("two_petal_map: wrong family");
    require_exterior(w);
    reject_corner(family, w);
    if (w.imag() < 0.0) return std::conj(two_petal_upper(family, std::conj(w)));
    return two_petal_upper(family, w);
}

cplx map_value(const MapFamily& family, cplx w) {
    return family.variant() == Variant::OnePetal ? one_petal_map(family, w)
                                                 : two_petal_map(family, w);
}

cplx map_continued(const MapFamily& family, cplx w) {
    if (singular_distance(family, w) < kMinSingularDistance)
        throw DomainError("map_continued: point on a cut or at a corner");
    if (family.variant() == Variant::OnePetal) return one_petal_closed(family.gamma(), w);
    if (w.imag() < 0.0) return std::conj(two_petal_upper(family, std::conj(w)));
    return two_petal_upper(family, w);
}

cplx z_of_p(const MapFamily& family, cplx p, PSide side) {
    if (family.variant() != Variant::TwoPetal) throw DomainError("z_of_p: two-petal family only");
    const double ap = std::abs(p);
    if (std::abs(ap - 2.0) < 1e-14) throw DomainError("z_of_p: |p| = 2 is a branch point");
    const bool lower = p.imag() < 0.0 || (p.imag() == 0.0 && side == PSide::Lower);
    const cplx q = lower ? std::conj(p) : p;
    const cplx z = ap > 2.0 ? outer_value(family, q) : inner_value(family, q);
    return lower ? std::conj(z) : z;
}

double singular_distance(const MapFamily& family, cplx w) {
    double d = segment_distance(w, -1.0, 1.0);
    if (family.variant() == Variant::TwoPetal)
        d = std::min(d, segment_distance(w, cplx(0.0, -1.0), cplx(0.0, 1.0)));
    return d;
}

MapDerivatives map_derivatives(const MapFamily& family, cplx w, int nodes) {
    if (nodes < 8) throw DomainError("map_derivatives: stencil needs at least 8 nodes");
    const double d = singular_distance(family, w);
    if (d < kMinSingularDistance) throw DomainError("map_derivatives: too close to a corner pre-image");
    const double rho = kStencilFraction * d;
    cplx s0 = 0.0;
    cplx s1 = 0.0;
    cplx s2 = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const cplx e = std::polar(1.0, 2.0 * kPi * (k + 0.5) / nodes);
        const cplx v = map_continued(family, w + rho * e);
        s0 += v;
        s1 += v / e;
        s2 += v / (e * e);
    }
    const double n = nodes;
    MapDerivatives out;
    out.f = s0 / n;
    out.df = s1 / (n * rho);
    out.d2f = 2.0 * s2 / (n * rho * rho);
    return out;
}

cplx map_derivative(const MapFamily& family, cplx w) { return map_derivatives(family, w).df; }

cplx invert_map(const MapFamily& family, cplx z, std::optional<cplx> guess, double r) {
    if (!(r > 0.0)) throw DomainError("invert_map: r must be positive");
    const cplx target = z / r;
    cplx w;
    if (guess) {
        w = newton_solve(family, target, *guess);
    } else {
        // pull the easy far-field root in along the ray through z
        const double mag = std::abs(target);
        if (mag == 0.0) throw DomainError("invert_map: z = 0 lies in the pattern");
        double s = std::max(1.0, 64.0 / mag);
        w = s * target;
        while (true) {
            w = newton_solve(family, s * target, w);
            if (s == 1.0) break;
            s = std::max(1.0, 0.7 * s);
        }
    }
    if (std::abs(w) < 1.0 - 1e-8) throw DomainError("invert_map: root lies off the exterior sheet");
    return w;
}

cplx scaled_map(const MapFamily& family, const TimeState& state, cplx w) {
    if (!(state.T > 0.0) || !(state.A > 0.0)) throw DomainError("scaled_map: T and A must be positive");
    return state.r() * map_value(family, w);
}

cplx potential_V(const MapFamily& family, cplx w) {
    const cplx w2 = w * w;
    if (std::abs(w2 - 1.0) < 1e-300 ||
        (family.variant() == Variant::TwoPetal && std::abs(w2 + 1.0) < 1e-300))
        throw DomainError("potential_V: pole");
    const double ap = family.alpha() / kPi;
    cplx v = 16.0 * ap * (1.0 - ap) * w2 / ((w2 - 1.0) * (w2 - 1.0));
    if (family.variant() == Variant::TwoPetal) {
        const double bp = family.beta() / kPi;
        v -= 8.0 * bp * (1.0 - 2.0 * bp) * w2 / ((w2 + 1.0) * (w2 + 1.0));
    }
    return v;
}

double pressure(const MapFamily& family, const TimeState& state, cplx z) {
    const double r = state.r();
    const cplx w = invert_map(family, z, std::nullopt, r);
    return (r * (w + 1.0 / w)).imag();
}

namespace {

void check_trace_size(const MapFamily& family, std::size_t n) {
    if (n < 16) throw DomainError("boundary_trace needs n >= 16");
    const std::size_t m = family.variant() == Variant::OnePetal ? 2 : 4;
    if (n % m != 0)
        throw DomainError(m == 2 ? "boundary_trace: n must be even"
                                 : "boundary_trace: n must be a multiple of 4");
}

TraceSample upper_sample(const MapFamily& family, double r, std::size_t j, std::size_t n) {
    const double phi = (static_cast<double>(j) + 0.5) * 2.0 * kPi / static_cast<double>(n);
    const cplx w = std::polar(1.0, phi);
    cplx z;
    if (family.variant() == Variant::TwoPetal)
        z = z_of_p(family, 2.0 * std::cos(phi), PSide::Upper);
    else
        z = one_petal_closed(family.gamma(), w);
    return {phi, r * z};
}

BoundaryTrace trace_shell(const MapFamily& family, std::size_t n) {
    BoundaryTrace t;
    t.family = family;
    t.samples.resize(n);
    t.counter_clockwise = true;
    return t;
}

void mirror_lower(BoundaryTrace& t) {
    const std::size_t n = t.samples.size();
    for (std::size_t j = 0; j < n / 2; ++j) {
        const TraceSample& s = t.samples[j];
        t.samples[n - 1 - j] = {2.0 * kPi - s.phi, std::conj(s.z)};
    }
}

}  // namespace

BoundaryTrace boundary_trace(const MapFamily& family, const TimeState& state, std::size_t n) {
    check_trace_size(family, n);
    BoundaryTrace t = trace_shell(family, n);
    const double r = state.r();
    detail::parallel_for(n / 2, [&](std::size_t j) { t.samples[j] = upper_sample(family, r, j, n); });
    mirror_lower(t);
    return t;
}

BoundaryTrace boundary_trace_serial(const MapFamily& family, const TimeState& state,
                                    std::size_t n) {
    check_trace_size(family, n);
    BoundaryTrace t = trace_shell(family, n);
    const double r = state.r();
    for (std::size_t j = 0; j < n / 2; ++j) t.samples[j] = upper_sample(family, r, j, n);
    mirror_lower(t);
    return t;
}

LaurentCoefficients laurent_coefficients(const MapFamily& family, std::size_t K, double radius) {
    if (K < 1) throw DomainError("laurent_coefficients needs K >= 1");
    if (!(radius > 1.0)) throw DomainError("laurent_coefficients needs radius > 1");
    const std::size_t n = std::max<std::size_t>(256, 8 * K);
    std::vector<cplx> w(n);
    std::vector<cplx> f(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = std::polar(radius, (static_cast<double>(j) + 0.5) * 2.0 * kPi / static_cast<double>(n));
        f[j] = map_value(family, w[j]);
    }
    const auto coef = [&](int power) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += f[j] * std::pow(w[j], power);
        return s / static_cast<double>(n);
    };
    LaurentCoefficients out;
    const cplx r = coef(-1);
    out.r = r.real();
    out.max_imaginary = std::abs(r.imag());
    out.c.resize(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        const cplx c = coef(static_cast<int>(k));
        out.c[k] = c.real();
        out.max_imaginary = std::max(out.max_imaginary, std::abs(c.imag()));
    }
    if (out.max_imaginary > 1e-8)
        throw SymmetryError("laurent_coefficients: coefficients are not real");
    out.u0 = out.c[0];
    out.u1 = out.r * (out.r - out.c[1]);
    return out;
}

}  // namespace lgrowth
