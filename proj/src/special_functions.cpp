#include "lgrowth/special_functions.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "lgrowth/errors.hpp"

namespace lgrowth {
namespace {

constexpr int kMaxTerms = 10000;
constexpr double kSeriesRadius = 0.7;
constexpr double kRecentreThreshold = 0.85;
constexpr double kTermTolerance = 1e-16;
// closest c-a-b may come to an integer before the 1-t formula loses
// more than ~3 digits to cancellation
constexpr double kIntegerGuard = 1e-3;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::round(x); }

cplx hyp_series(double a, double b, double c, cplx t) {
    cplx term = 1.0;
    cplx sum = 1.0;
    int quiet = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const double dn = n;
        term *= ((a + dn) * (b + dn) / ((c + dn) * (dn + 1.0))) * t;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) <= kTermTolerance * std::abs(sum)) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("2F1 series did not converge within 10^4 terms");
}

// 1 - t connection formula; c - a - b must not be an integer.
cplx hyp_one_minus(double a, double b, double c, cplx t) {
    const cplx s = 1.0 - t;
    const double d = c - a - b;
    const double gc = gamma_fn(c);
    const double k1 = gc * gamma_fn(d) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
    const double k2 = gc * gamma_fn(-d) * reciprocal_gamma(a) * reciprocal_gamma(b);
    cplx result = 0.0;
    if (k1 != 0.0) result += k1 * hyp_series(a, b, 1.0 - d, s);
    if (k2 != 0.0) result += k2 * branch_power(s, d) * hyp_series(c - a, c - b, 1.0 + d, s);
    return result;
}

// Pfaff: 2F1(a,b;c;t) = (1-t)^(-a) 2F1(a, c-b; c; t/(t-1))
cplx hyp_pfaff(double a, double b, double c, cplx t) {
    return branch_power(1.0 - t, -a) * hyp_series(a, c - b, c, t / (t - 1.0));
}

// Taylor series of the hypergeometric ODE about t0 = 0.75 t / |t|, for the
// points near |t| = 1, Re t = 1/2 where every other route converges
// algebraically. The segment t0 -> t stays on one ray, off the cut [1, inf).
cplx hyp_recentered(double a, double b, double c, cplx t) {
    const cplx t0 = 0.75 * t / std::abs(t);
    const cplx s = t - t0;
    const cplx p0 = t0 * (1.0 - t0);
    const cplx q0 = c - (a + b + 1.0) * t0;
    const cplx p1 = 1.0 - 2.0 * t0;
    cplx cn = hyp_series(a, b, c, t0);                           // c_n
    cplx cn1 = (a * b / c) * hyp_series(a + 1.0, b + 1.0, c + 1.0, t0);  // c_{n+1}
    cplx sn = 1.0;
    cplx sum = cn + cn1 * s;
    int quiet = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const double dn = n;
        const cplx cn2 = -((dn + 1.0) * (p1 * dn + q0) * cn1 - (dn + a) * (dn + b) * cn) /
                         (p0 * (dn + 2.0) * (dn + 1.0));
        sn *= s;
        const cplx term = cn2 * sn * s;
        sum += term;
        cn = cn1;
        cn1 = cn2;
        if (std::abs(term) <= kTermTolerance * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("2F1 recentred series did not converge within 10^4 terms");
}

cplx lanczos_log_gamma(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

bool hyp2f1_admissible(cplx t) { return std::abs(t) < 1.0 || t.real() < 0.5; }

cplx gauss_2f1(const Hyp2F1Params& params, cplx t) {
    // fixed parameter order keeps 2F1(a,b) and 2F1(b,a) bit-identical
    Hyp2F1Params p = params;
    if (p.b < p.a) std::swap(p.a, p.b);
    if (is_nonpositive_integer(p.c)) throw DomainError("2F1: c is a non-positive integer");
    if (t == 0.0) return 1.0;
    const double at = std::abs(t);
    if (at <= kSeriesRadius) return hyp_series(p.a, p.b, p.c, t);
    if (!hyp2f1_admissible(t)) throw DomainError("2F1: argument outside the admissible set");

    enum class Route { Direct, Pfaff, OneMinus };
    Route route = Route::Direct;
    double best = at < 1.0 ? at : 1e300;
    if (t.real() < 0.5) {
        const double m = std::abs(t / (t - 1.0));
        if (m < best) best = m, route = Route::Pfaff;
    }
    const double d = p.c - p.a - p.b;
    if (std::abs(d - std::round(d)) > kIntegerGuard) {
        const double m = std::abs(1.0 - t);
        if (m < 1.0 && m < best) best = m, route = Route::OneMinus;
    }
    if (best > kRecentreThreshold && at < 1.3) return hyp_recentered(p.a, p.b, p.c, t);
    switch (route) {
        case Route::Pfaff: return hyp_pfaff(p.a, p.b, p.c, t);
        case Route::OneMinus: return hyp_one_minus(p.a, p.b, p.c, t);
        case Route::Direct: break;
    }
    return hyp_series(p.a, p.b, p.c, t);
}

cplx log_gamma(cplx x) {
    if (x.imag() == 0.0 && is_nonpositive_integer(x.real()))
        throw DomainError("log_gamma: pole at a non-positive integer");
    if (x.real() >= 0.5) return lanczos_log_gamma(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(kPi) - std::log(std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
}

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) throw DomainError("gamma: pole at a non-positive integer");
    if (x >= 0.5) return std::exp(lanczos_log_gamma(cplx(x, 0.0)).real());
    return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / gamma_fn(x);
}

cplx branch_power(cplx base, double exponent) {
    if (exponent == 0.0) return 1.0;
    if (base == 0.0) {
        if (exponent > 0.0) return 0.0;
        throw DomainError("branch_power: zero base with non-positive exponent");
    }
    return std::exp(exponent * std::log(base));
}

cplx branch_power_cut(cplx base, double exponent, double cut_angle) {
    if (exponent == 0.0) return 1.0;
    if (base == 0.0) {
        if (exponent > 0.0) return 0.0;
        throw DomainError("branch_power_cut: zero base with non-positive exponent");
    }
    double arg = std::arg(base);
    while (arg > cut_angle) arg -= 2.0 * kPi;
    while (arg <= cut_angle - 2.0 * kPi) arg += 2.0 * kPi;
    return std::exp(exponent * cplx(std::log(std::abs(base)), arg));
}

}  // namespace lgrowth
