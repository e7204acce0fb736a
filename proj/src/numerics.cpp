#include "lgrowth/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lgrowth/errors.hpp"

namespace lgrowth {

Contour Contour::circle(cplx center, double radius, std::size_t n) {
    if (n == 0) throw DomainError("circle contour needs at least one node");
    if (!(radius > 0.0)) throw DomainError("circle contour needs a positive radius");
    Contour c;
    c.kind = Kind::ClosedPeriodic;
    c.span = 2.0 * kPi;
    c.params.resize(n);
    c.points.resize(n);
    c.tangents.resize(n);
    c.weights.assign(n, c.span / static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const double t = (static_cast<double>(j) + 0.5) * c.span / static_cast<double>(n);
        const cplx e = std::polar(1.0, t);
        c.params[j] = t;
        c.points[j] = center + radius * e;
        c.tangents[j] = cplx(0.0, radius) * e;
    }
    return c;
}

Contour Contour::segment(cplx a, cplx b, std::size_t n) {
    if (n == 0) throw DomainError("segment contour needs at least one node");
    const GaussLegendreRule rule = gauss_legendre(n);
    Contour c;
    c.kind = Kind::OpenInterval;
    c.span = 1.0;
    c.params.resize(n);
    c.points.resize(n);
    c.tangents.assign(n, b - a);
    c.weights.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = 0.5 * (rule.nodes[j] + 1.0);
        c.params[j] = t;
        c.points[j] = a + t * (b - a);
        c.weights[j] = 0.5 * rule.weights[j];
    }
    return c;
}

void Contour::validate() const {
    const std::size_t n = points.size();
    if (n == 0) throw DomainError("contour is empty");
    if (params.size() != n || tangents.size() != n || weights.size() != n)
        throw DomainError("contour arrays differ in length");
    for (std::size_t j = 0; j < n; ++j) {
        if (!(weights[j] > 0.0)) throw DomainError("contour weights must be positive");
        if (j > 0 && !(params[j] > params[j - 1]))
            throw DomainError("contour parameters must be strictly increasing");
    }
    if (kind == Kind::ClosedPeriodic) {
        // one full period, no node repeated at both ends
        if (!(params.back() - params.front() < span))
            throw DomainError("closed contour parameters exceed one period");
        const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
        if (std::abs(total - span) > 1e-12 * span)
            throw DomainError("closed contour weights do not cover the period");
    }
}

GaussLegendreRule gauss_legendre(std::size_t n) {
    if (n == 0) throw DomainError("Gauss-Legendre rule needs n >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double dk = static_cast<double>(k);
                const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
                p0 = p1;
                p1 = p2;
            }
            dp = dn * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

cplx contour_quadrature(const std::function<cplx(cplx)>& integrand, const Contour& contour) {
    contour.validate();
    cplx sum = 0.0;
    for (std::size_t j = 0; j < contour.size(); ++j) {
        const cplx value = integrand(contour.points[j]);
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            std::ostringstream msg;
            msg << "non-finite integrand at node " << j << " (z = " << contour.points[j] << ")";
            throw QuadratureError(msg.str(), j, contour.points[j]);
        }
        sum += value * contour.tangents[j] * contour.weights[j];
    }
    return sum;
}

cplx singular_endpoint_quadrature(const std::function<cplx(double, double, double)>& integrand, double a,
                                  double b, EndpointExponents exponents, std::size_t nodes_per_half) {
    if (!(exponents.at_a > -1.0) || !(exponents.at_b > -1.0))
        throw DomainError("endpoint exponent <= -1: integrand is not integrable");
    if (!(b > a)) throw DomainError("singular_endpoint_quadrature needs a < b");

    const GaussLegendreRule rule = gauss_legendre(nodes_per_half);
    const double half = 0.5 * (b - a);
    const double qa = 2.0 / (1.0 + exponents.at_a);
    const double qb = 2.0 / (1.0 + exponents.at_b);

    cplx sum = 0.0;
    const auto add = [&](std::size_t j, double x, double from_a, double from_b, double jac) {
        const cplx v = integrand(x, from_a, from_b);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw QuadratureError("non-finite integrand in singular quadrature", j, x);
        sum += 0.5 * rule.weights[j] * jac * v;
    };
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double s = 0.5 * (rule.nodes[j] + 1.0);
        // left half: x = a + half s^qa
        const double da = half * std::pow(s, qa);
        add(j, a + da, da, (b - a) - da, half * qa * std::pow(s, qa - 1.0));
        // right half: x = b - half s^qb
        const double db = half * std::pow(s, qb);
        add(j, b - db, (b - a) - db, db, half * qb * std::pow(s, qb - 1.0));
    }
    return sum;
}

cplx singular_endpoint_quadrature(const std::function<cplx(double)>& integrand, double a, double b,
                                  EndpointExponents exponents, std::size_t nodes_per_half) {
    return singular_endpoint_quadrature([&](double x, double, double) { return integrand(x); }, a, b, exponents,
                                        nodes_per_half);
}

double segment_distance(cplx z, cplx a, cplx b) {
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - a);
    const double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

double winding_turns(std::span<const cplx> trace, cplx z0) {
    const std::size_t n = trace.size();
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = trace[k] - z0;
        const cplx b = trace[(k + 1) % n] - z0;
        total += std::arg(b / a);
    }
    return total / (2.0 * kPi);
}

int winding_number(std::span<const cplx> trace, cplx z0, double tolerance) {
    const std::size_t n = trace.size();
    if (n < 3) throw DomainError("winding_number needs at least 3 points");
    double diameter = 0.0;
    for (std::size_t k = 1; k < n; ++k) diameter = std::max(diameter, std::abs(trace[k] - trace[0]));
    const double scale = std::max(diameter, 1e-300);
    for (std::size_t k = 0; k < n; ++k) {
        if (segment_distance(z0, trace[k], trace[(k + 1) % n]) <= tolerance * scale)
            throw DomainError("winding_number: point lies on the trace (ambiguous)");
    }
    return static_cast<int>(std::lround(winding_turns(trace, z0)));
}

double polyline_area(std::span<const cplx> trace) {
    const std::size_t n = trace.size();
    if (n < 3) throw DomainError("polyline_area needs at least 3 points");
    // shifted to the first vertex to limit cancellation
    const cplx origin = trace[0];
    double twice = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = trace[k] - origin;
        const cplx b = trace[(k + 1) % n] - origin;
        twice += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * twice;
}

PowerLawFit fit_power_law(std::span<const PowerSample> samples) {
    const std::size_t n = samples.size();
    if (n < 3) throw DomainError("fit_power_law needs at least 3 samples");
    std::vector<double> lx(n);
    std::vector<double> ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(samples[i].distance > 0.0) || !(samples[i].magnitude > 0.0))
            throw DomainError("fit_power_law: distances and magnitudes must be positive");
        lx[i] = std::log(samples[i].distance);
        ly[i] = std::log(samples[i].magnitude);
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 1e-24 * static_cast<double>(n)))
        throw DomainError("fit_power_law: degenerate samples (all distances equal)");

    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (fit.intercept + fit.exponent * lx[i]);
        rss += r * r;
    }
    fit.residual_norm = std::sqrt(rss);
    return fit;
}

cplx ridders_derivative(const std::function<cplx(double)>& fn, double x, double h0, double* error) {
    constexpr int kMax = 10;
    constexpr double kShrink = 1.4;
    constexpr double kShrink2 = kShrink * kShrink;
    if (!(h0 > 0.0)) throw DomainError("ridders_derivative needs a positive initial step");

    cplx table[kMax][kMax];
    double h = h0;
    table[0][0] = (fn(x + h) - fn(x - h)) / (2.0 * h);
    double best_err = 1e300;
    cplx best = table[0][0];
    for (int i = 1; i < kMax; ++i) {
        h /= kShrink;
        table[0][i] = (fn(x + h) - fn(x - h)) / (2.0 * h);
        double fac = kShrink2;
        for (int j = 1; j <= i; ++j) {
            table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
            fac *= kShrink2;
            const double err = std::max(std::abs(table[j][i] - table[j - 1][i]),
                                        std::abs(table[j][i] - table[j - 1][i - 1]));
            if (err <= best_err) {
                best_err = err;
                best = table[j][i];
            }
        }
        if (std::abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * best_err) break;
    }
    if (error != nullptr) *error = best_err;
    return best;
}

}  // namespace lgrowth
