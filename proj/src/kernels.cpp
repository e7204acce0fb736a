#include "lgrowth/kernels.hpp"

#include <array>
#include <cmath>

#include "lgrowth/errors.hpp"
#include "parallel.hpp"

namespace lgrowth {
namespace {

constexpr std::size_t kChunks = 64;

// |Im| is linear on each piece once a segment is cut at Im z = 0
template <class Piece>
cplx split_segment(cplx a, cplx b, Piece&& piece) {
    if ((a.imag() < 0.0 && b.imag() > 0.0) || (a.imag() > 0.0 && b.imag() < 0.0)) {
        const double s = a.imag() / (a.imag() - b.imag());
        const cplx m(a.real() + s * (b.real() - a.real()), 0.0);
        return piece(a, m) + piece(m, b);
    }
    return piece(a, b);
}

cplx cauchy_piece(cplx z1, cplx z2, cplx z) {
    const cplx delta = z2 - z1;
    if (delta == 0.0) return 0.0;
    const double y1 = std::abs(z1.imag());
    const double dy = std::abs(z2.imag()) - y1;
    return (y1 - dy * (z1 - z) / delta) * std::log((z2 - z) / (z1 - z)) + dy;
}

cplx ipow(cplx z, int e) {
    cplx r = 1.0;
    const cplx b = e < 0 ? 1.0 / z : z;
    for (int i = std::abs(e); i > 0; --i) r *= b;
    return r;
}

cplx moment_piece(cplx z1, cplx z2, int k) {
    const cplx delta = z2 - z1;
    if (delta == 0.0) return 0.0;
    const double y1 = std::abs(z1.imag());
    const cplx slope = (std::abs(z2.imag()) - y1) / delta;
    const cplx a0 = y1 - slope * z1;
    // a0 Z^-k + slope Z^(1-k)
    const double km = k;
    cplx v = a0 * (ipow(z2, 1 - k) - ipow(z1, 1 - k)) / (1.0 - km);
    if (k == 2)
        v += slope * std::log(z2 / z1);
    else
        v += slope * (ipow(z2, 2 - k) - ipow(z1, 2 - k)) / (2.0 - km);
    return v;
}

template <class Segment>
cplx chunked_sum(std::size_t n, Segment&& seg) {
    std::array<cplx, kChunks> partial{};
    detail::parallel_for(kChunks, [&](std::size_t c) {
        const std::size_t lo = c * n / kChunks;
        const std::size_t hi = (c + 1) * n / kChunks;
        cplx s = 0.0;
        for (std::size_t j = lo; j < hi; ++j) s += seg(j);
        partial[c] = s;
    });
    cplx total = 0.0;
    for (const cplx& p : partial) total += p;
    return total;
}

void require_polyline(std::span<const cplx> trace) {
    if (trace.size() < 3) throw DomainError("polyline needs at least 3 points");
}

void require_order(int k) {
    if (k < 2) throw DomainError("moment order k must be >= 2");
}

void require_off_origin(std::span<const cplx> trace) {
    const std::size_t n = trace.size();
    for (std::size_t j = 0; j < n; ++j)
        if (segment_distance(0.0, trace[j], trace[(j + 1) % n]) == 0.0)
            throw DomainError("polyline passes through the origin");
}

}  // namespace

cplx cauchy_polyline(std::span<const cplx> trace, cplx z) {
    require_polyline(trace);
    const std::size_t n = trace.size();
    return chunked_sum(n, [&](std::size_t j) {
        return split_segment(trace[j], trace[(j + 1) % n],
                             [&](cplx a, cplx b) { return cauchy_piece(a, b, z); });
    });
}

cplx cauchy_polyline_serial(std::span<const cplx> trace, cplx z) {
    require_polyline(trace);
    const std::size_t n = trace.size();
    cplx total = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        total += split_segment(trace[j], trace[(j + 1) % n],
                               [&](cplx a, cplx b) { return cauchy_piece(a, b, z); });
    return total;
}

cplx moment_polyline(std::span<const cplx> trace, int k) {
    require_polyline(trace);
    require_order(k);
    require_off_origin(trace);
    const std::size_t n = trace.size();
    return chunked_sum(n, [&](std::size_t j) {
        return split_segment(trace[j], trace[(j + 1) % n],
                             [&](cplx a, cplx b) { return moment_piece(a, b, k); });
    });
}

cplx moment_polyline_serial(std::span<const cplx> trace, int k) {
    require_polyline(trace);
    require_order(k);
    require_off_origin(trace);
    const std::size_t n = trace.size();
    cplx total = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        total += split_segment(trace[j], trace[(j + 1) % n],
                               [&](cplx a, cplx b) { return moment_piece(a, b, k); });
    return total;
}

}  // namespace lgrowth
