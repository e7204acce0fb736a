#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgrowth/maps.hpp"
#include "lgrowth/verify.hpp"

namespace lgrowth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitUsage = 64;

/// Malformed command line input.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decimal radians ("0.39") or a multiple of pi ("pi/8", "3pi/8", "3*pi/8", "pi").
double parse_angle(const std::string& text);

/// "lo:hi:count", evenly spaced and inclusive; count 1 gives {lo}.
std::vector<double> parse_grid(const std::string& text);

/// Shortest text that reads back to the same double (17 significant digits).
std::string format_double(double x);

/// `phi,x,y` header, LF line endings.
void write_trace_csv(std::ostream& out, const BoundaryTrace& trace);
/// Reads what write_trace_csv wrote; the result carries no family.
BoundaryTrace read_trace_csv(std::istream& in);

/// Standalone SVG drawing of the trace as a closed polyline.
std::string trace_svg(const BoundaryTrace& trace);

/// {check: {residual, tolerance, pass[, error]}} in registration order.
std::string report_json(const VerificationReport& report);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgrowth::cli
