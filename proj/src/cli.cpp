#include "lgrowth/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lgrowth/errors.hpp"

namespace lgrowth::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kDefaultTraceSamples = 2048;
constexpr std::size_t kDefaultMomentSamples = 1u << 14;

struct Options {
    std::string family = "one-petal";
    std::string alpha = "pi/4";
    std::string beta;
    double T = 1.0;
    std::string A = "auto";
    std::size_t n = 0;
    int kmax = 0;
    std::string out;
    std::string svg;
    std::string report;
    std::string alpha_grid;
    std::string beta_grid;
    std::string trace_in;
    std::vector<std::string> tol_overrides;
    std::vector<std::string> z_points;
};

bool parse_number(std::string_view s, double& x) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(x);
}

json number_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

MapFamily build_family(const Options& o) {
    const double alpha = parse_angle(o.alpha);
    try {
        if (o.family == "one-petal") {
            if (!o.beta.empty()) throw UsageError("--beta applies to the two-petal family only");
            return MapFamily::one_petal(alpha);
        }
        if (o.beta.empty()) throw UsageError("--beta is required for the two-petal family");
        return MapFamily::two_petal(alpha, parse_angle(o.beta));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

struct ResolvedState {
    TimeState state;
    bool estimated = false;
};

ResolvedState build_state(const MapFamily& fam, const Options& o) {
    if (!(o.T > 0.0)) throw UsageError("--T must be positive");
    ResolvedState r;
    if (o.A == "auto") {
        r.state = TimeState::make(o.T, estimate_A(fam, false).A);
        r.estimated = true;
    } else {
        double a = 0.0;
        if (!parse_number(o.A, a) || !(a > 0.0)) throw UsageError("--A must be a positive number or 'auto'");
        r.state = TimeState::make(o.T, a);
    }
    return r;
}

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw Error("failed writing " + path);
}

std::string sidecar_path(const std::string& csv) {
    std::filesystem::path p(csv);
    if (p.extension() == ".csv") return p.replace_extension(".json").string();
    return csv + ".json";
}

json family_json(const MapFamily& fam) {
    json j;
    j["family"] = fam.variant() == Variant::OnePetal ? "one-petal" : "two-petal";
    j["alpha"] = fam.alpha();
    j["beta"] = fam.variant() == Variant::TwoPetal ? json(fam.beta()) : json(nullptr);
    return j;
}

std::optional<MapFamily> family_from_sidecar(const std::string& csv) {
    const std::string path = sidecar_path(csv);
    std::ifstream f(path);
    if (!f) return std::nullopt;
    json j;
    try {
        j = json::parse(f);
        if (!j.contains("family")) return std::nullopt;
        const std::string name = j.at("family").get<std::string>();
        const double alpha = j.at("alpha").get<double>();
        if (name == "one-petal") return MapFamily::one_petal(alpha);
        if (name == "two-petal") return MapFamily::two_petal(alpha, j.at("beta").get<double>());
    } catch (const std::exception& e) {
        throw UsageError("malformed sidecar " + path + ": " + e.what());
    }
    throw UsageError("sidecar " + path + " names an unknown family");
}

cplx parse_point(const std::string& text) {
    const auto comma = text.find(',');
    double re = 0.0;
    double im = 0.0;
    if (comma == std::string::npos || !parse_number(std::string_view(text).substr(0, comma), re) ||
        !parse_number(std::string_view(text).substr(comma + 1), im))
        throw UsageError("malformed point '" + text + "' (expected re,im)");
    return {re, im};
}

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
    const auto known = default_tolerances();
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        double v = 0.0;
        if (eq == std::string::npos || !parse_number(std::string_view(item).substr(eq + 1), v) || v < 0.0)
            throw UsageError("malformed --tol-override '" + item + "' (expected name=value)");
        const std::string name = item.substr(0, eq);
        if (!known.count(name)) throw UsageError("unknown check name '" + name + "' in --tol-override");
        out[name] = v;
    }
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_trace(const Options& o, std::ostream& out, std::ostream& err) {
    const MapFamily fam = build_family(o);
    const ResolvedState rs = build_state(fam, o);
    const std::size_t n = o.n ? o.n : kDefaultTraceSamples;
    BoundaryTrace trace;
    try {
        trace = boundary_trace(fam, rs.state, n);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    write_trace_csv(csv, trace);
    write_file(o.out, csv.str(), out);
    if (!o.svg.empty()) write_file(o.svg, trace_svg(trace), out);

    const ConformalityResult c = conformality_check(fam);
    json side = family_json(fam);
    side["T"] = rs.state.T;
    side["A"] = rs.state.A;
    side["A_source"] = rs.estimated ? "estimated" : "given";
    side["n"] = n;
    side["winding"] = c.winding;
    side["conformal"] = c.ok;
    side["warning"] = !c.ok;
    side["message"] = c.ok ? "" : (c.unstable ? "conformality check unstable"
                                              : "map is not conformal; trace is not a physical contour");
    if (!c.ok) err << "warning: " << side["message"].get<std::string>() << "\n";
    if (!o.out.empty() && o.out != "-") write_file(sidecar_path(o.out), side.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const MapFamily fam = build_family(o);
    const auto overrides = parse_overrides(o.tol_overrides);
    const ResolvedState rs = build_state(fam, o);
    const VerificationReport rep = run_full_verification(fam, rs.state, overrides);
    write_file(o.report, report_json(rep), out);
    if (!o.report.empty() && o.report != "-") {
        for (const auto& c : rep.checks)
            out << (c.pass ? "PASS " : "FAIL ") << c.name << " residual=" << format_double(c.residual)
                << " tolerance=" << format_double(c.tolerance) << "\n";
    }
    for (const auto& c : rep.checks)
        if (c.error) err << "error in " << c.name << ": " << *c.error << "\n";
    if (rep.any_error()) return kExitRuntime;
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.alpha_grid.empty() || o.beta_grid.empty())
        throw UsageError("sweep needs --alpha-grid and --beta-grid");
    const auto alphas = parse_grid(o.alpha_grid);
    const auto betas = parse_grid(o.beta_grid);
    SweepResult r;
    try {
        r = sweep(alphas, betas);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    csv << "alpha,beta,winding,conformal,degenerate\n";
    for (const auto& e : r.entries) {
        if (e.error)
            err << "node alpha=" << format_double(e.alpha) << " beta=" << format_double(e.beta) << ": "
                << *e.error << "\n";
        csv << format_double(e.alpha) << ',' << format_double(e.beta) << ',' << e.winding << ','
            << (e.conformal ? 1 : 0) << ',' << (e.degenerate ? 1 : 0) << '\n';
    }
    write_file(o.out, csv.str(), out);
    return kExitOk;
}

int cmd_moments(const Options& o, std::ostream& out, std::ostream&) {
    if (o.kmax != 0 && o.kmax < 2) throw UsageError("--kmax must be >= 2");
    BoundaryTrace trace;
    std::optional<MapFamily> fam;
    std::optional<ResolvedState> rs;
    json doc;
    if (!o.trace_in.empty()) {
        std::ifstream f(o.trace_in, std::ios::binary);
        if (!f) throw UsageError("cannot read trace file " + o.trace_in);
        trace = read_trace_csv(f);
        trace.family = family_from_sidecar(o.trace_in);
        doc["source"] = o.trace_in;
    } else {
        fam = build_family(o);
        rs = build_state(*fam, o);
        try {
            trace = boundary_trace(*fam, rs->state, o.n ? o.n : kDefaultMomentSamples);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        doc["source"] = "family";
        doc.update(family_json(*fam));
        doc["T"] = rs->state.T;
        doc["A"] = rs->state.A;
    }
    doc["n"] = trace.samples.size();

    std::vector<cplx> zs;
    for (const auto& s : o.z_points) zs.push_back(parse_point(s));
    if (zs.empty() && fam && fam->variant() == Variant::OnePetal)
        zs.push_back(cplx(0.0, 0.5 * scaled_map(*fam, rs->state, cplx(0.0, 1.0)).imag()));

    json mp = json::array();
    for (const cplx z : zs) {
        const cplx m = m_plus_cauchy(trace, z);
        json e;
        e["z"] = {z.real(), z.imag()};
        e["m_plus"] = {m.real(), m.imag()};
        if (fam && fam->variant() == Variant::OnePetal) {
            const cplx x = m_plus_expected(*fam, rs->state.T, z);
            e["expected"] = {x.real(), x.imag()};
        }
        mp.push_back(e);
    }
    doc["m_plus"] = mp;

    if (o.kmax >= 2) {
        json tk = json::array();
        for (int k = 2; k <= o.kmax; ++k) {
            json e;
            e["k"] = k;
            e["contour"] = harmonic_moment(trace, k);
            e["area"] = harmonic_moment_area(trace, k);
            tk.push_back(e);
        }
        doc["moments"] = tk;
    }
    write_file(o.out, doc.dump(2) + "\n", out);
    return kExitOk;
}

void add_family_options(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "one-petal or two-petal")
        ->check(CLI::IsMember({"one-petal", "two-petal"}));
    sub->add_option("--alpha", o.alpha, "petal base angle: radians or a multiple of pi (pi/8)");
    sub->add_option("--beta", o.beta, "half opening between the petals (two-petal)");
    sub->add_option("--T", o.T, "time");
    sub->add_option("--A", o.A, "normalization constant, or 'auto' to estimate it");
    sub->add_option("--n", o.n, "number of boundary samples");
}

}  // namespace

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    double x = 0.0;
    if (parse_number(s, x)) return x;
    const auto at = s.find("pi");
    if (at == std::string::npos) throw UsageError("malformed angle '" + text + "'");
    std::string head = s.substr(0, at);
    std::string tail = s.substr(at + 2);
    if (!head.empty() && head.back() == '*') head.pop_back();
    double num = 1.0;
    if (head == "-")
        num = -1.0;
    else if (!head.empty() && !parse_number(head, num))
        throw UsageError("malformed angle '" + text + "'");
    double den = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/' || !parse_number(tail.substr(1), den) || den == 0.0)
            throw UsageError("malformed angle '" + text + "'");
    }
    return num * kPi / den;
}

std::vector<double> parse_grid(const std::string& text) {
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos) throw UsageError("malformed grid '" + text + "' (expected lo:hi:count)");
    const double lo = parse_angle(text.substr(0, a));
    const double hi = parse_angle(text.substr(a + 1, b - a - 1));
    double cnt = 0.0;
    if (!parse_number(text.substr(b + 1), cnt) || cnt != std::floor(cnt) || cnt < 0.0)
        throw UsageError("malformed grid count in '" + text + "'");
    const auto count = static_cast<std::size_t>(cnt);
    if (count == 0) throw UsageError("empty grid '" + text + "'");
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return g;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_trace_csv(std::ostream& out, const BoundaryTrace& trace) {
    out << "phi,x,y\n";
    for (const auto& s : trace.samples)
        out << format_double(s.phi) << ',' << format_double(s.z.real()) << ',' << format_double(s.z.imag())
            << '\n';
}

BoundaryTrace read_trace_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw UsageError("empty trace file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "phi,x,y") throw UsageError("trace file must start with the header phi,x,y");
    BoundaryTrace t;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        double v[3];
        const std::string_view sv(line);
        if (c2 == std::string::npos || !parse_number(sv.substr(0, c1), v[0]) ||
            !parse_number(sv.substr(c1 + 1, c2 - c1 - 1), v[1]) || !parse_number(sv.substr(c2 + 1), v[2]))
            throw UsageError("malformed trace row " + std::to_string(row));
        t.samples.push_back({v[0], cplx(v[1], v[2])});
    }
    if (t.samples.size() < 3) throw UsageError("trace file has fewer than 3 samples");
    t.counter_clockwise = polyline_area(t.points()) > 0.0;
    return t;
}

std::string trace_svg(const BoundaryTrace& trace) {
    const auto pts = trace.points();
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const cplx& p : pts) {
        x0 = std::min(x0, p.real());
        x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag());
        y1 = std::max(y1, p.imag());
    }
    const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-12});
    const double w = x1 - x0 + 2.0 * pad;
    const double h = y1 - y0 + 2.0 * pad;
    std::ostringstream s;
    s.precision(8);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\""
      << static_cast<int>(std::lround(600.0 * h / w)) << "\" viewBox=\"" << x0 - pad << ' ' << -(y1 + pad)
      << ' ' << w << ' ' << h << "\">\n";
    s << "<line x1=\"" << x0 - pad << "\" y1=\"0\" x2=\"" << x1 + pad
      << "\" y2=\"0\" stroke=\"#999\" stroke-width=\"" << 0.002 * w << "\"/>\n";
    s << "<polygon fill=\"#cde\" stroke=\"#124\" stroke-width=\"" << 0.003 * w << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
        s << (i ? " " : "") << pts[i].real() << ',' << -pts[i].imag();
    s << "\"/>\n</svg>\n";
    return s.str();
}

std::string report_json(const VerificationReport& report) {
    json doc = json::object();
    for (const auto& c : report.checks) {
        json e;
        e["residual"] = number_or_null(c.residual);
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        if (c.error) e["error"] = *c.error;
        doc[c.name] = e;
    }
    return doc.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Self-similar Laplacian growth patterns in the half plane", "lgrowth"};
    app.require_subcommand(1, 1);

    auto* trace = app.add_subcommand("trace", "write the boundary trace as CSV (and SVG)");
    add_family_options(trace, o);
    trace->add_option("--out", o.out, "CSV path ('-' for stdout)");
    trace->add_option("--svg", o.svg, "SVG path");

    auto* verify = app.add_subcommand("verify", "run every residual check and write a JSON report");
    add_family_options(verify, o);
    verify->add_option("--report", o.report, "JSON path ('-' for stdout)");
    verify->add_option("--tol-override", o.tol_overrides, "name=value, repeatable");

    auto* sw = app.add_subcommand("sweep", "two-petal conformality over an (alpha, beta) grid");
    sw->add_option("--alpha-grid", o.alpha_grid, "lo:hi:count");
    sw->add_option("--beta-grid", o.beta_grid, "lo:hi:count");
    sw->add_option("--out", o.out, "CSV path ('-' for stdout)");

    auto* mom = app.add_subcommand("moments", "M-function samples and harmonic moments");
    add_family_options(mom, o);
    mom->add_option("--trace", o.trace_in, "trace CSV instead of a family");
    mom->add_option("--kmax,--tk", o.kmax, "compute moments T_2..T_kmax");
    mom->add_option("--z", o.z_points, "interior point re,im (repeatable)");
    mom->add_option("--out", o.out, "JSON path ('-' for stdout)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (trace->parsed()) return cmd_trace(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (sw->parsed()) return cmd_sweep(o, out, err);
        return cmd_moments(o, out, err);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace lgrowth::cli
