#include "hkappa/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "hkappa/capacity.hpp"
#include "hkappa/domain.hpp"
#include "hkappa/errors.hpp"
#include "hkappa/extremal.hpp"
#include "hkappa/maps.hpp"
#include "hkappa/quasihyperbolic.hpp"
#include "hkappa/report.hpp"
#include "hkappa/set_functionals.hpp"

namespace hkappa::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string domain;
    std::string points;
    std::string segment;
    std::string window;
    std::string format = "json";
    double tolerance = 1e-12;
    std::size_t samples = 0;
    double grid_step = 0.0;
    double from = 0.01;
    double to = 1.2;
    int steps = 500;
    double x = 1e-3;
};

void emit_json(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw InvalidArgument("format '" + o.format + "' is not supported by this subcommand");
}

void validate_tolerance(double tolerance)
{
    if (!(tolerance >= 1e-13 && tolerance <= 1e-3))
        throw InvalidArgument("--tolerance must lie in [1e-13, 1e-3]");
}

std::string cmd_dist(const Options& o)
{
    require_format(o, {"json"});
    const ModelDomain domain = parse_domain(o.domain.empty() ? "H" : o.domain);
    const PointSet E = parse_points(o.points);
    if (E.size() != 2)
        throw InvalidArgument("dist: --points must hold exactly two points");
    json out{{"domain", domain_to_json(domain)},
             {"points", points_to_json(E)},
             {"h", h_dist_pullback(domain, E[0], E[1])},
             {"j", j_dist(domain, E[0], E[1])},
             {"rho", json::array({rho_density(domain, E[0]), rho_density(domain, E[1])})},
             {"boundary_distance",
              json::array({boundary_distance(domain, E[0]), boundary_distance(domain, E[1])})}};
    if (o.grid_step > 0.0) {
        Window window{Complex{std::min(E[0].real(), E[1].real()) - 1.0,
                              std::min(E[0].imag(), E[1].imag()) - 1.0},
                      Complex{std::max(E[0].real(), E[1].real()) + 1.0,
                              std::max(E[0].imag(), E[1].imag()) + 1.0}};
        if (!o.window.empty()) {
            const PointSet corners = parse_points(o.window);
            if (corners.size() != 2)
                throw InvalidArgument("--window must hold two corner points");
            window = Window{corners[0], corners[1]};
        }
        out["k_grid"] = quasihyperbolic_oracle(domain, E[0], E[1], window, o.grid_step);
        out["grid_step"] = o.grid_step;
    }
    std::ostringstream s;
    emit_json(s, out);
    return s.str();
}

std::string cmd_functional(const Options& o)
{
    require_format(o, {"json"});
    const ModelDomain domain = parse_domain(o.domain.empty() ? "H" : o.domain);
    const PointSet E = parse_points(o.points);
    const json out{{"domain", domain_to_json(domain)},
                   {"points", points_to_json(E)},
                   {"diam", diam(E)},
                   {"boundary_distance", set_boundary_distance(domain, E)},
                   {"h_diam", h_diam(domain, E)},
                   {"J", J_functional(domain, E)},
                   {"j_diam", j_diam(domain, E)},
                   {"ratio", ratio(domain, E)}};
    std::ostringstream s;
    emit_json(s, out);
    return s.str();
}

std::string cmd_kappa_h(const Options& o)
{
    require_format(o, {"json"});
    validate_tolerance(o.tolerance);
    const KappaSolution sol = solve_kappa_H(o.tolerance);
    json out{{"u_star", sol.u_star},
             {"kappa", sol.kappa},
             {"t_star", sol.t_star},
             {"theta_star", sol.theta_star},
             {"u0", u0_solve()},
             {"triple", points_to_json(sol.triple.points)},
             {"iterations", sol.iterations}};
    if (o.samples > 0) {
        const BruteForceM bf = brute_force_M(sol.u_star, o.samples);
        out["brute_force"] = json{{"samples", o.samples},
                                  {"M", bf.value},
                                  {"chi", chi(sol.u_star)},
                                  {"pair", points_to_json(PointSet{bf.z1, bf.z2})}};
    }
    std::ostringstream s;
    emit_json(s, out);
    return s.str();
}

std::string cmd_m_curve(const Options& o)
{
    require_format(o, {"csv", "json"});
    const std::vector<MCurveRow> rows = m_curve_rows(o.from, o.to, o.steps);
    std::ostringstream s;
    if (o.format == "csv") {
        write_m_curve_csv(s, rows);
    } else {
        json arr = json::array();
        for (const MCurveRow& r : rows)
            arr.push_back({{"u", r.u},
                           {"xi", r.xi},
                           {"red_branch", r.two_u_over_log1p_2sinh2u},
                           {"thick", r.two_u_over_log1p_M}});
        emit_json(s, arr);
    }
    return s.str();
}

std::string cmd_capacity(const Options& o)
{
    require_format(o, {"json"});
    const ModelDomain domain = parse_domain(o.domain.empty() ? "strip1" : o.domain);
    SetDescriptor set = Segment{Complex{1.0, 0.0}, Complex{2.0, 0.0}};
    if (!o.segment.empty()) {
        const PointSet ends = parse_points(o.segment);
        if (ends.size() != 2)
            throw InvalidArgument("--segment must hold exactly two endpoints");
        set = Segment{ends[0], ends[1]};
    } else if (!o.points.empty()) {
        set = parse_points(o.points);
    }
    json out = capacity_report_to_json(capacity_report(domain, set));
    out["domain"] = domain_to_json(domain);
    if (const auto* seg = std::get_if<Segment>(&set))
        out["segment"] = points_to_json(PointSet{seg->a, seg->b});
    else
        out["points"] = points_to_json(std::get<PointSet>(set));
    std::ostringstream s;
    emit_json(s, out);
    return s.str();
}

std::string cmd_slit_bound(const Options& o)
{
    require_format(o, {"json"});
    const ModelDomain slit = ModelDomain::slit_plane();
    const PointSet E = o.points.empty()
                           ? PointSet{Complex{1.0, 0.0}, Complex{2.121820474, 1.198476681},
                                      Complex{2.121820474, -1.198476681}}
                           : parse_points(o.points);
    json sides = json::array();
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            sides.push_back(h_dist_slitplane(E[i], E[j]));
    const json out{{"domain", domain_to_json(slit)},
                   {"points", points_to_json(E)},
                   {"h_diam", h_diam(slit, E)},
                   {"J", J_functional(slit, E)},
                   {"ratio", ratio(slit, E)},
                   {"sides", sides}};
    std::ostringstream s;
    emit_json(s, out);
    return s.str();
}

std::string cmd_keogh_demo(const Options& o)
{
    require_format(o, {"json"});
    const ModelDomain domain = parse_domain(o.domain.empty() ? "keogh:a=0.5" : o.domain);
    const auto* lune = std::get_if<kinds::KeoghLune>(&domain.kind());
    if (!lune)
        throw InvalidArgument("keogh-demo: --domain must be a KeoghLune");
    const double a = lune->a;
    const TaylorCoefficients tc = keogh_taylor_coefficients(a);
    const KappaSolution sol = solve_kappa_H(1e-13);
    const PointSet& E = sol.triple.points;
    const double h = 1e-4;
    const double fd_slope = (std::abs(keogh_W(a, h, E)) - std::abs(keogh_W(a, -h, E))) / (2.0 * h);
    const auto cjson = [](Complex z) { return json::array({z.real(), z.imag()}); };
    const json out{{"a", a},
                   {"a1", cjson(tc.a1)},
                   {"a1_expected", cjson(Complex{0.0, 0.25 * (1.0 - a * a)})},
                   {"a2", cjson(tc.a2)},
                   {"a2_expected", cjson(Complex{a * (1.0 - a * a) / 16.0, 0.0})},
                   {"F0", keogh_F0(E)},
                   {"x", o.x},
                   {"F_x", keogh_F(a, o.x, E)},
                   {"F_slope_finite_difference", fd_slope},
                   {"F_slope_first_order", keogh_F_slope(a, E)},
                   {"kappa_H", sol.kappa},
                   {"ratio_bound_at_x", 2.0 * sol.u_star / std::log1p(keogh_F(a, o.x, E))}};
    std::ostringstream s;
    emit_json(s, out);
    return s.str();
}

void print_error(std::ostream& err, const char* kind, const std::string& message, int status)
{
    err << json{{"error", {{"kind", kind}, {"message", message}, {"status", status}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Hyperbolic domain constants, extremal configurations and capacity bounds", "hkappa"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--domain", o.domain, "Domain preset (H, RHP, D, strip1, slit, keogh:a=<v>) or JSON descriptor");
        sub->add_option("--points", o.points, "JSON array of [re, im] pairs");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tolerance", o.tolerance, "Solver tolerance in [1e-13, 1e-3]");
        sub->add_option("--samples", o.samples, "Sample count for brute-force oracles");
    };

    CLI::App* dist = app.add_subcommand("dist", "Hyperbolic, distance-ratio and grid quasihyperbolic distances");
    add_common(dist);
    dist->add_option("--grid-step", o.grid_step, "Grid spacing for the quasihyperbolic oracle");
    dist->add_option("--window", o.window, "Grid window as two corner points");
    CLI::App* functional = app.add_subcommand("functional", "Set functionals d, h, J, j and h/J");
    add_common(functional);
    CLI::App* kappa = app.add_subcommand("kappa-h", "Extremal configuration and kappa of the half-plane");
    add_common(kappa);
    CLI::App* curve = app.add_subcommand("m-curve", "Curves 2u/log(1+M(u)), xi(u), 2u/log(1+2sinh 2u)");
    add_common(curve);
    o.format = "json";
    curve->add_option("--from", o.from);
    curve->add_option("--to", o.to);
    curve->add_option("--steps", o.steps);
    CLI::App* capacity = app.add_subcommand("capacity", "Condenser capacity bounds");
    add_common(capacity);
    capacity->add_option("--segment", o.segment, "Segment endpoints as a JSON array of two points");
    CLI::App* slit = app.add_subcommand("slit-bound", "Slit-plane witness for the simply connected constant");
    add_common(slit);
    CLI::App* keogh = app.add_subcommand("keogh-demo", "First-order check of the non-convex drop");
    add_common(keogh);
    keogh->add_option("--x", o.x, "Scale x of the configuration x E*");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        print_error(err, "schema", e.what(), kSchema);
        return kSchema;
    }

    if (curve->parsed() && curve->count("--format") == 0)
        o.format = "csv";

    try {
        std::string report;
        if (dist->parsed())
            report = cmd_dist(o);
        else if (functional->parsed())
            report = cmd_functional(o);
        else if (kappa->parsed())
            report = cmd_kappa_h(o);
        else if (curve->parsed())
            report = cmd_m_curve(o);
        else if (capacity->parsed())
            report = cmd_capacity(o);
        else if (slit->parsed())
            report = cmd_slit_bound(o);
        else if (keogh->parsed())
            report = cmd_keogh_demo(o);
        out << report;
        return kOk;
    } catch (const ConvergenceError& e) {
        print_error(err, "convergence", e.what(), kConvergence);
        return kConvergence;
    } catch (const DomainError& e) {
        print_error(err, "domain", e.what(), kDomain);
        return kDomain;
    } catch (const InvalidArgument& e) {
        print_error(err, "schema", e.what(), kSchema);
        return kSchema;
    }
}

}  // namespace hkappa::cli
