// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hkappa/capacity.hpp"
#include "hkappa/cli.hpp"
#include "hkappa/domain.hpp"
#include "hkappa/elliptic.hpp"
#include "hkappa/extremal.hpp"
#include "hkappa/hyperbolic.hpp"
#include "hkappa/maps.hpp"
#include "hkappa/set_functionals.hpp"
#include "sampling.hpp"

using namespace hkappa;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome ac1()
{
    const auto t0 = Clock::now();
    const double u0 = u0_solve();
    const double dt = seconds_since(t0);
    const double residual = std::abs(4 * std::pow(std::cosh(u0), 4) - std::cosh(4 * u0));
    return {std::abs(u0 - 0.831443) <= 1e-5 && residual < 1e-10 && dt < 1e-3,
            fmt("u0=%.9f residual=%.1e time=%.2es", u0, residual, dt)};
}

Outcome ac2()
{
    const auto t0 = Clock::now();
    const KappaSolution s = solve_kappa_H(1e-13);
    const double dt = seconds_since(t0);
    const bool ok = std::abs(s.u_star - 0.432335123777) <= 1e-9 &&
                    std::abs(s.kappa - 0.8750987500145) <= 1e-9 &&
                    std::abs(s.t_star - 0.727535978839) <= 1e-8 &&
                    std::abs(s.theta_star - 0.419463976058) <= 1e-8 && dt < 0.1;
    return {ok, fmt("u*=%.12f kappa=%.13f t*=%.12f theta*=%.12f time=%.2es", s.u_star, s.kappa,
                    s.t_star, s.theta_star, dt)};
}

Outcome ac3()
{
    const Complex w0{1.0, 0.0}, w1{2.121820474, 1.198476681}, w2 = std::conj(w1);
    const double r = ratio(ModelDomain::slit_plane(), PointSet{w0, w1, w2});
    const double h01 = h_dist_slitplane(w0, w1), h02 = h_dist_slitplane(w0, w2),
                 h12 = h_dist_slitplane(w1, w2);
    const bool ok = std::abs(r - 0.4251604) <= 1e-6 && std::abs(h01 - h02) < 1e-8 &&
                    std::abs(h01 - h12) < 1e-3;
    return {ok, fmt("ratio=%.10f |h01-h02|=%.1e |h01-h12|=%.1e", r, std::abs(h01 - h02), std::abs(h01 - h12))};
}

Outcome ac4()
{
    const auto t0 = Clock::now();
    const ModelDomain strip = ModelDomain::strip(1.0);
    const Segment E{1.0, 2.0};
    const double k1 = cap_lower_bound(strip, E, BoundKind::Kappa1).value;
    const double sym = cap_lower_bound(strip, E, BoundKind::HalfPlaneSymmetrization).value;
    const double teich = cap_lower_bound(strip, E, BoundKind::Teichmuller).value;
    const double exact = cap_lower_bound(strip, E, BoundKind::Exact).value;
    const double dt = seconds_since(t0);
    const bool ok = k1 > 2.4288 && std::abs(sym - 2.55852) <= 1e-4 && std::abs(teich - 2.0) <= 1e-10 &&
                    std::abs(exact - 3.75108) <= 1e-4 && teich < k1 && k1 < sym && sym < exact &&
                    dt < 1e-2;
    return {ok, fmt("tau2(1)=%.12f kappa1=%.8f Phi(log2)=%.8f exact=%.8f time=%.2es", teich, k1, sym, exact, dt)};
}

Outcome ac5()
{
    const double v = phi(50.0);
    const double limit = 2 * std::log(std::sqrt(2.0) + 1);
    return {std::abs(v - limit) <= 1e-6 && std::abs(limit - 1.7627) < 1e-4,
            fmt("phi(50)=%.12f limit=%.12f", v, limit)};
}

Outcome ac6()
{
    constexpr int kCases = 10000;
    constexpr double kKappaH = 0.8750987500145;
    const ModelDomain H = ModelDomain::upper_halfplane();
    const auto t0 = Clock::now();
    testing::Sampler s(20240611);
    std::vector<std::string> failed;
    const auto require = [&](bool ok, const char* name) {
        if (!ok && std::find(failed.begin(), failed.end(), name) == failed.end())
            failed.push_back(name);
    };
    for (int k = 0; k < kCases; ++k) {
        const Complex a = s.halfplane(), b = s.halfplane(), c = s.halfplane();
        for (int metric = 0; metric < 2; ++metric) {
            const auto d = [&](Complex z, Complex w) {
                return metric == 0 ? h_dist_halfplane(z, w) : j_dist(H, z, w);
            };
            const char* name = metric == 0 ? "h metric axioms" : "j metric axioms";
            require(d(a, b) >= 0.0 && d(a, a) == 0.0 && d(a, b) == d(b, a), name);
            require(a == b || d(a, b) > 0.0, name);
            require(d(a, c) <= (d(a, b) + d(b, c)) * (1 + 1e-12), name);
        }
    }
    for (int k = 0; k < kCases; ++k) {
        const Complex z = s.halfplane(), w = s.halfplane();
        require(j_dist(H, z, w) <= h_dist_halfplane(z, w) * (1 + 1e-12), "j <= h");
    }
    for (int k = 0; k < kCases; ++k)
        require(ratio(H, PointSet{s.halfplane(), s.halfplane()}) >= 1.0 - 1e-12, "two-point ratio");
    for (int k = 0; k < kCases; ++k)
        require(ratio(H, PointSet{s.halfplane(), s.halfplane(), s.halfplane()}) >= kKappaH - 1e-9,
                "three-point ratio");
    for (int k = 0; k < kCases; ++k) {
        std::vector<Complex> pts(3 + k % 4);
        for (auto& p : pts)
            p = s.halfplane();
        const PointSet E(pts);
        const double J = J_functional(H, E), jd = j_diam(H, E);
        require(J / 2 <= jd * (1 + 1e-12) && jd <= J * (1 + 1e-12), "J/2 <= j_diam <= J");
    }
    for (int k = 0; k < kCases; ++k) {
        const PointSet E{s.halfplane(), s.halfplane()};
        const PointSet F = E.with(s.halfplane());
        require(h_diam(H, E) <= h_diam(H, F) && J_functional(H, E) <= J_functional(H, F),
                "superset monotonicity");
    }
    const double dt = seconds_since(t0);
    std::string detail = fmt("6 properties x %d cases time=%.2fs", kCases, dt);
    for (const auto& f : failed)
        detail += "; violated: " + f;
    return {failed.empty() && dt < 30.0, detail};
}

Outcome ac7()
{
    const double u0 = u0_solve();
    bool ok = true;
    std::string detail;
    for (double u : {0.3, 0.6, u0, 1.0}) {
        const BruteForceM bf = brute_force_M(u, 100000);
        const double err = std::abs(bf.value - M_of_u(u));
        ok = ok && err <= 1e-3;
        detail += fmt("u=%.4f |bf-M|=%.1e", u, err);
        if (u < u0) {
            // Circle angles of the two apexes of E*(u).
            const auto E = extremal_triple(u).points;
            const auto D = hyperbolic_disk(kI, 2 * u);
            const double e1 = std::arg((E[1] - D.euclid_center) / (kI * D.euclid_radius));
            const double e2 = std::arg((E[2] - D.euclid_center) / (kI * D.euclid_radius));
            const double da = std::max(std::abs(std::min(bf.angle1, bf.angle2) - std::min(e1, e2)),
                                       std::abs(std::max(bf.angle1, bf.angle2) - std::max(e1, e2)));
            ok = ok && da <= 1e-2;
            detail += fmt(" angle_err=%.1e", da);
        }
        detail += "; ";
    }
    return {ok, detail};
}

Outcome ac8()
{
    const double h = 1e-5;
    const double slope0 = (xi(2 * h) - xi(h)) / h;
    const double u0 = u0_solve();
    const double d = 1e-4;
    const double slope_u0 = (xi(u0 - 2 * d) - 8 * xi(u0 - d) + 8 * xi(u0 + d) - xi(u0 + 2 * d)) / (12 * d);
    // The bound below 1 holds for 2u/log(1+M(u)); it coincides with xi up to u0.
    // xi alone exceeds 1 once u passes about 1.189, which is reported, not asserted.
    double worst = 0.0, worst_xi = 0.0;
    for (int k = 1; k <= 1000; ++k) {
        const double u = 5.0 * k / 1000;
        worst = std::max(worst, two_u_over_log1p_M(u));
        if (u < u0)
            worst_xi = std::max(worst_xi, xi(u));
    }
    const bool ok = std::abs(slope0 - (1 - std::sqrt(3.0))) <= 1e-3 && std::abs(slope_u0 - 0.1917) <= 1e-3 &&
                    worst < 1.0 && worst_xi < 1.0;
    return {ok, fmt("xi'(0+)~%.6f xi'(u0)~%.6f max 2u/log(1+M) on (0,5]=%.9f max xi on (0,u0)=%.9f xi(5)=%.4f",
                    slope0, slope_u0, worst, worst_xi, xi(5.0))};
}

Outcome ac9()
{
    const PointSet E = solve_kappa_H().triple.points;
    bool ok = true;
    std::string detail;
    for (double a : {0.25, 0.5, 0.75}) {
        const TaylorCoefficients tc = keogh_taylor_coefficients(a);
        const double e1 = std::abs(tc.a1 - Complex{0.0, (1 - a * a) / 4});
        const double e2 = std::abs(tc.a2 - Complex{a * (1 - a * a) / 16, 0.0});
        // Second-order one-sided difference of F at 0.
        const double h = 1e-4;
        const double fd = (-3 * keogh_F0(E) + 4 * keogh_F(a, h, E) - keogh_F(a, 2 * h, E)) / (2 * h);
        const double formula = keogh_F_slope(a, E);
        const double rel = std::abs(fd - formula) / std::abs(formula);
        ok = ok && e1 <= 1e-6 && e2 <= 1e-6 && rel <= 1e-2 && fd > 0.0 && formula > 0.0;
        detail += fmt("a=%.2f |da1|=%.1e |da2|=%.1e F'(0)~%.6f formula=%.6f; ", a, e1, e2, fd, formula);
    }
    return {ok, detail};
}

Outcome ac10()
{
    std::ostringstream out, err;
    const int status = cli::run({"m-curve", "--from", "0.01", "--to", "1.2", "--steps", "500"}, out, err);
    if (status != 0)
        return {false, "m-curve exited with status " + std::to_string(status)};
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    std::vector<double> u;
    std::vector<bool> on_xi;
    double best = INFINITY;
    while (std::getline(in, line)) {
        std::vector<std::string> cols;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');)
            cols.push_back(c);
        if (cols.size() != 4)
            return {false, "malformed row: " + line};
        u.push_back(std::stod(cols[0]));
        on_xi.push_back(cols[3] == cols[1] && cols[3] != cols[2]);
        best = std::min(best, std::stod(cols[3]));
    }
    const double kappa = solve_kappa_H().kappa;
    const double u0 = u0_solve();
    // The thick column follows xi up to the switch index and the red branch after it.
    std::size_t sw = 0;
    while (sw < on_xi.size() && on_xi[sw])
        ++sw;
    bool single_switch = sw > 0 && sw < u.size();
    for (std::size_t k = sw; k < on_xi.size(); ++k)
        single_switch = single_switch && !on_xi[k];
    std::size_t nearest = 0;
    for (std::size_t k = 1; k < u.size(); ++k)
        if (std::abs(u[k] - u0) < std::abs(u[nearest] - u0))
            nearest = k;
    const bool at_nearest = single_switch && u[sw - 1] < u0 && u[sw] >= u0 && (nearest == sw || nearest == sw - 1);
    const bool ok = std::abs(best - kappa) <= 1e-4 && at_nearest && u.size() == 500;
    return {ok, fmt("rows=%zu min thick=%.10f |min-kappa|=%.1e switch between u=%.6f and u=%.6f (u0=%.6f)",
                    u.size(), best, std::abs(best - kappa), sw > 0 ? u[sw - 1] : 0.0,
                    sw < u.size() ? u[sw] : 0.0, u0)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"AC1  u0 root", ac1},
        {"AC2  kappa(H) solution", ac2},
        {"AC3  slit-plane witness", ac3},
        {"AC4  strip capacity pipeline", ac4},
        {"AC5  phi limit", ac5},
        {"AC6  property suite", ac6},
        {"AC7  brute-force M", ac7},
        {"AC8  xi boundary behaviour", ac8},
        {"AC9  Keogh first-order check", ac9},
        {"AC10 m-curve CSV", ac10},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
