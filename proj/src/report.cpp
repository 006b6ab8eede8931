#include "hkappa/report.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ostream>

#include "hkappa/errors.hpp"
#include "hkappa/extremal.hpp"

namespace hkappa {

using nlohmann::json;

json domain_to_json(const ModelDomain& domain)
{
    json params = json::object();
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, kinds::ExpandingDisk>)
                params["radius"] = k.radius;
            else if constexpr (std::is_same_v<K, kinds::Strip>)
                params["half_width"] = k.half_width;
            else if constexpr (std::is_same_v<K, kinds::KeoghLune>)
                params["a"] = k.a;
        },
        domain.kind());
    return json{{"kind", domain.name()}, {"params", params}};
}

namespace {

double number_param(const json& params, const char* key)
{
    if (!params.is_object() || !params.contains(key) || !params[key].is_number())
        throw InvalidArgument(std::string("domain descriptor: missing numeric parameter '") + key + "'");
    return params[key].get<double>();
}

json parse_json(std::string_view text, const char* what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string(what) + ": invalid JSON: " + e.what());
    }
}

}  // namespace

ModelDomain domain_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InvalidArgument("domain descriptor: expected an object with a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    const json params = j.value("params", json::object());
    if (kind == "UpperHalfPlane")
        return ModelDomain::upper_halfplane();
    if (kind == "RightHalfPlane")
        return ModelDomain::right_halfplane();
    if (kind == "UnitDisk")
        return ModelDomain::unit_disk();
    if (kind == "SlitPlane")
        return ModelDomain::slit_plane();
    if (kind == "ExpandingDisk")
        return ModelDomain::expanding_disk(number_param(params, "radius"));
    if (kind == "Strip")
        return ModelDomain::strip(number_param(params, "half_width"));
    if (kind == "KeoghLune")
        return ModelDomain::keogh_lune(number_param(params, "a"));
    throw InvalidArgument("domain descriptor: unknown kind '" + kind + "'");
}

ModelDomain parse_domain(std::string_view text)
{
    if (text == "H")
        return ModelDomain::upper_halfplane();
    if (text == "RHP")
        return ModelDomain::right_halfplane();
    if (text == "D")
        return ModelDomain::unit_disk();
    if (text == "strip1")
        return ModelDomain::strip(1.0);
    if (text == "slit")
        return ModelDomain::slit_plane();
    if (text.starts_with("keogh:a=")) {
        const std::string value(text.substr(8));
        char* end = nullptr;
        const double a = std::strtod(value.c_str(), &end);
        if (value.empty() || *end != '\0')
            throw InvalidArgument("domain preset: cannot parse keogh parameter '" + value + "'");
        return ModelDomain::keogh_lune(a);
    }
    if (!text.empty() && text.front() == '{')
        return domain_from_json(parse_json(text, "--domain"));
    throw InvalidArgument("unknown domain preset '" + std::string(text) + "'");
}

json points_to_json(const PointSet& E)
{
    json arr = json::array();
    for (const Complex& z : E)
        arr.push_back(json::array({z.real(), z.imag()}));
    return arr;
}

PointSet points_from_json(const json& j)
{
    if (!j.is_array())
        throw InvalidArgument("points: expected an array of [re, im] pairs");
    std::vector<Complex> pts;
    for (const json& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw InvalidArgument("points: each point must be a [re, im] pair of numbers");
        pts.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return PointSet(std::move(pts));
}

PointSet parse_points(std::string_view text)
{
    return points_from_json(parse_json(text, "--points"));
}

double round_down(double v, int digits)
{
    if (!std::isfinite(v) || v == 0.0)
        return v;
    if (digits < 1 || digits > 17)
        throw InvalidArgument("round_down: digits must lie in [1, 17]");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    if (std::strtod(buf, nullptr) <= v)
        return std::strtod(buf, nullptr);

    // Step the last shown digit toward -infinity.
    const bool negative = v < 0.0;
    std::int64_t mantissa = 0;
    int exponent = 0;
    for (const char* p = buf; *p && *p != 'e'; ++p)
        if (*p >= '0' && *p <= '9')
            mantissa = mantissa * 10 + (*p - '0');
    exponent = std::atoi(std::strchr(buf, 'e') + 1);
    std::int64_t low = 1;
    for (int k = 1; k < digits; ++k)
        low *= 10;
    if (negative) {
        ++mantissa;
        if (mantissa == low * 10) {
            mantissa = low;
            ++exponent;
        }
    } else {
        --mantissa;
        if (mantissa < low) {
            mantissa = low * 10 - 1;
            --exponent;
        }
    }
    std::snprintf(buf, sizeof buf, "%s%" PRId64 "e%d", negative ? "-" : "", mantissa,
                  exponent - (digits - 1));
    return std::strtod(buf, nullptr);
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::vector<MCurveRow> m_curve_rows(double from, double to, int steps)
{
    if (!(from > 0.0) || !(to > from) || !std::isfinite(to) || steps < 2)
        throw InvalidArgument("m_curve: need 0 < from < to and steps >= 2");
    std::vector<MCurveRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double u = k == steps - 1 ? to : from + (to - from) * k / (steps - 1);
        rows.push_back({u, xi(u), two_u_over_log1p_2sinh2u(u), two_u_over_log1p_M(u)});
    }
    return rows;
}

void write_m_curve_csv(std::ostream& out, const std::vector<MCurveRow>& rows)
{
    out << "u,xi,red_branch,thick\n";
    for (const MCurveRow& r : rows)
        out << format_number(r.u) << ',' << format_number(r.xi) << ','
            << format_number(r.two_u_over_log1p_2sinh2u) << ','
            << format_number(r.two_u_over_log1p_M) << '\n';
}

json capacity_report_to_json(const CapacityReport& report)
{
    json bounds = json::array();
    for (const CapacityBound& b : report.bounds)
        bounds.push_back(json{{"kind", bound_kind_name(b.kind)},
                              {"value", round_down(b.value)},
                              {"J", b.J_value}});
    json out{{"bounds", bounds}, {"ordering_ok", report.ordering_ok}};
    out["hyperbolic_diameter_bound"] = report.hyperbolic_diameter_bound
                                           ? json(round_down(*report.hyperbolic_diameter_bound))
                                           : json(nullptr);
    out["exact"] = report.exact ? json(*report.exact) : json(nullptr);
    return out;
}

}  // namespace hkappa
