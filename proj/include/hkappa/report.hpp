#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hkappa/capacity.hpp"
#include "hkappa/domain.hpp"
#include "hkappa/point_set.hpp"

namespace hkappa {

// Domain descriptors: {"kind": "Strip", "params": {"half_width": 1}}.
nlohmann::json domain_to_json(const ModelDomain& domain);
ModelDomain domain_from_json(const nlohmann::json& j);

/// Either a preset name (H, RHP, D, strip1, slit, keogh:a=<v>) or a JSON descriptor.
ModelDomain parse_domain(std::string_view text);

// Point sets: [[re, im], ...].
nlohmann::json points_to_json(const PointSet& E);
PointSet points_from_json(const nlohmann::json& j);
PointSet parse_points(std::string_view text);

/// Shortest decimal with at most `digits` significant digits that does not exceed v.
double round_down(double v, int digits = 15);

/// Fixed-format decimal with 15 significant digits ("%.15g").
std::string format_number(double v);

struct MCurveRow {
    double u;
    double xi;
    double two_u_over_log1p_2sinh2u;
    double two_u_over_log1p_M;
};

/// `steps` equally spaced u from `from` to `to` inclusive.
std::vector<MCurveRow> m_curve_rows(double from, double to, int steps);

/// CSV with header u,xi,red_branch,thick (thick = 2u/log(1+M(u))); LF line endings.
void write_m_curve_csv(std::ostream& out, const std::vector<MCurveRow>& rows);

nlohmann::json capacity_report_to_json(const CapacityReport& report);

}  // namespace hkappa
