#pragma once

// File formats: trajectory/report JSON, CSV tables, and SVG rendering of
// a path against the unit disk.

#include <string>
#include <vector>

#include "diskinspect/geometry.hpp"
#include "diskinspect/optimizer.hpp"
#include "diskinspect/oracle.hpp"
#include "diskinspect/trajectory.hpp"

namespace diskinspect {

// {"c":..., "k":..., "theta":..., "t":[...]}; numbers round-trip exactly.
std::string spec_to_json(const TrajectorySpec& spec);
TrajectorySpec spec_from_json(const std::string& json_text);

// {"vertices": [[x, y], ...]}
std::string polyline_to_json(const Polyline& path);
bool json_is_polyline(const std::string& json_text);
Polyline polyline_from_json(const std::string& json_text);

std::string report_to_json(const SolveReport& report);

// CSV emitters; every table starts with a header row.
std::string polyline_csv(const Polyline& path);                       // x,y,cumlen
std::string profile_csv(const InspectionProfile& prof);               // phi,time
std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& grid_name);

// Unit circle, the inspected arc [0, c] highlighted, and the path.
std::string polyline_svg(const Polyline& path, double c);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace diskinspect
