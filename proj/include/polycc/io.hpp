#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycc/body_system.hpp"
#include "polycc/collapse.hpp"
#include "polycc/conditions.hpp"
#include "polycc/kernels.hpp"
#include "polycc/newtonian.hpp"
#include "polycc/solver.hpp"

namespace polycc::io {

inline constexpr const char* tool_version = "1.0.0";

// BodySystem document: { "bodies": [ { "mass": m, "position": [x,y,z] }, ... ],
// "meta": { parameter echo, present when the system came from parameters } }
std::string body_system_json(const body_system& sys,
                             const std::optional<twisted_polygon_params>& meta);
body_system parse_body_system(const std::string& text,
                              std::optional<twisted_polygon_params>* meta_out);

std::string cc_report_json(const cc_report& report);
std::string kernels_json(int n, double a, double h, const twist& theta, double x, yz_values yz);
std::string solve_result_json(const solve_result& result);
std::string conditions_json(const condition_residual& report);
std::string suite_report_json(const suite_report& report);
std::string check_report_json(const cc_report& report,
                              const std::optional<condition_residual>& conditions);

// CSV bodies, 17 significant digits per value
std::string scan_csv(const std::vector<scan_cell>& cells);
std::string trajectory_csv(const trajectory_report& report);

// { "command", "params", "seed", "tool_version", "outputs" }
std::string manifest_json(const std::string& command, const std::string& params_json,
                          std::optional<long long> seed, const std::vector<std::string>& outputs);

std::string read_file(const std::string& path);

// Writes to <path>.tmp in the same directory, then renames over <path>, so a
// failure never leaves a partial file at the destination.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace polycc::io
