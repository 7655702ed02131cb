#pragma once

// Deterministic CSV / JSON emission for trajectories, diagrams, scaling fits,
// and classification reports. Numbers use shortest round-trip formatting so
// repeated runs are byte-identical.

#include <string>

#include "pwsb/hlb.hpp"
#include "pwsb/integrator.hpp"
#include "pwsb/poincare.hpp"
#include "pwsb/scaling.hpp"

namespace pwsb {

std::string format_double(double v);

std::string trajectory_csv(const Trajectory& traj);
std::string diagram_csv(const std::vector<DiagramBranch>& rows);
std::string scaling_csv(const ScalingFit& fit);
std::string scaling_json(const ScalingFit& fit, const std::string& model);
std::string report_json(const HLBReport& report, const std::string& model,
                        const std::vector<std::string>& well_posedness = {});
std::string error_json(const std::string& command, const std::string& message);

void write_file(const std::string& path, const std::string& content);

}  // namespace pwsb
