#pragma once

// Built-in example systems in canonical coordinates (switching set at x = 0 /
// the coordinate axes), each parametrized so the bifurcation sits at mu = 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwsb/hlb.hpp"
#include "pwsb/model.hpp"

namespace pwsb {

struct ZooEntry {
    std::string name;
    std::string description;
    std::vector<std::string> params;      // accepted parameter names
    std::map<std::string, double> defaults;
    HLBKind published_kind = HLBKind::Unclassified;
    std::optional<double> published_alpha;
    std::optional<double> published_beta;
    std::optional<double> published_onset;  // bifurcation value in model parameters
    std::string coordinate_notes;
};

std::vector<std::string> zoo_list();
const ZooEntry& zoo_entry(const std::string& name);

// Build a system; unknown names/params raise ModelError. `params` may also
// carry "mechanism" choices for the relay models via zoo_build_mech.
PWSystem zoo_build(const std::string& name, const std::map<std::string, double>& params = {});

// Relay systems (relay_observer, forced_osc) ship in several mechanisms.
PWSystem zoo_build_mech(const std::string& name, const std::string& mechanism,
                        const std::map<std::string, double>& params = {});

}  // namespace pwsb
