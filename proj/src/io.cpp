#include "pwsb/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pwsb {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << "# schema: pwsb-trajectory-csv-v1\n";
    out << "t,x,y,segment_kind,event\n";
    std::size_t ev = 0;
    for (const auto& seg : traj.segments) {
        for (const auto& rec : seg.states) {
            std::string event;
            while (ev < traj.events.size() && traj.events[ev].time <= rec.t) {
                event = event_type_name(traj.events[ev].type);
                ++ev;
            }
            out << format_double(rec.t) << ',' << format_double(rec.state.x) << ','
                << format_double(rec.state.y) << ',' << segment_kind_name(seg.kind) << ','
                << event << '\n';
        }
    }
    return out.str();
}

std::string diagram_csv(const std::vector<DiagramBranch>& rows) {
    std::ostringstream out;
    out << "# schema: pwsb-diagram-csv-v1\n";
    out << "mu,branch,value,stability,ok,note\n";
    for (const auto& b : rows) {
        out << format_double(b.mu) << ',' << b.branch << ',' << format_double(b.value) << ','
            << (b.stable ? "stable" : "unstable") << ',' << (b.ok ? "1" : "0") << ',' << b.note
            << '\n';
    }
    return out.str();
}

std::string scaling_csv(const ScalingFit& fit) {
    std::ostringstream out;
    out << "# schema: pwsb-scaling-csv-v1\n";
    out << "mu,amp_x,amp_y,amplitude,x_max,period,ok\n";
    for (const auto& p : fit.points) {
        out << format_double(p.mu) << ',' << format_double(p.amp_x) << ','
            << format_double(p.amp_y) << ',' << format_double(p.amplitude) << ','
            << format_double(p.x_max) << ',' << format_double(p.period) << ','
            << (p.ok ? "1" : "0") << '\n';
    }
    return out.str();
}

std::string scaling_json(const ScalingFit& fit, const std::string& model) {
    json j;
    j["schema"] = "pwsb-scaling-v1";
    j["model"] = model;
    j["exponent_amplitude"] = fit.exponent_amplitude;
    j["exponent_period"] = fit.exponent_period;
    j["exponent_amp_x"] = fit.exponent_amp_x;
    j["exponent_amp_y"] = fit.exponent_amp_y;
    j["exponent_x_max"] = fit.exponent_x_max;
    if (fit.exponent_period_correction)
        j["exponent_period_correction"] = *fit.exponent_period_correction;
    j["k1"] = fit.k1;
    j["k2"] = fit.k2;
    j["r_squared_amplitude"] = fit.r_squared_amplitude;
    j["r_squared_period"] = fit.r_squared_period;
    j["points_used"] = static_cast<int>(fit.points.size()) - fit.dropped;
    j["points_dropped"] = fit.dropped;
    j["enough_points"] = fit.enough_points;
    return j.dump(2) + "\n";
}

std::string report_json(const HLBReport& rep, const std::string& model,
                        const std::vector<std::string>& well_posedness) {
    json j;
    j["schema"] = "pwsb-report-v1";
    j["model"] = model;
    j["kind"] = hlb_kind_name(rep.kind);
    if (rep.alpha) j["alpha"] = *rep.alpha;
    if (rep.beta) j["beta"] = *rep.beta;
    if (rep.gamma) j["gamma"] = *rep.gamma;
    j["criticality"] = criticality_name(rep.criticality);
    j["cycle_side"] = rep.cycle_side;
    j["cycle_stable"] = rep.cycle_stable;
    j["amplitude_exponent"] = rep.exponents.amplitude.str();
    j["period_exponent"] = rep.exponents.period.str();
    j["mu0"] = rep.mu0;
    switch (rep.period_form) {
        case PeriodForm::Limit:
            j["predicted_period"] = rep.predicted_period;
            j["predicted_period_form"] = "limit";
            break;
        case PeriodForm::PowerLawCoefficient:
            j["predicted_period"] = rep.predicted_period;
            j["predicted_period_form"] = "coefficient_of_mu_pow_b";
            break;
        case PeriodForm::Unavailable:
            j["predicted_period_form"] = "unavailable";
            break;
    }
    json eig;
    eig["left"] = {{"lambda", rep.eig_left.lambda},
                   {"omega", rep.eig_left.omega},
                   {"eta", rep.eig_left.eta},
                   {"complex", rep.eig_left.complex_pair}};
    eig["right"] = {{"lambda", rep.eig_right.lambda},
                    {"omega", rep.eig_right.omega},
                    {"eta", rep.eig_right.eta},
                    {"complex", rep.eig_right.complex_pair}};
    j["eigenvalues"] = eig;
    json list = json::array();
    for (const auto& item : rep.checklist) {
        list.push_back({{"condition", item.condition},
                        {"satisfied", item.satisfied},
                        {"witness", item.witness}});
    }
    j["checklist"] = list;
    if (!well_posedness.empty()) j["well_posedness_issues"] = well_posedness;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j.dump(2) + "\n";
}

std::string error_json(const std::string& command, const std::string& message) {
    json j;
    j["schema"] = "pwsb-error-v1";
    j["command"] = command;
    j["error"] = message;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

}  // namespace pwsb
