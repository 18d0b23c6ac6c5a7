#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lepra/controls.hpp"
#include "lepra/model.hpp"
#include "lepra/params.hpp"
#include "lepra/trajectory.hpp"

namespace lepra {

/// One dosing window of a scenario, before discretization.
struct DoseSpec {
    DrugId drug = DrugId::rifampin;
    int window_id = 1;       // 1 undelayed, 2 delayed by tau
    double initial = 0.0;    // constant initial dose rate [mg/day]
    double d_max = 60.0;     // admissible upper bound [mg/day]
};

/// A named, reproducible experiment: drug subset, horizon, dosing
/// windows, parameter preset plus overrides, and initial state.
struct ScenarioConfig {
    std::string name;
    std::vector<DrugId> drugs;
    DoseMode mode = DoseMode::single_window;
    ParamsPreset params_preset = ParamsPreset::simulation;
    std::vector<std::pair<std::string, double>> param_overrides;
    StateVec x0;
    Grid grid;
    std::vector<DoseSpec> doses;
    CostWeights weights;

    void validate() const;
};

/// Registered preset names: {no-drug,rif,dap,clo,rif+dap,dap+clo,rif+clo,mdt}
/// x {-30, -60-delay}.
const std::vector<std::string>& preset_names();

/// Throws std::invalid_argument for unknown names.
ScenarioConfig build_scenario(const std::string& name);

/// Preset with overrides applied (inactive drugs' toxicity/kill
/// coefficients are zeroed by the preset overrides themselves).
Params resolve_params(const ScenarioConfig& cfg);

/// Constant-initial-dose schedule over the scenario grid.
ControlSchedule make_schedule(const ScenarioConfig& cfg);

struct CompartmentStat {
    double mean = 0.0;   // trapezoid-weighted time average over [0, T]
    double final = 0.0;  // value at t = T
};

struct CompartmentSummary {
    std::array<CompartmentStat, kCompartments> stats;
    const CompartmentStat& operator[](std::size_t i) const { return stats[i]; }
};

CompartmentSummary summarize(const Trajectory& traj);

/// Scenario file I/O: sections [scenario], [params], [weights], [doses]
/// in the same key-value format as the Params config.
std::string scenario_to_config(const ScenarioConfig& cfg);
ScenarioConfig scenario_from_config(std::istream& in);
ScenarioConfig scenario_from_config_string(const std::string& text);
ScenarioConfig load_scenario(const std::string& name_or_path);

/// Paper-reported 30-day no-drug baseline averages (S, I, B, Ig, Ta, I10,
/// I12, I15, I17), used by the non-gating baseline deviation report.
struct BaselineReference {
    std::array<double, 9> averages;
    static const BaselineReference& table10_without_drugs();
};

struct BaselineDeviationRow {
    std::string compartment;
    double reference = 0.0;
    double simulated = 0.0;
    double relative_deviation = 0.0;
};

struct BaselineDeviationReport {
    ParamsPreset preset;
    double step = 0.0;
    std::vector<BaselineDeviationRow> rows;
};

/// No-drug 30-day summary vs the reported baseline, under one preset.
/// The table preset is stiff at the reference initial data and is
/// integrated with the given step.
BaselineDeviationReport baseline_deviation(ParamsPreset preset, double step);

}  // namespace lepra
