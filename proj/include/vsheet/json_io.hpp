#pragma once

#include <string>

#include <json.hpp>

#include "vsheet/dynamics.hpp"
#include "vsheet/observables.hpp"
#include "vsheet/prequant.hpp"
#include "vsheet/sheet.hpp"
#include "vsheet/stationarity.hpp"

namespace vsheet {

/// Builds a sheet from a preset document:
///   {"preset":"torus","R":..,"r":..,"ell":..,"fibration":"parallel"|"meridian","grid":{"n":..}}
///   {"preset":"fourier","fibration":..,"grid":{..},"fourier":{"xi":{..},"eta":{..},"zeta":{..}}}
/// Unknown keys are rejected with the offending key named.
RevolutionSheet sheet_from_json(const nlohmann::json& doc);

RevolutionSheet sheet_from_json_file(const std::string& path);

nlohmann::json to_json(const ObservableSet& obs);
nlohmann::json to_json(const StationarityReport& report);
nlohmann::json to_json(const PeriodClass& cls);
nlohmann::json to_json(const PrequantReport& report);

/// Formats a double with 17 significant digits (round-trip safe).
std::string format_double(double x);

/// Serializes a trajectory's recorded observables as CSV with header
/// t,a,h,k,drift_a,drift_h,drift_k — drifts are relative to the initial record.
std::string trajectory_csv(const Trajectory& traj);

/// Serializes the recorded final state as CSV with header rho,xi,eta,zeta.
std::string snapshot_csv(const RevolutionSheet& sheet);

}  // namespace vsheet
