#pragma once

#include <filesystem>

#include <json.hpp>

#include "polaron/circuit/circuit.hpp"

namespace polaron::circuit {

// {"qubits":[{"delta_ghz":5,"bias_ghz":0}],
//  "couplings":[{"i":1,"j":2,"g_ghz":..}],
//  "oscillators":[{"qubit":1,"omega_ghz":..,"eta_ghz":..,"chain":1,"position":1}],
//  "links":[{"a":1,"b":2,"coupling_ghz":..}]}                 (all 1-based)

nlohmann::json to_json(const CircuitDesign& design);
CircuitDesign design_from_json(const nlohmann::json& doc);
CircuitDesign load_design(const std::filesystem::path& path);

nlohmann::json to_json(const FeasibilityReport& report);

// [{"beta":..,"persistent_current_na":..,"impedance_ohm":..}, ...]
std::vector<OscillatorHardware> hardware_from_json(const nlohmann::json& doc);

}  // namespace polaron::circuit
