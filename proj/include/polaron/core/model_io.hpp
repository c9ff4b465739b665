#pragma once

#include <filesystem>

#include <json.hpp>

#include "polaron/core/model.hpp"

namespace polaron::core {

// {"sites":[{"epsilon_ghz":..,"d_shift_ghz":..,"modes":[{"omega_ghz":..,"huang_rhys":..}]}],
//  "couplings":[{"i":1,"j":2,"J_ghz":..}]}       (1-based site indices)

GeneralizedHolsteinModel model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const GeneralizedHolsteinModel& model);
GeneralizedHolsteinModel load_model(const std::filesystem::path& path);

}  // namespace polaron::core
