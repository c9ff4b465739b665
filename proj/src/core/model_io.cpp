#include "polaron/core/model_io.hpp"

#include <fstream>
#include <set>
#include <string>

#include "polaron/error.hpp"

namespace polaron::core {

namespace {

using nlohmann::json;

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where)
{
    require(obj.is_object(), where + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        require(ok, where + ": unknown key \"" + key + "\"");
    }
}

double number_or(const json& obj, const char* key, double fallback, const std::string& where)
{
    if (!obj.contains(key)) return fallback;
    require(obj[key].is_number(), where + ": \"" + key + "\" must be a number");
    return obj[key].get<double>();
}

double required_number(const json& obj, const char* key, const std::string& where)
{
    require(obj.contains(key), where + ": missing \"" + key + "\"");
    return number_or(obj, key, 0.0, where);
}

std::size_t site_index(const json& obj, const char* key, std::size_t n, const std::string& where)
{
    require(obj.contains(key) && obj[key].is_number_integer(), where + ": \"" + key + "\" must be an integer");
    const auto v = obj[key].get<long long>();
    require(v >= 1 && static_cast<std::size_t>(v) <= n,
            where + ": site index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

}  // namespace

GeneralizedHolsteinModel model_from_json(const json& doc)
{
    only_keys(doc, {"sites", "couplings"}, "model");
    require(doc.contains("sites") && doc["sites"].is_array() && !doc["sites"].empty(),
            "model: \"sites\" must be a non-empty array");
    const auto& sites = doc["sites"];
    const std::size_t n = sites.size();

    std::vector<double> eps(n), shift(n);
    std::vector<std::vector<Mode>> modes(n);
    for (std::size_t s = 0; s < n; ++s) {
        const std::string where = "site " + std::to_string(s + 1);
        only_keys(sites[s], {"epsilon_ghz", "d_shift_ghz", "modes"}, where);
        eps[s] = number_or(sites[s], "epsilon_ghz", 0.0, where);
        shift[s] = number_or(sites[s], "d_shift_ghz", 0.0, where);
        if (!sites[s].contains("modes")) continue;
        require(sites[s]["modes"].is_array(), where + ": \"modes\" must be an array");
        for (const auto& m : sites[s]["modes"]) {
            only_keys(m, {"omega_ghz", "huang_rhys"}, where + " mode");
            modes[s].push_back({required_number(m, "omega_ghz", where + " mode"),
                                required_number(m, "huang_rhys", where + " mode")});
        }
    }

    Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(n, n);
    if (doc.contains("couplings")) {
        require(doc["couplings"].is_array(), "model: \"couplings\" must be an array");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& c : doc["couplings"]) {
            only_keys(c, {"i", "j", "J_ghz"}, "coupling");
            const std::size_t i = site_index(c, "i", n, "coupling");
            const std::size_t j = site_index(c, "j", n, "coupling");
            require(i != j, "coupling: self-coupling of site " + std::to_string(i + 1));
            require(seen.insert(std::minmax(i, j)).second,
                    "coupling: duplicate pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            const double v = required_number(c, "J_ghz", "coupling");
            coupling(i, j) = v;
            coupling(j, i) = v;
        }
    }
    return {std::move(coupling), std::move(eps), std::move(shift), std::move(modes)};
}

json model_to_json(const GeneralizedHolsteinModel& model)
{
    json doc;
    doc["sites"] = json::array();
    for (std::size_t s = 0; s < model.n_sites(); ++s) {
        json site;
        site["epsilon_ghz"] = model.site_energy()[s];
        site["d_shift_ghz"] = model.shift()[s];
        site["modes"] = json::array();
        for (const Mode& m : model.modes(s)) {
            site["modes"].push_back({{"omega_ghz", m.omega}, {"huang_rhys", m.huang_rhys}});
        }
        doc["sites"].push_back(site);
    }
    doc["couplings"] = json::array();
    for (std::size_t i = 0; i < model.n_sites(); ++i) {
        for (std::size_t j = i + 1; j < model.n_sites(); ++j) {
            if (model.coupling(i, j) != 0.0) {
                doc["couplings"].push_back({{"i", i + 1}, {"j", j + 1}, {"J_ghz", model.coupling(i, j)}});
            }
        }
    }
    return doc;
}

GeneralizedHolsteinModel load_model(const std::filesystem::path& path)
{
    std::ifstream in(path);
    require(in.good(), "cannot open model file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError("model file " + path.string() + ": " + e.what());
    }
    return model_from_json(doc);
}

}  // namespace polaron::core
