#include "polaron/circuit/circuit_io.hpp"

#include <fstream>
#include <string>

#include "polaron/error.hpp"

namespace polaron::circuit {

using nlohmann::json;

json to_json(const CircuitDesign& design)
{
    json doc;
    doc["qubits"] = json::array();
    for (const Qubit& q : design.qubits) doc["qubits"].push_back({{"delta_ghz", q.delta}, {"bias_ghz", q.bias}});
    doc["couplings"] = json::array();
    for (const QubitCoupling& c : design.couplings) {
        doc["couplings"].push_back({{"i", c.i + 1}, {"j", c.j + 1}, {"g_ghz", c.g}});
    }
    doc["oscillators"] = json::array();
    for (const Oscillator& o : design.oscillators) {
        doc["oscillators"].push_back({{"qubit", o.qubit + 1},
                                      {"omega_ghz", o.omega_prime},
                                      {"eta_ghz", o.eta},
                                      {"chain", o.chain + 1},
                                      {"position", o.position + 1}});
    }
    doc["links"] = json::array();
    for (const OscillatorLink& l : design.links) {
        doc["links"].push_back({{"a", l.a + 1}, {"b", l.b + 1}, {"coupling_ghz", l.coupling}});
    }
    return doc;
}

namespace {

std::size_t one_based(const json& obj, const char* key, const std::string& where)
{
    require(obj.contains(key) && obj[key].is_number_integer() && obj[key].get<long long>() >= 1,
            where + ": \"" + key + "\" must be a positive integer");
    return static_cast<std::size_t>(obj[key].get<long long>() - 1);
}

double number(const json& obj, const char* key, const std::string& where)
{
    require(obj.contains(key) && obj[key].is_number(), where + ": \"" + key + "\" must be a number");
    return obj[key].get<double>();
}

const json& array_or_empty(const json& doc, const char* key)
{
    static const json empty = json::array();
    if (!doc.contains(key)) return empty;
    require(doc[key].is_array(), std::string("design: \"") + key + "\" must be an array");
    return doc[key];
}

}  // namespace

CircuitDesign design_from_json(const json& doc)
{
    require(doc.is_object() && doc.contains("qubits"), "design: missing \"qubits\"");
    CircuitDesign d;
    for (const auto& q : array_or_empty(doc, "qubits")) {
        require(q.is_object(), "design: qubit entries must be objects");
        d.qubits.push_back({q.contains("delta_ghz") ? number(q, "delta_ghz", "qubit") : kDefaultTunnelSplitting,
                            q.contains("bias_ghz") ? number(q, "bias_ghz", "qubit") : 0.0});
    }
    for (const auto& c : array_or_empty(doc, "couplings")) {
        d.couplings.push_back({one_based(c, "i", "coupling"), one_based(c, "j", "coupling"), number(c, "g_ghz", "coupling")});
    }
    for (const auto& o : array_or_empty(doc, "oscillators")) {
        Oscillator osc;
        osc.qubit = one_based(o, "qubit", "oscillator");
        osc.omega_prime = number(o, "omega_ghz", "oscillator");
        osc.eta = number(o, "eta_ghz", "oscillator");
        osc.chain = o.contains("chain") ? one_based(o, "chain", "oscillator") : 0;
        osc.position = o.contains("position") ? one_based(o, "position", "oscillator") : 0;
        d.oscillators.push_back(osc);
    }
    for (const auto& l : array_or_empty(doc, "links")) {
        d.links.push_back({one_based(l, "a", "link"), one_based(l, "b", "link"), number(l, "coupling_ghz", "link")});
    }
    d.validate();
    return d;
}

CircuitDesign load_design(const std::filesystem::path& path)
{
    std::ifstream in(path);
    require(in.good(), "cannot open design file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError("design file " + path.string() + ": " + e.what());
    }
    return design_from_json(doc);
}

json to_json(const FeasibilityReport& report)
{
    json doc;
    doc["verdict"] = report.pass ? "pass" : "fail";
    doc["violated"] = report.violated();
    doc["checks"] = json::array();
    for (const Check& c : report.checks) {
        doc["checks"].push_back({{"name", c.name},
                                 {"subject", c.subject},
                                 {"value", c.value},
                                 {"margin", c.margin},
                                 {"pass", c.pass}});
    }
    return doc;
}

std::vector<OscillatorHardware> hardware_from_json(const json& doc)
{
    require(doc.is_array(), "hardware: expected an array of oscillator entries");
    std::vector<OscillatorHardware> out;
    for (const auto& h : doc) {
        require(h.is_object(), "hardware: entries must be objects");
        OscillatorHardware hw;
        hw.beta = number(h, "beta", "hardware");
        hw.persistent_current_na = number(h, "persistent_current_na", "hardware");
        hw.impedance_ohm = number(h, "impedance_ohm", "hardware");
        hw.validate();
        out.push_back(hw);
    }
    return out;
}

}  // namespace polaron::circuit
