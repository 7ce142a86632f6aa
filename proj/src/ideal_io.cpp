#include <adehilb/ideal_io.hpp>

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace adehilb {

IdealPresentation ideal_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    IdealPresentation p;
    if (!j.contains("variables") || !j["variables"].is_array())
        throw std::invalid_argument("ideal file: missing \"variables\" array");
    for (const auto& v : j["variables"]) p.variables.push_back(v.get<std::string>());
    if (j.contains("relations"))
        for (const auto& s : j["relations"])
            p.relations.push_back(parse_polynomial(s.get<std::string>(), p.variables));
    if (!j.contains("generators") || j["generators"].empty())
        throw std::invalid_argument("ideal file: missing or empty \"generators\"");
    for (const auto& s : j["generators"])
        p.generators.push_back(parse_polynomial(s.get<std::string>(), p.variables));
    return p;
}

IdealPresentation ideal_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open ideal file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ideal_from_json(ss.str());
}

std::string ideal_to_json(const IdealPresentation& i) {
    nlohmann::json j;
    j["variables"] = i.variables;
    j["relations"] = nlohmann::json::array();
    for (const auto& r : i.relations) j["relations"].push_back(r.str());
    j["generators"] = nlohmann::json::array();
    for (const auto& g : i.generators) j["generators"].push_back(g.str());
    return j.dump();
}

} // namespace adehilb
