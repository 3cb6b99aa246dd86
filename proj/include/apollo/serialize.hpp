#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "apollo/conic.hpp"
#include "apollo/corona.hpp"
#include "apollo/depth.hpp"
#include "apollo/image_io.hpp"
#include "apollo/registry.hpp"

namespace apollo {

using nlohmann::json;

json to_json(const Rational& r);
/// A rational string when the radical part vanishes, else {"r","s","D"}.
json to_json(const QuadValue& v);
json to_json(double v);
json to_json(const BigFloat& v);
json to_json(const Point<Rational>& p);
json to_json(const SBPair& p);
/// {"label", "A".."F", "degenerate"}.
json to_json(const Conic& c, const std::string& label = "");
json to_json(const DisplayForm& d);

template <class T>
json to_json(const DepthResult<T>& r) {
    json j;
    j["kind"] = r.finite() ? "finite" : "reached_cap";
    if (r.finite())
        j["depth"] = r.steps;
    else
        j["cap"] = r.cap;
    if (r.terminal) j["terminal"] = to_json(*r.terminal);
    if (!r.trace.empty()) {
        json trace = json::array();
        for (const auto& t : r.trace) trace.push_back({to_json(t[0]), to_json(t[1]), to_json(t[2])});
        j["trace"] = std::move(trace);
    }
    return j;
}

json registry_to_json(const std::vector<RegistryEntry>& registry);
/// Inverse of registry_to_json. Throws ParseError.
std::vector<RegistryEntry> registry_from_json(const json& j);
Conic conic_from_json(const json& j);

json x_corona_to_json(const std::vector<XCoronaEntry>& entries);
json parabolic_corona_to_json(const std::vector<ParabolicEntry>& entries);
CsvRow x_corona_header();
std::vector<CsvRow> x_corona_rows(const std::vector<XCoronaEntry>& entries);
CsvRow parabolic_corona_header();
std::vector<CsvRow> parabolic_corona_rows(const std::vector<ParabolicEntry>& entries);

}  // namespace apollo
