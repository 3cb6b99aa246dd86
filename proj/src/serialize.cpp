#include "apollo/serialize.hpp"

#include <charconv>

#include "apollo/errors.hpp"

namespace apollo {

namespace {

const char* const kCoefficientNames[6] = {"A", "B", "C", "D", "E", "F"};

std::string point_text(const Point<Rational>& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const QuadValue& v) {
    if (v.is_rational()) return v.rational_part().to_string();
    return {{"r", v.rational_part().to_string()}, {"s", v.radical_part().to_string()}, {"D", v.radicand().to_string()}};
}

json to_json(double v) { return v; }

json to_json(const BigFloat& v) { return v.to_double(); }

json to_json(const Point<Rational>& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

json to_json(const SBPair& p) { return json::array({p.p(), p.q()}); }

json to_json(const Conic& c, const std::string& label) {
    json j;
    if (!label.empty()) j["label"] = label;
    for (int i = 0; i < 6; ++i) j[kCoefficientNames[i]] = c.coefficients()[i].to_string();
    j["degenerate"] = c.degenerate();
    return j;
}

json to_json(const DisplayForm& d) {
    return {{"alpha", d.alpha.to_string()}, {"beta", d.beta.to_string()}, {"f", d.f.to_string()},
            {"g", d.g.to_string()},         {"h", d.h.to_string()}};
}

Conic conic_from_json(const json& j) {
    std::array<Rational, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = Rational::parse(j.at(kCoefficientNames[i]).get<std::string>());
    return Conic(c);
}

json registry_to_json(const std::vector<RegistryEntry>& registry) {
    json out = json::array();
    for (const auto& e : registry) {
        json j = to_json(e.conic, e.label);
        j["printed_label"] = e.printed_label;
        j["depth"] = e.depth;
        j["display"] = to_json(e.display);
        j["corona"] = e.corona ? to_json(*e.corona) : json(nullptr);
        j["erratum"] = e.erratum;
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<RegistryEntry> registry_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("registry JSON must be an array of entries");
    try {
        std::vector<RegistryEntry> out;
        for (const auto& e : j) {
            const auto& d = e.at("display");
            auto r = [&](const char* k) { return Rational::parse(d.at(k).get<std::string>()); };
            std::optional<SBPair> pair;
            if (!e.at("corona").is_null()) pair = SBPair(e["corona"][0].get<std::int64_t>(), e["corona"][1].get<std::int64_t>());
            out.push_back({e.at("label").get<std::string>(), e.at("printed_label").get<std::string>(),
                           e.at("depth").get<int>(), DisplayForm{r("alpha"), r("beta"), r("f"), r("g"), r("h")},
                           conic_from_json(e), pair, e.at("erratum").get<std::string>()});
        }
        return out;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad registry JSON: ") + ex.what());
    }
}

json x_corona_to_json(const std::vector<XCoronaEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries)
        out.push_back({{"pair", to_json(e.pair)},
                       {"row", e.row},
                       {"tangent_x", e.tangent_x.to_string()},
                       {"conic", to_json(e.conic)}});
    return out;
}

json parabolic_corona_to_json(const std::vector<ParabolicEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        json t = json::array();
        for (const auto& n : e.tangencies) t.push_back({{"neighbor", to_json(n.neighbor)}, {"point", to_json(n.point)}});
        out.push_back({{"pair", to_json(e.pair)},
                       {"row", e.row},
                       {"depth", e.depth},
                       {"axis", e.axis},
                       {"point", to_json(e.point)},
                       {"tangencies", std::move(t)}});
    }
    return out;
}

CsvRow x_corona_header() { return {"p", "m", "row", "tangent_x", "A", "B", "C", "D", "E", "F"}; }

std::vector<CsvRow> x_corona_rows(const std::vector<XCoronaEntry>& entries) {
    std::vector<CsvRow> rows;
    for (const auto& e : entries) {
        CsvRow r{std::to_string(e.pair.p()), std::to_string(e.pair.q()), std::to_string(e.row), e.tangent_x.to_string()};
        for (const auto& c : e.conic.coefficients()) r.push_back(c.to_string());
        rows.push_back(std::move(r));
    }
    return rows;
}

CsvRow parabolic_corona_header() { return {"p", "q", "row", "depth", "axis", "point", "tangencies"}; }

std::vector<CsvRow> parabolic_corona_rows(const std::vector<ParabolicEntry>& entries) {
    std::vector<CsvRow> rows;
    for (const auto& e : entries) {
        std::string t;
        for (const auto& n : e.tangencies) {
            if (!t.empty()) t += ' ';
            t += n.neighbor.to_string() + point_text(n.point);
        }
        rows.push_back({std::to_string(e.pair.p()), std::to_string(e.pair.q()), std::to_string(e.row),
                        std::to_string(e.depth), e.axis ? "1" : "0", point_text(e.point), t});
    }
    return rows;
}

}  // namespace apollo
