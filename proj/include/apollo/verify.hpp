#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "apollo/rational.hpp"

namespace apollo {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;  // logged observations, never failures

    void add(std::string name, std::string expected, std::string actual);
    void add(std::string name, std::string expected, std::string actual, bool pass);
    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    std::optional<int> max_row;  // theorem1 defaults to 6, probes to 5
    Rational epsilon = Rational(1, 10000000);
    int samples_per_ellipse = 1000;
    std::uint64_t seed = 1;
};

Report verify_corona(int max_row, int samples_per_ellipse, std::uint64_t seed);
Report verify_registry();
Report verify_sequences(int max_n = 6);
Report verify_barycentric(int max_n = 6);
Report verify_probes(int max_row, const Rational& epsilon);

/// theorem1 | appendixB | sequences | barycentric | probes.
Report run_suite(const std::string& name, const VerifyOptions& options = {});
const std::vector<std::string>& suite_names();

}  // namespace apollo
