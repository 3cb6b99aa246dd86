#include <fstream>
#include <sstream>

#include "doctest.h"

#include "apollo/arrangement.hpp"
#include "apollo/errors.hpp"
#include "apollo/serialize.hpp"
#include "apollo/verify.hpp"

using namespace apollo;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing data file " << path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("serialize") {
    TEST_CASE("numbers") {
        CHECK(to_json(Rational(-3, 4)) == "-3/4");
        CHECK(to_json(QuadValue(Rational(2))) == "2");
        CHECK(to_json(QuadValue(3, -2, 3)) == json{{"r", "3"}, {"s", "-2"}, {"D", "3"}});
        CHECK(to_json(Point<Rational>{Rational(1, 3), Rational(1, 12)}) == json::array({"1/3", "1/12"}));
        CHECK(to_json(SBPair(2, 3)) == json::array({2, 3}));
    }

    TEST_CASE("depth results") {
        const auto j = to_json(depth({15, 35, 102}, {.trace = true}));
        CHECK(j["kind"] == "finite");
        CHECK(j["depth"] == 4);
        CHECK(j["terminal"] == "-1");
        CHECK(j["trace"].size() == 4);
        CHECK(j["trace"][3] == json::array({"-1", "2", "2"}));
        const auto capped = to_json(depth_scaled(Rational(1, 3), Rational(1093, 12000), {.cap = 5}));
        CHECK(capped["kind"] == "reached_cap");
        CHECK(capped["cap"] == 5);
        CHECK_FALSE(capped.contains("depth"));
    }

    TEST_CASE("conics and registry round-trip") {
        const Conic c = corona_conic(3, 4);
        CHECK(conic_from_json(to_json(c, "E[3,4]")) == c);
        const auto& reg = appendix_b_registry();
        const auto back = registry_from_json(registry_to_json(reg));
        REQUIRE(back.size() == reg.size());
        for (std::size_t i = 0; i < reg.size(); ++i) {
            CHECK(back[i].label == reg[i].label);
            CHECK(back[i].conic == reg[i].conic);
            CHECK(back[i].display == reg[i].display);
            CHECK(back[i].corona == reg[i].corona);
            CHECK(back[i].erratum == reg[i].erratum);
        }
        CHECK_THROWS_AS(registry_from_json(json::object()), ParseError);
    }

    TEST_CASE("shipped registry file equals the built-in table") {
        const auto file = registry_from_json(json::parse(slurp(std::string(APOLLO_DATA_DIR) + "/plateau_registry.json")));
        const auto& reg = appendix_b_registry();
        REQUIRE(file.size() == reg.size());
        for (std::size_t i = 0; i < reg.size(); ++i) {
            CAPTURE(reg[i].label);
            CHECK(file[i].label == reg[i].label);
            CHECK(file[i].printed_label == reg[i].printed_label);
            CHECK(file[i].conic == reg[i].conic);
            CHECK(file[i].display == reg[i].display);
        }
    }

    TEST_CASE("shipped arrangement files derive the fixture conics") {
        const std::string dir = std::string(APOLLO_DATA_DIR) + "/arrangements/";
        CHECK(derive_conic(arrangement_from_json(slurp(dir + "case1.json"))) == derive_conic(case1_spec()));
        CHECK(derive_conic(arrangement_from_json(slurp(dir + "case1_5.json"))) == derive_conic(case1_5_spec()));
        CHECK(derive_conic(arrangement_from_json(slurp(dir + "case2.json"))) == derive_conic(case2_spec()));
    }

    TEST_CASE("corona exports") {
        const auto xc = x_corona(3);
        const auto rows = x_corona_rows(xc);
        CHECK(rows.size() == xc.size());
        for (const auto& r : rows) CHECK(r.size() == x_corona_header().size());
        CHECK(x_corona_to_json(xc).size() == xc.size());
        const auto pc = parabolic_corona(3);
        CHECK(parabolic_corona_rows(pc).size() == pc.size());
        CHECK(parabolic_corona_to_json(pc).size() == pc.size());
    }
}

TEST_SUITE("verify") {
    TEST_CASE("all suites pass") {
        for (const auto& name : suite_names()) {
            VerifyOptions opt;
            if (name == "theorem1") opt.samples_per_ellipse = 200;
            const Report r = run_suite(name, opt);
            CAPTURE(name);
            CHECK(r.passed());
            CHECK(r.checks.size() > 10);
        }
        CHECK_THROWS_AS(run_suite("nope"), UsageError);
    }

    TEST_CASE("report schema") {
        Report r{"demo", {}, {}};
        r.add("eq", "1", "1");
        r.add("ne", "1", "2");
        r.add("explicit", "x", "y", true);
        CHECK(r.failures() == 1);
        const json j = r.to_json();
        CHECK(j["suite"] == "demo");
        CHECK(j["checks"].size() == 3);
        CHECK(j["checks"][1]["pass"] == false);
        CHECK(j["checks"][0].contains("expected"));
        CHECK(j["checks"][0].contains("actual"));
        CHECK(j["checks"][0].contains("name"));
    }

    TEST_CASE("registry suite logs the case-2 typo as a note") {
        const Report r = verify_registry();
        bool noted = false;
        for (const auto& n : r.notes) noted = noted || n.find("22/3") != std::string::npos;
        CHECK(noted);
    }
}
