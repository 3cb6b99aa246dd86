#include "apollo/registry.hpp"

#include "apollo/errors.hpp"

namespace apollo {

namespace {

struct Row {
    const char* label;
    const char* printed;
    int depth;
    const char *alpha, *beta, *f, *g, *h;
    int p, m;  // E[p,m], or 0,0
    const char* erratum;
};

// (αx + βy)² + f = 4xy + gx + hy
constexpr Row kRows[] = {
    {"1L_{1,1}", "1L_{1,1}", 1, "1", "1", "1", "2", "2", 1, 1, ""},
    {"2L_{1,1}", "2L_{1,1}", 2, "2", "2", "1/4", "2", "2", 1, 2, ""},
    {"3L_{1,1}", "3L_{1,1}", 3, "3", "3", "1/9", "2", "2", 1, 3, ""},
    {"3L_{2,1}", "3L_{2,1}", 3, "3/2", "2", "4/9", "2", "4/3", 2, 3, ""},
    {"4L_{1,1}", "4L_{1,1}", 4, "4", "4", "1/16", "2", "2", 1, 4, ""},
    {"4L_{3,2}", "4L_{3,2}", 4, "14/9", "11/6", "4/9", "52/27", "14/9", 0, 0, ""},
    {"4L_{4,1}", "4L_{4,1}", 4, "4/3", "2", "9/16", "2", "1", 3, 4, ""},
    {"4L_{3,1}", "4L_{3,1}", 4, "5/3", "11/5", "9/25", "2", "34/25", 3, 5, ""},
    {"4L_{2,1}", "4L_{2,1}", 4, "5/2", "14/5", "4/25", "2", "44/25", 2, 5,
     "printed beta 16/5; 14/5 is the E[2,5] value"},
    {"5L_{1,1}", "5L_{1,1}", 5, "5", "5", "1/25", "2", "2", 1, 5, ""},
    {"5L_{8,1}", "5L_{8,1}", 5, "5/4", "2", "16/25", "2", "4/5", 4, 5, ""},
    {"5L_{5,1}", "5L_{5,1}", 5, "7/4", "16/7", "16/49", "2", "68/49", 4, 7, ""},
    {"5L_{5,4}", "5L_{5,4}", 5, "19/12", "16/9", "4/9", "17/9", "44/27", 0, 0, ""},
    {"5L_{4,1}", "5L_{4,1}", 5, "7/3", "19/7", "9/49", "2", "82/49", 3, 7, ""},
    {"5L_{6,1}", "5L_{6,1}", 5, "8/5", "11/5", "25/64", "2", "5/4", 5, 8, ""},
    {"5L_{6,3}", "5L_{6,3}", 5, "3/2", "11/6", "121/256", "31/16", "71/48", 0, 0, ""},
    {"5L_{3,1}", "5L_{3,1}", 5, "8/3", "3", "9/64", "2", "7/4", 3, 8, ""},
    {"5L_{7,1}", "5L_{3,1}", 5, "7/5", "73/35", "25/49", "2", "50/49", 5, 7,
     "printed under a duplicate label; keyed by its x-order column"},
    {"5L_{2,1}", "5L_{2,1}", 5, "7/2", "26/7", "4/49", "2", "92/49", 2, 7, ""},
    {"5L_{7,2}", "5L_{7,2}", 5, "26/19", "73/38", "196/361", "716/361", "422/361", 0, 0, ""},
    {"5L_{5,3}", "5L_{5,3}", 5, "27/17", "97/51", "121/289", "562/289", "1334/867", 0, 0, ""},
    {"5L_{3,2}", "5L_{3,2}", 5, "38/15", "27/10", "4/25", "148/75", "46/25", 0, 0, ""},
    {"5L_{5,2}", "5L_{5,2}", 5, "38/23", "97/46", "196/529", "1052/529", "758/529", 0, 0,
     "printed square omits y on the 97/46 term"},
};

std::vector<RegistryEntry> build() {
    std::vector<RegistryEntry> out;
    for (const Row& r : kRows) {
        DisplayForm d{Rational::parse(r.alpha), Rational::parse(r.beta), Rational::parse(r.f), Rational::parse(r.g),
                      Rational::parse(r.h)};
        std::optional<SBPair> pair;
        if (r.m != 0) pair = SBPair(r.p, r.m);
        Conic c = d.to_conic();
        out.push_back({r.label, r.printed, r.depth, std::move(d), std::move(c), pair, r.erratum});
    }
    return out;
}

}  // namespace

const std::vector<RegistryEntry>& appendix_b_registry() {
    static const std::vector<RegistryEntry> registry = build();
    return registry;
}

const RegistryEntry& registry_lookup(const std::string& label) {
    for (const auto& e : appendix_b_registry())
        if (e.label == label) return e;
    throw UsageError("unknown registry label: " + label);
}

}  // namespace apollo
