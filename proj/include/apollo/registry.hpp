#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apollo/conic.hpp"
#include "apollo/stern_brocot.hpp"

namespace apollo {

struct RegistryEntry {
    std::string label;          // e.g. "4L_{3,2}", unique
    std::string printed_label;  // label as it appears in the source table
    int depth;                  // leading digit of the label
    DisplayForm display;        // the displayed normalization
    Conic conic;                // canonical integer form of `display`
    std::optional<SBPair> corona;  // [p,m] when the entry is E[p,m]
    std::string erratum;        // empty unless the printed equation was corrected
};

/// The 23 tabulated plateau equations of depths 1..5.
const std::vector<RegistryEntry>& appendix_b_registry();
/// Throws UsageError when the label is unknown.
const RegistryEntry& registry_lookup(const std::string& label);

}  // namespace apollo
