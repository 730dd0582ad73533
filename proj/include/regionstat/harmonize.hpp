#pragma once

#include <string>
#include <vector>

#include "regionstat/error.hpp"
#include "regionstat/panel.hpp"

namespace regionstat {

struct Finding {
    Errc code = Errc::UnknownEntity;
    std::string message;
};

// Everything that would make harmonize() refuse, collected without mutating
// the panel. Empty report <=> harmonize() succeeds on the same inputs.
struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const noexcept { return findings.empty(); }
};

ValidationReport validate_crosswalk(const TerritorialPanel& panel, const Crosswalk& cw);

// Maps every year of the panel onto the baseline year's entity set:
// merged/absorbed entities are summed into their targets for all pre-event
// years, every year's hierarchy becomes the baseline hierarchy, and each
// year's national total is preserved. Throws the first validation finding.
TerritorialPanel harmonize(const TerritorialPanel& panel, const Crosswalk& cw);

} // namespace regionstat
