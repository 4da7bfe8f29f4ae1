#pragma once

#include <string>

namespace qcluster {

// One verified assertion. lhs/rhs carry canonical renderings for mismatches.
struct CheckReport {
    std::string check;
    std::string inputs;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string witness;
};

}  // namespace qcluster
