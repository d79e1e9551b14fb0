#pragma once

#include <string>

#include "locdiag/formula.hpp"
#include "locdiag/system_file.hpp"

namespace testsupport {

// The checked-in circuit fixtures, parsed once. circuit3 is the
// three-component device (and-gate, inverter, or-gate); circuit11 embeds it
// in an eleven-component one.
const locdiag::SystemFile& circuit3();
const locdiag::SystemFile& circuit11();

std::string fixture_path(const std::string& name);

// The observation both circuits are exercised with: C low and F low.
locdiag::Formula obs_low_c_low_f();

}  // namespace testsupport
