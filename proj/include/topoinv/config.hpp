#pragma once

#include <istream>
#include <string>

#include "topoinv/sweep.hpp"

namespace topoinv {

// Parse the flat key-value sweep config format (grammar in docs/config.md)
// into a validated SweepConfig. Throws ValidationError with the offending
// line on any syntax or semantic problem.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_text(const std::string& text);
SweepConfig load_sweep_config(const std::string& path);

} // namespace topoinv
