#pragma once

#include <ostream>
#include <string>

#include "qphase/statevec.hpp"

namespace qphase {

// Shortest faithful fixed formatting used in all text outputs: %.17g, which
// round-trips any double.
std::string format_g17(double v);

// State dump: one line per amplitude, `index<TAB>re<TAB>im`, indices
// ascending, LF line endings. Used by golden tests and `--dump-final`.
void write_state_dump(std::ostream& out, const RegisterState& s);
std::string state_dump_string(const RegisterState& s);

} // namespace qphase
