#pragma once

#include <iosfwd>

namespace catalan::acceptance {

// Run the full acceptance suite: one "criterion N (<slug>): PASS|FAIL" line
// per criterion on `out` plus a final tally. Timing and diagnostic detail go
// to `diag` so `out` stays byte-stable. Returns true iff every criterion
// passed.
bool run_all(std::ostream& out, std::ostream& diag);

}  // namespace catalan::acceptance
