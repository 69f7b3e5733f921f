#ifndef PROPCHOOSE_ACCEPTANCE_HPP
#define PROPCHOOSE_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>

namespace propchoose {

struct AcceptanceOptions {
    int jobs = 1;
    // Scratch directory for cache round-trip checks; empty means use the
    // system temp directory.
    std::string scratch_dir;
};

// Runs the nine acceptance criteria, printing one PASS/FAIL line per
// criterion with timing. Returns true iff all pass.
bool run_acceptance(std::ostream& out, const AcceptanceOptions& opts = {});

} // namespace propchoose

#endif
