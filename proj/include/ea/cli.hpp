#pragma once

// Command-line front end: `ea <command> --group <SPEC> [--out json|tsv]
// [--order default|alt] [--limit-order N] [--timing]`.

#include <iosfwd>
#include <string>
#include <vector>

namespace ea {

/// Exit codes: 0 all checks pass, 1 a check or invariant failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ea
