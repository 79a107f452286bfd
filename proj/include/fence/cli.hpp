#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fence::cli {

// Dispatches one command line. Exit status: 0 success (including
// NotRelatedByInvariant and Unknown search verdicts), 1 parse or usage
// errors, 2 inapplicable moves and unmet preconditions.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fence::cli
