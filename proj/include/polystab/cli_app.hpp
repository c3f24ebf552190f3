#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polystab {

/// Command-line front end. Exit status 0 on success, 1 when crosscheck finds
/// a disagreement, 2 on bad input or unmet preconditions.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polystab
