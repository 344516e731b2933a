#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseries::cli {

// args excludes the program name. Exit codes: 0 pass, 1 a claim failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace qseries::cli
