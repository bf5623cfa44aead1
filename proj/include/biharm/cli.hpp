#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biharm::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

// args excludes the program name. Reports go to out or to --output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace biharm::cli
