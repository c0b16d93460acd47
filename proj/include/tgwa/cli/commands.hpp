#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tgwa/cli/report.hpp"
#include "tgwa/cli/spec_file.hpp"

namespace tgwa::cli {

// Parses a spec and requires the automorphism certificates to pass.
ProjectSpec load_spec(const std::string& path);

// The paper-example corpus plus the spec-file examples.
RunReport run_selftest();

// Runs one command; args exclude the program name. Returns the exit status:
// 0 when every check passes, 1 when a check fails or is unverifiable, 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgwa::cli
