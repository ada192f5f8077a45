#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conelab {

/// Exit codes: 0 success, 1 negative result or failed verification,
/// 2 input error. Results go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommandInfo {
  std::string path;                 // e.g. "qf minvec"
  std::vector<std::string> ops;     // library operations it reaches
  std::vector<std::string> example; // arguments; "@/" stands for the fixture directory
};

const std::vector<CommandInfo>& dispatch_table();

}  // namespace conelab
