#ifndef CFC_CLI_HPP_
#define CFC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cfc {

  // Runs one command line (without the program name). Returns the exit code:
  // 0 success, 1 domain error (error JSON on `out`), 2 usage error.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace cfc

#endif  // CFC_CLI_HPP_
