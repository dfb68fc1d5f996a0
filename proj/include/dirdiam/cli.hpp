#ifndef DIRDIAM_CLI_HPP_
#define DIRDIAM_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dirdiam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line (without the program name). Input defaults to `in` when no --input is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace dirdiam::cli

#endif // DIRDIAM_CLI_HPP_
