#pragma once
// Command-line front end. run_cli is the whole program minus main(), wired to
// explicit streams so tests can drive it and compare bytes.
//
// Exit codes: 0 success, 1 at least one verification check failed,
// 2 usage or parameter error, 3 input/decode error (message names the line).

#include <iosfwd>
#include <string>
#include <vector>

namespace wiener {

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace wiener
