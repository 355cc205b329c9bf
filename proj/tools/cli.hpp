#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace co2lab::cli {

// Exit codes: 0 success, 1 property check failed, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace co2lab::cli
