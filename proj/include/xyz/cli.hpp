#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xyz {

// Exit statuses of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kVerifySchema = "xyz-verify-report/1";
inline constexpr const char* kEllipticSchema = "xyz-elliptic-report/1";

// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Labels used by the tabulated small-N listings, in listing order (N <= 7).
std::vector<std::string> listing_labels(int n);

}  // namespace xyz
