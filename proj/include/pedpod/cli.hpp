#ifndef PEDPOD_CLI_HPP
#define PEDPOD_CLI_HPP

#include <iosfwd>

namespace pedpod::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (argv[0] is the program name).
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace pedpod::cli

#endif
