#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dseq::cli {

/// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;  ///< bad flags or a domain error in the inputs

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Digits as text: one character each for bases up to 36, comma-separated otherwise.
std::string format_digits(const std::vector<std::uint64_t>& digits, std::uint64_t base);
std::vector<std::uint64_t> parse_digits(const std::string& text, std::uint64_t base);

}  // namespace dseq::cli
