#ifndef MOTGRP_TOOLS_CLI_HPP_
#define MOTGRP_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace motgrp::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motgrp::cli

#endif  // MOTGRP_TOOLS_CLI_HPP_
