#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coopgame::cli {

/// Exit codes: 0 computed and all requested audits passed, 1 input error,
/// 2 an audited claim failed.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kAuditFailure = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coopgame::cli
