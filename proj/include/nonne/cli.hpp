// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nonne::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerificationFailed = 2;
inline constexpr int kResource = 3;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonne::cli
