// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "nonne/bounds.hpp"

namespace nonne {

struct SelfcheckOptions {
  bool quick = false;
  /// Source of C(r) for the constant-table suite; defaults to bounds::burgess_C.
  std::function<bounds::Decimal(int r)> burgess_source;
};

struct SelfcheckResult {
  std::vector<std::string> passed;
  std::vector<std::string> failures;  // names of failing invariants

  bool ok() const { return failures.empty(); }
};

/// Engine agreement, cubic-symbol oracle, candidate lists for ell = 3, 5,
/// and the constant tables. Progress lines go to `log` when non-null.
SelfcheckResult run_selfcheck(const SelfcheckOptions& options = {}, std::ostream* log = nullptr);

}  // namespace nonne
