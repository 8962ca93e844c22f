#pragma once

#include <string>
#include <vector>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/range.hpp"
#include "smoothdiv/record.hpp"

namespace smoothdiv {

// Public claim ids in presentation order.
const std::vector<std::string>& claim_ids();

// Runs one claim over the requested range. Unknown ids raise domain_error.
// Besides the public ids there are three hidden ids, selftest-pass,
// selftest-fail and selftest-inconclusive, that emit fixed synthetic records
// so the reporting pipeline and exit codes can be exercised end to end.
ClaimRun run_claim(const std::string& id, const RangeSpec& spec,
                   const PrecisionPolicy& pol);

}  // namespace smoothdiv
