#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/rational.hpp"

namespace smoothdiv {

struct VerificationRecord {
  std::string claim_id;
  Rat x;
  Ball lhs;
  Ball rhs;
  Ball margin;  // enclosure of lower(rhs) - upper(lhs)
  Status status = Status::Inconclusive;
};

struct ClaimRun {
  std::string claim_id;
  std::vector<VerificationRecord> records;
  std::vector<std::string> notes;  // informational summary lines, not part of the report
  Status overall() const;
};

// record for an inequality lhs <= rhs, certified by check_inequality
VerificationRecord make_record(std::string claim_id, Rat x, Ball lhs, Ball rhs);

// record for an identity: `residual` must contain zero with radius at most
// `tolerance`; a ball certainly away from zero is a Fail. The margin column
// reports tolerance - radius.
VerificationRecord make_residual_record(std::string claim_id, Rat x,
                                        const Ball& residual,
                                        const Rat& tolerance);

// 20 significant digits, round-to-nearest, format d.dddd...e(+/-)XX
std::string render_mpfr(mpfr_srcptr v);
std::string render_rat(const Rat& q);

void write_csv(std::ostream& os, const ClaimRun& run);
void write_json(std::ostream& os, const ClaimRun& run);

int exit_code_for(Status overall);

}  // namespace smoothdiv
