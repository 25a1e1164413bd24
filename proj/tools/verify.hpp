#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "records.hpp"

namespace perfover::cli {

// Bounds for the verification suites. The defaults are the documented
// desk-scale ranges; `--nmax` overrides the primary bound of the chosen
// suite.
struct VerifyLimits {
  std::uint64_t fv_nmax = 2000;       // path equivalence sweep over N
  std::uint64_t id_nmax = 5000;       // identity sweep over N (and n)
  std::uint32_t pow2_smax = 12;       // closed power-of-two forms vs theorem sum
  std::uint32_t oracle_smax = 16;     // proposition forms vs enumeration
  std::uint64_t bij_nmax = 1000;      // bijection round trip over N
  std::uint64_t brute_nmax = 20;      // exhaustive partition search
  std::uint64_t oracle_nmax = 31;     // exhaustive overpartition search
  std::uint64_t sound_nmax = 200;     // constructive soundness sweep
  std::uint64_t parity_nmax = 2000;   // even-weight parity law sweep
};

// `verify <suite>`: runs the property checks of one suite (or all of
// them), emits one check_result record per property, and exits with
// code 3 if anything failed.
int cmd_verify(const std::string& suite, const VerifyLimits& limits, const GlobalOpts& opts,
               std::ostream& out, std::ostream& err);

}  // namespace perfover::cli
