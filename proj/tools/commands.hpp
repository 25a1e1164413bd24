#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "records.hpp"

namespace perfover::cli {

// `count <kind> <n> [--k] [--v] [--r]`; with --xcheck every applicable
// independent computation path runs and a mismatch exits with code 3.
int cmd_count(const std::string& kind, std::uint64_t n, std::optional<std::uint32_t> k,
              std::optional<std::uint32_t> v, std::optional<std::uint32_t> r,
              const GlobalOpts& opts, std::ostream& out, std::ostream& err);

// `enumerate <kind> <n> [--r]`; refuses inputs beyond the size guard
// unless --force is given (exit code 4).
int cmd_enumerate(const std::string& kind, std::uint64_t n, std::optional<std::uint32_t> r,
                  const GlobalOpts& opts, std::ostream& out, std::ostream& err);

// `table <which>` with t3 taking --nmax and --rmax.
int cmd_table(const std::string& which, std::uint64_t nmax, std::uint32_t rmax,
              const GlobalOpts& opts, std::ostream& out, std::ostream& err);

// `sequence <which> [--terms] [--bfile]`.
int cmd_sequence(const std::string& which, std::uint64_t terms, bool bfile,
                 const GlobalOpts& opts, std::ostream& out, std::ostream& err);

}  // namespace perfover::cli
