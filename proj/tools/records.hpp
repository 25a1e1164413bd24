// Output records for the CLI. A record is one JSON object with a "kind"
// discriminator; the same records render as human-readable plain text,
// CSV, JSON lines, or (for sequences) OEIS b-file pairs. Rendering is
// deterministic: identical arguments produce byte-identical output.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "perfover/overperfect.hpp"
#include "perfover/perfect.hpp"

namespace perfover::cli {

using json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

struct GlobalOpts {
  Format format = Format::Plain;
  bool xcheck = false;
  bool unicode = false;
  bool force = false;
  std::uint64_t guard = 10000;  // size guard for enumeration streams
};

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitGuard = 4;

std::string render_factors(const std::vector<std::uint64_t>& factors, bool unicode);
std::string render_partition(const Partition& p);
std::string render_overpartition(const Overpartition& o, bool unicode);

json partition_groups_json(const Partition& p);
json overpartition_groups_json(const Overpartition& o);

// Buffers records and writes them in one deterministic pass.
class Emitter {
 public:
  Emitter(std::ostream& out, const GlobalOpts& opts) : out_(out), opts_(opts) {}

  void add(json record) { records_.push_back(std::move(record)); }

  // Renders every buffered record in the selected format. `bfile` forces
  // the OEIS b-file form (index value per line) for seq_term records.
  void flush(bool bfile = false);

 private:
  void write_plain(const json& rec);
  void write_csv(const json& rec, bool first);

  std::ostream& out_;
  GlobalOpts opts_;
  std::vector<json> records_;
};

}  // namespace perfover::cli
