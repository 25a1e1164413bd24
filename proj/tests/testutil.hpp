// Small helpers shared by the test suites: terse constructors for grouped
// (over)partitions and canonical string keys for set comparisons.
#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "perfover/overperfect.hpp"
#include "perfover/perfect.hpp"

namespace testutil {

using u64 = std::uint64_t;

inline perfover::Partition pp(std::vector<std::pair<u64, u64>> groups) {
  std::vector<perfover::PartGroup> gs;
  gs.reserve(groups.size());
  for (auto [part, mult] : groups) gs.push_back({part, mult});
  return perfover::Partition(std::move(gs));
}

inline perfover::Overpartition op(std::vector<std::tuple<u64, u64, bool>> groups) {
  std::vector<perfover::OverGroup> gs;
  gs.reserve(groups.size());
  for (auto [part, mult, overlined] : groups) gs.push_back({part, mult, overlined});
  return perfover::Overpartition(std::move(gs));
}

inline std::string key(const perfover::Partition& p) {
  std::string s;
  for (const auto& g : p.groups())
    s += std::to_string(g.part) + "^" + std::to_string(g.multiplicity) + ",";
  return s;
}

inline std::string key(const perfover::Overpartition& o) {
  std::string s;
  for (const auto& g : o.groups()) {
    s += std::to_string(g.part) + "^" + std::to_string(g.multiplicity);
    if (g.overlined) s += "~";
    s += ",";
  }
  return s;
}

}  // namespace testutil
