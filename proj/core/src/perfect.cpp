#include "perfover/perfect.hpp"

#include <string>
#include <utility>

namespace perfover {

namespace {

using u64 = std::uint64_t;

}  // namespace

Partition::Partition(std::vector<PartGroup> groups) : groups_(std::move(groups)) {
  Count weight{0};
  u64 prev_part = 0;
  for (const auto& g : groups_) {
    if (g.part == 0) throw std::invalid_argument("Partition: parts must be positive");
    if (g.part <= prev_part)
      throw std::invalid_argument("Partition: parts must be strictly increasing");
    if (g.multiplicity == 0)
      throw std::invalid_argument("Partition: multiplicities must be positive");
    weight += Count(g.part) * Count(g.multiplicity);
    prev_part = g.part;
  }
  weight_ = weight.value();
}

Partition partition_from_factorization(const OrderedFactorization& of) {
  std::vector<PartGroup> groups;
  groups.reserve(of.length());
  u64 prefix_product = 1;
  for (u64 factor : of.factors()) {
    // factor - 1 >= 1, and prefix products strictly increase, so every
    // group is present and the parts never collide.
    groups.push_back({prefix_product, factor - 1});
    prefix_product *= factor;
  }
  return Partition(std::move(groups));
}

OrderedFactorization factorization_from_partition(const Partition& p) {
  const auto& groups = p.groups();
  if (groups.empty() || groups.front().part != 1)
    throw NotBijectionImage("factorization_from_partition: smallest part must be 1", 0);
  std::vector<u64> factors;
  factors.reserve(groups.size());
  u64 prefix_product = 1;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].part != prefix_product)
      throw NotBijectionImage(
          "factorization_from_partition: part " + std::to_string(groups[i].part) +
              " breaks the prefix-product chain (expected " +
              std::to_string(prefix_product) + ")",
          i);
    const u64 factor = groups[i].multiplicity + 1;
    factors.push_back(factor);
    prefix_product *= factor;
  }
  return OrderedFactorization(std::move(factors));
}

PerfectnessReport check_perfect_partition(const Partition& p) {
  const u64 weight = p.weight();
  // ways[m] = number of sub-multisets of the parts with total m, counting
  // multiplicity choices per part size.
  std::vector<Count> ways(weight + 1, Count(0));
  ways[0] = 1;
  for (const auto& g : p.groups()) {
    std::vector<Count> next(weight + 1, Count(0));
    for (u64 m = 0; m <= weight; ++m) {
      if (ways[m] == Count(0)) continue;
      for (u64 c = 0; c <= g.multiplicity; ++c) {
        const u64 add = g.part * c;
        if (add > weight - m) break;
        next[m + add] += ways[m];
      }
    }
    ways = std::move(next);
  }
  for (u64 m = 1; m <= weight; ++m) {
    if (ways[m] != Count(1)) return {false, m, ways[m]};
  }
  return {true};
}

bool is_perfect_partition(const Partition& p) { return check_perfect_partition(p).perfect; }

void for_each_perfect_partition(std::uint64_t n,
                                const std::function<void(const Partition&)>& visit) {
  if (n == 0) throw std::invalid_argument("for_each_perfect_partition: n must be positive");
  for_each_ordered_factorization(n + 1, [&](const std::vector<u64>& factors) {
    visit(partition_from_factorization(OrderedFactorization(factors)));
  });
}

std::vector<Partition> perfect_partitions(std::uint64_t n) {
  std::vector<Partition> out;
  for_each_perfect_partition(n, [&out](const Partition& p) { out.push_back(p); });
  return out;
}

Count count_perfect_partitions(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_perfect_partitions: n must be positive");
  return count_factorizations(n + 1);
}

Count count_perfect_partitions(std::uint64_t n, std::uint32_t k) {
  if (n == 0) throw std::invalid_argument("count_perfect_partitions: n must be positive");
  return count_factorizations_into(n + 1, k);
}

}  // namespace perfover
