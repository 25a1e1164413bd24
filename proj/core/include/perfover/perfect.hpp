#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "perfover/factorize.hpp"
#include "perfover/numkit.hpp"

namespace perfover {

struct PartGroup {
  std::uint64_t part;
  std::uint64_t multiplicity;
  friend constexpr bool operator==(PartGroup, PartGroup) = default;
};

// A partition in grouped form: strictly increasing part sizes, each with
// a positive multiplicity. The weight is the sum of part * multiplicity.
class Partition {
 public:
  explicit Partition(std::vector<PartGroup> groups);

  const std::vector<PartGroup>& groups() const { return groups_; }
  std::uint64_t weight() const { return weight_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<PartGroup> groups_;
  std::uint64_t weight_;
};

// Result of a perfectness check. When not perfect, witness_weight is the
// smallest target weight represented a wrong number of times, and
// witness_count how many sub-multisets of parts reach it (0 or >= 2).
struct PerfectnessReport {
  bool perfect;
  std::uint64_t witness_weight = 0;
  Count witness_count = 0;
};

// Thrown when a partition is not of the shape produced by
// partition_from_factorization (smallest part 1, divisibility chain).
class NotBijectionImage : public std::domain_error {
 public:
  NotBijectionImage(std::string message, std::size_t group_index)
      : std::domain_error(std::move(message)), group_index(group_index) {}
  std::size_t group_index;
};

// The classical bijection: the ordered factorization a1*a2*...*ar of N
// maps to the perfect partition
//   (1^(a1-1), a1^(a2-1), (a1 a2)^(a3-1), ..., (a1...a_{r-1})^(ar-1))
// of N - 1. Part sizes are the strictly increasing prefix products.
Partition partition_from_factorization(const OrderedFactorization& of);

// Inverse of partition_from_factorization. Validates the shape eagerly
// and throws NotBijectionImage at the first violating group.
OrderedFactorization factorization_from_partition(const Partition& p);

// A partition of n is perfect when its parts contain exactly one
// sub-multiset summing to every m in 1..n. Copies of equal parts are
// indistinguishable: a contained partition is counted once, not per
// labeled copy.
PerfectnessReport check_perfect_partition(const Partition& p);
bool is_perfect_partition(const Partition& p);

// All perfect partitions of n, as images of the ordered factorizations
// of n + 1, in the factorization enumeration order.
void for_each_perfect_partition(std::uint64_t n,
                                const std::function<void(const Partition&)>& visit);
std::vector<Partition> perfect_partitions(std::uint64_t n);

// Number of perfect partitions of n, f(n+1).
Count count_perfect_partitions(std::uint64_t n);
// ... with exactly k groups of equal parts, f(n+1, k).
Count count_perfect_partitions(std::uint64_t n, std::uint32_t k);

}  // namespace perfover
