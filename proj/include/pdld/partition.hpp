#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pdld {

// Allelic partition of n: a[j-1] counts parts of size j, sum j*a_j = n.
using Partition = std::vector<std::int64_t>;

bool partition_valid(const Partition& a, std::int64_t n);

// number of parts k = sum a_j
std::int64_t partition_blocks(const Partition& a);

// Enumerates every partition of n, largest parts first (descending
// lexicographic in (a_n, ..., a_1)). n is capped at 25; the enumeration is
// only used for exhaustive checks at small n.
void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& fn);

std::vector<Partition> all_partitions(std::int64_t n);

// log of the multinomial factor n! / (prod_j (j!)^{a_j} a_j!) counting the
// ways to split n labeled items into blocks with part profile a
double log_partition_factor(std::int64_t n, const Partition& a);

// comma-separated a_1,...,a_n; enforces sum j*a_j = n with n = element count
Partition parse_partition(const std::string& text);

std::string partition_to_string(const Partition& a);

}  // namespace pdld
