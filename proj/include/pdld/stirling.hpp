#pragma once

#include <cstdint>
#include <vector>

namespace pdld {

// log |S_n^k|, unsigned Stirling numbers of the first kind, built by the row
// recurrence |S_{n+1}^k| = n |S_n^k| + |S_n^{k-1}| carried out in log space.
// Rows are cached behind a shared mutex: any number of concurrent readers,
// one writer extending the cache. n is capped at 5000.
double log_stirling1(std::int64_t n, std::int64_t k);

// full row (k = 1..n) for repeated access
std::vector<double> log_stirling1_row(std::int64_t n);

}  // namespace pdld
