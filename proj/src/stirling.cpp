#include "pdld/stirling.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "pdld/util.hpp"

namespace pdld {

namespace {

constexpr std::int64_t max_n = 5000;

std::shared_mutex cache_mutex;
std::map<std::int64_t, std::vector<double>> row_cache;  // n -> log |S_n^k|, k = 1..n

// advance one row of the recurrence; row holds n entries for k = 1..n
std::vector<double> next_row(const std::vector<double>& row) {
    std::int64_t n = static_cast<std::int64_t>(row.size());
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    double logn = std::log(static_cast<double>(n));
    out[0] = logn + row[0];  // |S_{n+1}^1| = n |S_n^1|
    for (std::int64_t k = 2; k <= n; ++k)
        out[static_cast<std::size_t>(k - 1)] =
            log_add(logn + row[static_cast<std::size_t>(k - 1)], row[static_cast<std::size_t>(k - 2)]);
    out[static_cast<std::size_t>(n)] = 0.0;  // |S_{n+1}^{n+1}| = 1
    return out;
}

std::vector<double> build_row(std::int64_t n) {
    // start from the largest cached row at or below n
    std::vector<double> row;
    std::int64_t have = 0;
    {
        std::shared_lock lk(cache_mutex);
        auto it = row_cache.upper_bound(n);
        if (it != row_cache.begin()) {
            --it;
            have = it->first;
            row = it->second;
        }
    }
    if (have == 0) {
        row = {0.0};  // |S_1^1| = 1
        have = 1;
    }
    while (have < n) {
        row = next_row(row);
        ++have;
    }
    return row;
}

}  // namespace

std::vector<double> log_stirling1_row(std::int64_t n) {
    if (n < 1) throw domain_error("log_stirling1_row: n must be >= 1");
    if (n > max_n) throw complexity_error("log_stirling1_row: n capped at 5000");
    {
        std::shared_lock lk(cache_mutex);
        auto it = row_cache.find(n);
        if (it != row_cache.end()) return it->second;
    }
    std::vector<double> row = build_row(n);
    {
        std::unique_lock lk(cache_mutex);
        row_cache.emplace(n, row);
    }
    return row;
}

double log_stirling1(std::int64_t n, std::int64_t k) {
    if (n < 1) throw domain_error("log_stirling1: n must be >= 1");
    if (k < 1 || k > n) return neg_inf;
    return log_stirling1_row(n)[static_cast<std::size_t>(k - 1)];
}

}  // namespace pdld
