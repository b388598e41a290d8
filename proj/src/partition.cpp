#include "pdld/partition.hpp"

#include <sstream>

#include "pdld/special.hpp"
#include "pdld/util.hpp"

namespace pdld {

bool partition_valid(const Partition& a, std::int64_t n) {
    if (static_cast<std::int64_t>(a.size()) != n) return false;
    std::int64_t weight = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 0) return false;
        weight += static_cast<std::int64_t>(j + 1) * a[j];
    }
    return weight == n;
}

std::int64_t partition_blocks(const Partition& a) {
    std::int64_t k = 0;
    for (std::int64_t aj : a) k += aj;
    return k;
}

namespace {

void enumerate(std::int64_t remaining, std::int64_t max_part, Partition& a,
               const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(a);
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++a[static_cast<std::size_t>(part - 1)];
        enumerate(remaining - part, part, a, fn);
        --a[static_cast<std::size_t>(part - 1)];
    }
}

}  // namespace

void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& fn) {
    if (n < 1) throw domain_error("for_each_partition: n must be >= 1");
    if (n > 25) throw complexity_error("for_each_partition: n capped at 25");
    Partition a(static_cast<std::size_t>(n), 0);
    enumerate(n, n, a, fn);
}

std::vector<Partition> all_partitions(std::int64_t n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& a) { out.push_back(a); });
    return out;
}

double log_partition_factor(std::int64_t n, const Partition& a) {
    if (!partition_valid(a, n)) throw domain_error("log_partition_factor: invalid partition");
    double lf = log_factorial(n);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        lf -= static_cast<double>(a[j]) * log_factorial(static_cast<std::int64_t>(j + 1));
        lf -= log_factorial(a[j]);
    }
    return lf;
}

Partition parse_partition(const std::string& text) {
    Partition a;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw usage_error("partition: bad entry '" + item + "'");
            a.push_back(v);
        } catch (const std::invalid_argument&) {
            throw usage_error("partition: bad entry '" + item + "'");
        } catch (const std::out_of_range&) {
            throw usage_error("partition: entry out of range '" + item + "'");
        }
    }
    if (a.empty()) throw usage_error("partition: empty");
    std::int64_t n = static_cast<std::int64_t>(a.size());
    if (!partition_valid(a, n))
        throw usage_error("partition: entries must satisfy sum j*a_j = n with n = length");
    return a;
}

std::string partition_to_string(const Partition& a) {
    std::string s;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(a[j]);
    }
    return s;
}

}  // namespace pdld
