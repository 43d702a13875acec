#include "steencob/partition.hpp"

#include "steencob/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace steencob {

int Partition::sum() const noexcept
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    return std::lexicographical_compare_three_way(b.parts.begin(), b.parts.end(), a.parts.begin(), a.parts.end());
}

Partition make_partition(std::vector<int> parts)
{
    for (int p : parts)
        if (p < 1)
            throw InvalidArgument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition{std::move(parts)};
}

std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int k = std::min(cap, remaining); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string to_string(const Partition& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts[i]);
    }
    return s + "]";
}

}  // namespace steencob
