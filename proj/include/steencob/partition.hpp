#pragma once

#include <compare>
#include <string>
#include <vector>

namespace steencob {

// Parts in descending order. Ordering on partitions is the canonical
// descending-lexicographic one: [4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1].
struct Partition {
    std::vector<int> parts;

    int sum() const noexcept;
    bool operator==(const Partition&) const = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
};

// Sorts parts into descending order; throws InvalidArgument on a part < 1.
Partition make_partition(std::vector<int> parts);

// All partitions of n in canonical order; [[]] for n = 0.
std::vector<Partition> partitions(int n);

// 2^s - 1 for some s >= 1: 1, 3, 7, 15, ...
constexpr bool is_dyadic_part(int k) noexcept
{
    return k >= 1 && ((k + 1) & k) == 0;
}

std::string to_string(const Partition& p);

}  // namespace steencob
