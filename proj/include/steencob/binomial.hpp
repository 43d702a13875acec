#pragma once

#include <cstdint>

namespace steencob {

bool is_prime(std::int64_t p);

// If q = p^m for a prime p and m >= 1, returns p; otherwise returns 0.
std::int64_t prime_of_prime_power(std::int64_t q);

// C(n, k) mod p by Lucas's theorem. C(n, k) = 0 whenever n < 0, k < 0 or
// k > n. Throws InvalidArgument if p is not prime.
std::int64_t binom_mod_p(std::int64_t n, std::int64_t k, std::int64_t p);

// C(n, k) mod 2 under the same convention; uses the bit criterion k & ~n == 0.
constexpr bool binom_odd(std::int64_t n, std::int64_t k) noexcept
{
    if (n < 0 || k < 0 || k > n)
        return false;
    return (k & ~n) == 0;
}

}  // namespace steencob
