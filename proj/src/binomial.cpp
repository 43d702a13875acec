#include "steencob/binomial.hpp"

#include "steencob/error.hpp"

#include <string>

namespace steencob {

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t prime_of_prime_power(std::int64_t q)
{
    if (q < 2)
        return 0;
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0)
        ++p;
    if (q % p != 0)
        p = q;
    while (q % p == 0)
        q /= p;
    return q == 1 ? p : 0;
}

namespace {

// C(n, k) mod p for 0 <= k <= n < p, through the multiplicative formula and
// a modular inverse (Fermat).
std::int64_t small_binom(std::int64_t n, std::int64_t k, std::int64_t p)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t num = 1;
    std::int64_t den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    std::int64_t inv = 1;
    std::int64_t base = den;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            inv = inv * base % p;
        base = base * base % p;
    }
    return num * inv % p;
}

}  // namespace

std::int64_t binom_mod_p(std::int64_t n, std::int64_t k, std::int64_t p)
{
    if (!is_prime(p))
        throw InvalidArgument("binom_mod_p: modulus " + std::to_string(p) + " is not prime");
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (p == 2)
        return binom_odd(n, k) ? 1 : 0;
    std::int64_t result = 1;
    while (k > 0) {
        const std::int64_t nd = n % p;
        const std::int64_t kd = k % p;
        if (kd > nd)
            return 0;
        result = result * small_binom(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return result;
}

}  // namespace steencob
