#pragma once

/**
 * @file numtheory.hpp
 * @brief Exact 64-bit integer primitives used by sequence generation.
 *
 * Everything here is a pure function. Products are formed in 128-bit
 * arithmetic, so results are exact over the full uint64_t range.
 */

#include <cstdint>
#include <string_view>
#include <vector>

namespace dseq {

/// Odd modulus q >= 3, the denominator of a d-sequence.
class Modulus {
public:
    /// Throws std::domain_error unless q is odd and q >= 3.
    explicit Modulus(std::uint64_t q);

    constexpr std::uint64_t value() const noexcept { return q_; }
    constexpr operator std::uint64_t() const noexcept { return q_; }

private:
    std::uint64_t q_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;

/// base^exp mod m. Throws std::domain_error for m < 2.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Trial-division factorization, ascending primes. factor(1) is empty.
std::vector<PrimePower> factor(std::uint64_t n);

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

enum class OrderMethod {
    factored,  ///< strip prime factors of phi(q) from the exponent
    naive,     ///< multiply until the residue returns to 1
};

/**
 * Smallest t >= 1 with r^t = 1 (mod q).
 *
 * Both methods return the same value; the naive one exists to cross-check.
 * Throws std::domain_error if q < 2 or gcd(r, q) != 1.
 */
std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q,
                                   OrderMethod method = OrderMethod::factored);

enum class SequenceClass { maximum_length, half_length, other };

struct Classification {
    SequenceClass cls;
    std::uint64_t order;
};

/// Label for a period of the expansion of 1/q (no primality requirement).
SequenceClass class_for_order(std::uint64_t q, std::uint64_t order) noexcept;

/// Classify (q, r) for prime q. Throws std::domain_error on composite q or gcd(r, q) != 1.
Classification classify(std::uint64_t q, std::uint64_t r);

/// "max", "half" or "other".
std::string_view to_string(SequenceClass cls) noexcept;

/// Odd integers in [3, limit), ascending.
std::vector<std::uint64_t> iterate_odds(std::uint64_t limit);

/// Primes in [3, limit), ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> iterate_primes(std::uint64_t limit);

}  // namespace dseq
