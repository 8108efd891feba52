#pragma once

/**
 * @file rational.hpp
 * @brief Exact conversion between periodic digit strings and reduced fractions.
 *
 * The repeating expansion 0.(d_0 d_1 ... d_{n-1}) in base r equals
 * D / (r^n - 1) with D = sum d_i r^{n-1-i}. Reducing that fraction gives
 * the generating d-sequence m/q; for example the PN sequence 0011101 is
 * 29/127.
 */

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dseq {

/// Reduced fraction in [0, 1).
class Rational {
public:
    /// Reduces num/den. Throws std::domain_error if den <= 0, num < 0 or num >= den.
    Rational(mpz_class num, mpz_class den);

    const mpz_class& num() const noexcept { return num_; }
    const mpz_class& den() const noexcept { return den_; }

    /// "num/den"
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    mpz_class num_;
    mpz_class den_;
};

/**
 * Value of the infinite repetition of digits in base r, reduced.
 *
 * Non-minimal periods collapse (010101 in base 2 is 1/3). Throws
 * std::domain_error on empty input, a digit >= r, r < 2, or when every
 * digit is r - 1 (that expansion aliases the terminating value 1).
 */
Rational sequence_to_rational(std::span<const std::uint64_t> digits, std::uint64_t r);

/**
 * One minimal period of x in base r; identical to generate(num, den, r).
 *
 * Throws std::domain_error when num == 0, gcd(den, r) != 1 or den does not
 * fit in 64 bits.
 */
std::vector<std::uint64_t> rational_to_sequence(const Rational& x, std::uint64_t r);

}  // namespace dseq
