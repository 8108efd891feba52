#pragma once

/**
 * @file sequence.hpp
 * @brief d-sequences: one period of the base-r expansion of a/q.
 *
 * Digits come from the long-division remainder recurrence
 *
 *     x_0 = a,  digit_i = floor(r * x_i / q),  x_{i+1} = r * x_i mod q
 *
 * and the stored array is 0-based: digits()[j] is the (j+1)-th digit after
 * the radix point.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dseq {

/// Largest period generate() will materialize.
inline constexpr std::uint64_t max_period = std::uint64_t{1} << 26;

class DSequence {
public:
    std::uint64_t numerator() const noexcept { return a_; }
    std::uint64_t denominator() const noexcept { return q_; }
    std::uint64_t base() const noexcept { return r_; }
    std::size_t period() const noexcept { return digits_.size(); }
    std::span<const std::uint64_t> digits() const noexcept { return digits_; }

    /// Digit at any index of the infinite periodic expansion.
    std::uint64_t digit(std::uint64_t i) const noexcept { return digits_[i % digits_.size()]; }

    friend DSequence generate(std::uint64_t a, std::uint64_t q, std::uint64_t r);

private:
    DSequence(std::uint64_t a, std::uint64_t q, std::uint64_t r, std::vector<std::uint64_t> digits)
        : a_(a), q_(q), r_(r), digits_(std::move(digits)) {}

    std::uint64_t a_;
    std::uint64_t q_;
    std::uint64_t r_;
    std::vector<std::uint64_t> digits_;
};

/**
 * One full period of a/q in base r.
 *
 * Throws std::domain_error when r < 2, q < 2, a == 0, a >= q, gcd(r, q) != 1
 * or gcd(a, q) != 1, and std::length_error when the period exceeds max_period.
 */
DSequence generate(std::uint64_t a, std::uint64_t q, std::uint64_t r);

/// (2^i mod q) mod 2, the i-th binary digit of 1/q (i >= 1).
unsigned generate_binary_direct(std::uint64_t q, std::uint64_t i);

/// Binary, even period: second half is the bitwise complement of the first.
bool check_complement(const DSequence& s);

/// Even period: digit_i + digit_{i+n/2} == r - 1 for every i in the first half.
bool check_half_period_digit_sum(const DSequence& s);

/// True iff the digits of a/q are a cyclic rotation of the digits of 1/q.
/// Requires (q, r) to be maximum-length; throws std::domain_error otherwise.
bool check_cyclic_shift(std::uint64_t a, std::uint64_t q, std::uint64_t r);

/// Multiset form of the above: same digit counts as 1/q.
bool check_digit_permutation(std::uint64_t a, std::uint64_t q, std::uint64_t r);

/// counts[d] = occurrences of digit d in one period; size is the base.
std::vector<std::size_t> digit_coverage(const DSequence& s);

/// Index of the first occurrence of needle as a cyclic rotation of haystack, or -1.
std::ptrdiff_t find_rotation(std::span<const std::uint64_t> haystack,
                             std::span<const std::uint64_t> needle);

}  // namespace dseq
