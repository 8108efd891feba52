#include "dseq/sequence.hpp"

#include "dseq/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dseq {

DSequence generate(std::uint64_t a, std::uint64_t q, std::uint64_t r) {
    if (r < 2)
        throw std::domain_error("base must be at least 2");
    if (q < 2)
        throw std::domain_error("denominator must be at least 2");
    if (a == 0 || a >= q)
        throw std::domain_error("numerator must satisfy 1 <= a < q");
    if (std::gcd(r, q) != 1)
        throw std::domain_error("base and denominator share a factor");
    if (std::gcd(a, q) != 1)
        throw std::domain_error("numerator and denominator share a factor");

    const std::uint64_t n = multiplicative_order(r, q);
    if (n > max_period)
        throw std::length_error("period " + std::to_string(n) + " exceeds the supported maximum");

    std::vector<std::uint64_t> digits;
    digits.reserve(n);
    std::uint64_t x = a;
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto rx = static_cast<unsigned __int128>(r) * x;
        digits.push_back(static_cast<std::uint64_t>(rx / q));
        x = static_cast<std::uint64_t>(rx % q);
    }
    return DSequence(a, q, r, std::move(digits));
}

unsigned generate_binary_direct(std::uint64_t q, std::uint64_t i) {
    return static_cast<unsigned>(mod_pow(2, i, q) & 1);
}

namespace {

std::size_t require_even_period(const DSequence& s) {
    if (s.period() % 2 != 0)
        throw std::domain_error("half-period checks need an even period, got " +
                                std::to_string(s.period()));
    return s.period() / 2;
}

void require_maximum_length(std::uint64_t q, std::uint64_t r) {
    if (classify(q, r).cls != SequenceClass::maximum_length)
        throw std::domain_error(std::to_string(q) + " is not maximum-length in base " +
                                std::to_string(r));
}

}  // namespace

bool check_complement(const DSequence& s) {
    if (s.base() != 2)
        throw std::domain_error("complement check is defined for base 2 only");
    const auto half = require_even_period(s);
    const auto d = s.digits();
    for (std::size_t i = 0; i < half; ++i)
        if (d[i + half] != 1 - d[i])
            return false;
    return true;
}

bool check_half_period_digit_sum(const DSequence& s) {
    const auto half = require_even_period(s);
    const auto d = s.digits();
    for (std::size_t i = 0; i < half; ++i)
        if (d[i] + d[i + half] != s.base() - 1)
            return false;
    return true;
}

std::ptrdiff_t find_rotation(std::span<const std::uint64_t> haystack,
                             std::span<const std::uint64_t> needle) {
    const std::size_t n = needle.size();
    if (n != haystack.size())
        return -1;
    if (n == 0)
        return 0;

    // Knuth-Morris-Pratt over the doubled haystack.
    std::vector<std::size_t> fail(n, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && needle[i] != needle[k])
            k = fail[k - 1];
        if (needle[i] == needle[k])
            ++k;
        fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < 2 * n - 1; ++i) {
        const auto c = haystack[i % n];
        while (k > 0 && c != needle[k])
            k = fail[k - 1];
        if (c == needle[k])
            ++k;
        if (k == n)
            return static_cast<std::ptrdiff_t>(i + 1 - n);
    }
    return -1;
}

bool check_cyclic_shift(std::uint64_t a, std::uint64_t q, std::uint64_t r) {
    require_maximum_length(q, r);
    const auto base_seq = generate(1, q, r);
    const auto shifted = generate(a, q, r);
    return find_rotation(base_seq.digits(), shifted.digits()) >= 0;
}

bool check_digit_permutation(std::uint64_t a, std::uint64_t q, std::uint64_t r) {
    require_maximum_length(q, r);
    return digit_coverage(generate(1, q, r)) == digit_coverage(generate(a, q, r));
}

std::vector<std::size_t> digit_coverage(const DSequence& s) {
    if (s.base() > max_period)
        throw std::length_error("base too large for a dense histogram");
    std::vector<std::size_t> counts(s.base(), 0);
    for (auto d : s.digits())
        ++counts[d];
    return counts;
}

}  // namespace dseq
