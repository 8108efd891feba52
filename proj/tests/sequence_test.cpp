#include "dseq/sequence.hpp"

#include "dseq/numtheory.hpp"
#include "dseq/rational.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <stdexcept>

using namespace dseq;

namespace {

std::vector<std::uint64_t> digits_of(const DSequence& s) {
    return {s.digits().begin(), s.digits().end()};
}

using Digits = std::vector<std::uint64_t>;

}  // namespace

TEST(Generate, Examples) {
    auto s = generate(1, 7, 10);
    EXPECT_EQ(digits_of(s), (Digits{1, 4, 2, 8, 5, 7}));
    EXPECT_EQ(s.period(), 6u);
    EXPECT_EQ(digits_of(generate(1, 3, 2)), (Digits{0, 1}));
    EXPECT_EQ(digits_of(generate(1, 11, 2)), (Digits{0, 0, 0, 1, 0, 1, 1, 1, 0, 1}));
    EXPECT_EQ(digits_of(generate(1, 31, 2)), (Digits{0, 0, 0, 0, 1}));
    EXPECT_EQ(digits_of(generate(1, 9, 2)), (Digits{0, 0, 0, 1, 1, 1}));
}

TEST(Generate, Accessors) {
    const auto s = generate(3, 7, 10);
    EXPECT_EQ(s.numerator(), 3u);
    EXPECT_EQ(s.denominator(), 7u);
    EXPECT_EQ(s.base(), 10u);
    EXPECT_EQ(s.digit(0), 4u);
    EXPECT_EQ(s.digit(6), 4u);
    EXPECT_EQ(s.digit(13), 2u);
}

TEST(Generate, Errors) {
    EXPECT_THROW(generate(1, 6, 2), std::domain_error);   // gcd(r, q) = 2
    EXPECT_THROW(generate(7, 7, 10), std::domain_error);  // a >= q
    EXPECT_THROW(generate(8, 7, 10), std::domain_error);
    EXPECT_THROW(generate(0, 7, 10), std::domain_error);
    EXPECT_THROW(generate(3, 9, 2), std::domain_error);   // gcd(a, q) = 3
    EXPECT_THROW(generate(1, 7, 1), std::domain_error);
    EXPECT_THROW(generate(1, 1, 2), std::domain_error);
}

TEST(Generate, HugePeriodIsACapacityError) {
    // ord_2(p) = (p - 1) / 2, about 5e11.
    const std::uint64_t p = 1'000'000'000'039ull;
    ASSERT_TRUE(is_prime(p));
    EXPECT_THROW(generate(1, p, 2), std::length_error);
}

TEST(Generate, LargeBaseUsesWideProducts) {
    const std::uint64_t r = (std::uint64_t{1} << 62) + 1;
    const auto s = generate(1, 7, r);
    EXPECT_EQ(s.period(), multiplicative_order(r, 7));
    for (auto d : s.digits())
        EXPECT_LT(d, r);
}

TEST(Generate, PeriodEqualsOrderAndIsPurelyPeriodic) {
    for (std::uint64_t q = 3; q < 600; q += 2) {
        const auto s = generate(1, q, 2);
        ASSERT_EQ(s.period(), multiplicative_order(2, q));
        for (auto d : s.digits())
            ASSERT_LT(d, 2u);
    }
}

TEST(Generate, Deterministic) {
    EXPECT_EQ(digits_of(generate(5, 1009, 2)), digits_of(generate(5, 1009, 2)));
}

TEST(GenerateBinaryDirect, Examples) {
    EXPECT_EQ(generate_binary_direct(11, 4), 1u);
    EXPECT_EQ(generate_binary_direct(11, 1), 0u);
    EXPECT_EQ(generate_binary_direct(7, 3), 1u);
}

TEST(GenerateBinaryDirect, MatchesLongDivisionForAllOddQBelow2000) {
    for (std::uint64_t q = 3; q < 2000; q += 2) {
        const auto s = generate(1, q, 2);
        for (std::uint64_t i = 1; i <= s.period(); ++i)
            ASSERT_EQ(generate_binary_direct(q, i), s.digits()[i - 1]) << "q=" << q << " i=" << i;
    }
}

TEST(CheckComplement, Examples) {
    EXPECT_TRUE(check_complement(generate(1, 11, 2)));
    EXPECT_THROW(check_complement(generate(1, 7, 2)), std::domain_error);
    EXPECT_TRUE(check_complement(generate(1, 3, 2)));
    EXPECT_THROW(check_complement(generate(1, 7, 10)), std::domain_error);
    // Any prime with even order has 2^(n/2) = -1 and so complements; 15 = 3 * 5 does not.
    EXPECT_TRUE(check_complement(generate(1, 41, 2)));
    EXPECT_FALSE(check_complement(generate(1, 15, 2)));  // 0001
}

TEST(CheckHalfPeriodDigitSum, Examples) {
    EXPECT_TRUE(check_half_period_digit_sum(generate(1, 7, 10)));
    EXPECT_TRUE(check_half_period_digit_sum(generate(1, 11, 2)));
    const auto s13 = generate(1, 13, 10);
    EXPECT_EQ(digits_of(s13), (Digits{0, 7, 6, 9, 2, 3}));
    EXPECT_TRUE(check_half_period_digit_sum(s13));
    EXPECT_THROW(check_half_period_digit_sum(generate(1, 31, 2)), std::domain_error);
}

TEST(CheckCyclicShift, Examples) {
    EXPECT_TRUE(check_cyclic_shift(3, 7, 10));
    EXPECT_TRUE(check_cyclic_shift(1, 7, 10));
    EXPECT_TRUE(check_cyclic_shift(5, 11, 2));
    EXPECT_THROW(check_cyclic_shift(1, 7, 2), std::domain_error);     // half-length
    EXPECT_THROW(check_cyclic_shift(1, 8191, 2), std::domain_error);  // other
    EXPECT_THROW(check_cyclic_shift(1, 9, 2), std::domain_error);     // composite
}

TEST(FindRotation, Offsets) {
    const Digits base{1, 4, 2, 8, 5, 7};
    EXPECT_EQ(find_rotation(base, Digits{4, 2, 8, 5, 7, 1}), 1);
    EXPECT_EQ(find_rotation(base, Digits{2, 8, 5, 7, 1, 4}), 2);
    EXPECT_EQ(find_rotation(base, Digits{1, 4, 2, 8, 7, 5}), -1);
    EXPECT_EQ(find_rotation(base, Digits{1, 4, 2}), -1);
    // 3/7: 3 = 10 mod 7, so 428571 is 142857 shifted by one.
    EXPECT_EQ(find_rotation(generate(1, 7, 10).digits(), generate(3, 7, 10).digits()), 1);
    // 2/7: 2 = 10^2 mod 7.
    EXPECT_EQ(find_rotation(generate(1, 7, 10).digits(), generate(2, 7, 10).digits()), 2);
}

TEST(DigitCoverage, Examples) {
    EXPECT_EQ(digit_coverage(generate(1, 7, 10)), (std::vector<std::size_t>{0, 1, 1, 0, 1, 1, 0, 1, 1, 0}));
    EXPECT_EQ(digit_coverage(generate(1, 11, 2)), (std::vector<std::size_t>{5, 5}));
    EXPECT_EQ(digit_coverage(generate(1, 31, 2)), (std::vector<std::size_t>{4, 1}));
}

TEST(StructuralProperties, MaximumLengthBinaryPrimesBelow5000) {
    int checked = 0;
    for (auto q : iterate_primes(5000)) {
        if (classify(q, 2).cls != SequenceClass::maximum_length)
            continue;
        const auto s = generate(1, q, 2);
        ASSERT_TRUE(check_complement(s)) << q;
        ASSERT_EQ(digit_coverage(s)[1], (q - 1) / 2) << q;
        ++checked;
    }
    EXPECT_GT(checked, 200);
}

TEST(StructuralProperties, RandomNumeratorsBase2And10BelowOneThousand) {
    std::mt19937_64 rng(7);
    for (std::uint64_t r : {2u, 10u}) {
        for (auto q : iterate_primes(1000)) {
            if (std::gcd(q, r) != 1 || classify(q, r).cls != SequenceClass::maximum_length)
                continue;
            std::uniform_int_distribution<std::uint64_t> pick(1, q - 1);
            for (int i = 0; i < 20; ++i) {
                const auto a = pick(rng);
                const auto s = generate(a, q, r);
                ASSERT_TRUE(check_half_period_digit_sum(s)) << a << "/" << q << " base " << r;
                ASSERT_TRUE(check_cyclic_shift(a, q, r)) << a << "/" << q << " base " << r;
                ASSERT_TRUE(check_digit_permutation(a, q, r)) << a << "/" << q << " base " << r;
            }
        }
    }
}

TEST(Generate, RoundTripsThroughRational) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t q = 2 * (rng() % 2500) + 3;
        std::uint64_t a = 1 + rng() % (q - 1);
        if (std::gcd(a, q) != 1)
            continue;
        const auto s = generate(a, q, 2);
        const auto x = sequence_to_rational(s.digits(), 2);
        ASSERT_EQ(x, Rational(a, q));
    }
}
