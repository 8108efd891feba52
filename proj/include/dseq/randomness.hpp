#pragma once

/**
 * @file randomness.hpp
 * @brief Autocorrelation profiles and the randomness measure R.
 *
 * Sequences are correlated in bipolar form (0 -> -1, 1 -> +1). For a
 * period n the lag-k correlation is C(k) = S(k) / n where S(k) is the
 * integer sum of products s_j * s_{j+k}, and
 *
 *     R = 1 - (sum_{k=1}^{n-1} |C(k)|) / (n - 1).
 *
 * Circular mode wraps j + k modulo n and gives R = 0 for a constant
 * sequence. Aperiodic mode drops the wrapped terms (still normalized by n)
 * and gives R = 1/2 for a constant sequence.
 */

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace dseq {

enum class CorrelationMode { circular, aperiodic };

std::string_view to_string(CorrelationMode mode) noexcept;

/// Parses "circular" / "aperiodic"; throws std::invalid_argument otherwise.
CorrelationMode parse_correlation_mode(std::string_view text);

class BipolarSequence {
public:
    /// Entries must be +1 or -1 and there must be at least two of them.
    explicit BipolarSequence(std::vector<std::int8_t> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const std::int8_t> values() const noexcept { return values_; }
    std::int8_t operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<std::int8_t> values_;
};

/// 0 -> -1, 1 -> +1. Throws std::domain_error on other digits or fewer than two.
BipolarSequence to_bipolar(std::span<const std::uint64_t> digits);

class AutocorrelationProfile {
public:
    AutocorrelationProfile(CorrelationMode mode, std::size_t n, std::vector<std::int64_t> lag_sums);

    CorrelationMode mode() const noexcept { return mode_; }
    std::size_t period() const noexcept { return n_; }

    /// C(1) .. C(n-1); index 0 holds lag 1.
    std::span<const double> values() const noexcept { return c_; }
    double at_lag(std::size_t k) const { return c_.at(k - 1); }

    /// Integer sums S(1) .. S(n-1).
    std::span<const std::int64_t> lag_sums() const noexcept { return sums_; }

    double r_value() const noexcept { return r_; }

private:
    CorrelationMode mode_;
    std::size_t n_;
    std::vector<std::int64_t> sums_;
    std::vector<double> c_;
    double r_;
};

/// Direct O(n^2) evaluation.
AutocorrelationProfile autocorrelation(const BipolarSequence& s,
                                       CorrelationMode mode = CorrelationMode::circular);

/// Power-spectrum route: transform, squared magnitude, inverse transform, 1/n.
/// Reentrant. Aperiodic mode zero-pads to at least 2n - 1.
AutocorrelationProfile autocorrelation_fft(const BipolarSequence& s,
                                           CorrelationMode mode = CorrelationMode::circular);

enum class CorrelationPath { automatic, naive, fft };

/// Period at which CorrelationPath::automatic switches to the FFT route.
inline constexpr std::size_t fft_threshold = 2048;

double randomness(const BipolarSequence& s, CorrelationMode mode = CorrelationMode::circular,
                  CorrelationPath path = CorrelationPath::automatic);

}  // namespace dseq
