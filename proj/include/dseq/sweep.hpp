#pragma once

/**
 * @file sweep.hpp
 * @brief R-versus-q sweeps over families of moduli, CSV output, minima.
 *
 * Each qualifying q contributes the randomness of the binary expansion of
 * 1/q. Work is spread over worker threads; records always come back in
 * ascending q so output does not depend on the worker count.
 */

#include "dseq/numtheory.hpp"
#include "dseq/randomness.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dseq {

enum class SweepSet { odd, prime, maxlen, halflen };

std::string_view to_string(SweepSet set) noexcept;
SweepSet parse_sweep_set(std::string_view text);

/// How the halflen set is measured.
enum class HalfVariant {
    order,      ///< primes with ord_2(q) = (q-1)/2, full period
    truncated,  ///< maximum-length primes, first half of the period only
};

struct SweepSpec {
    SweepSet set = SweepSet::prime;
    std::uint64_t limit = 0;  ///< exclusive
    std::uint64_t start = 3;  ///< inclusive
    std::uint64_t base = 2;
    CorrelationMode mode = CorrelationMode::circular;
    HalfVariant half_variant = HalfVariant::order;
};

struct SweepOptions {
    unsigned jobs = 1;
    CorrelationPath path = CorrelationPath::automatic;
};

struct SweepRecord {
    std::uint64_t q;
    std::uint64_t base;
    std::uint64_t period;
    SequenceClass cls;
    double r_value;
    CorrelationMode mode;
};

/// Moduli the spec selects, ascending. Throws std::domain_error on an invalid spec.
std::vector<std::uint64_t> sweep_moduli(const SweepSpec& spec);

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

/// Record for a single modulus (numerator 1).
SweepRecord measure_modulus(std::uint64_t q, std::uint64_t base, CorrelationMode mode,
                            CorrelationPath path = CorrelationPath::automatic);

struct Minimum {
    std::uint64_t q;
    double r_value;
    bool local_minimum;  ///< strictly below both neighbours
    bool mersenne_form;  ///< q = 2^k - 1
};

bool is_mersenne_form(std::uint64_t q) noexcept;

/// Local minima, plus every Mersenne-form q, in sweep order.
std::vector<Minimum> find_minima(const std::vector<SweepRecord>& records);

struct SweepSummary {
    std::size_t count;
    double min;
    double max;
    double mean;
    double median;
    double share_above_0_9;
};

/// Throws std::domain_error on an empty record set.
SweepSummary summarize(const std::vector<SweepRecord>& records);

/// Shortest round-trip-safe text with 12 significant digits, locale-independent.
std::string format_r(double value);

inline constexpr std::string_view csv_header = "q,base,period,class,R,mode";

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

/// gnuplot script plotting column R against q from csv_path.
void write_plot_script(std::ostream& out, std::string_view csv_path, std::string_view title);

}  // namespace dseq
