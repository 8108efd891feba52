#include "dseq/sweep.hpp"

#include "dseq/sequence.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace dseq {

std::string_view to_string(SweepSet set) noexcept {
    switch (set) {
    case SweepSet::odd: return "odd";
    case SweepSet::prime: return "prime";
    case SweepSet::maxlen: return "maxlen";
    case SweepSet::halflen: return "halflen";
    }
    return "prime";
}

SweepSet parse_sweep_set(std::string_view text) {
    for (auto set : {SweepSet::odd, SweepSet::prime, SweepSet::maxlen, SweepSet::halflen})
        if (text == to_string(set))
            return set;
    throw std::invalid_argument("unknown sweep set '" + std::string(text) + "'");
}

std::vector<std::uint64_t> sweep_moduli(const SweepSpec& spec) {
    if (spec.limit < 3)
        throw std::domain_error("sweep limit must be at least 3");
    if (spec.base != 2)
        throw std::domain_error("randomness sweeps need base 2");

    std::vector<std::uint64_t> candidates =
        spec.set == SweepSet::odd ? iterate_odds(spec.limit) : iterate_primes(spec.limit);
    std::erase_if(candidates, [&](std::uint64_t q) {
        if (q < spec.start || std::gcd(q, spec.base) != 1)
            return true;
        // Half of a period-2 sequence is too short to correlate.
        if (spec.set == SweepSet::halflen && spec.half_variant == HalfVariant::truncated && q < 5)
            return true;
        switch (spec.set) {
        case SweepSet::odd:
        case SweepSet::prime:
            return false;
        case SweepSet::maxlen:
            return classify(q, spec.base).cls != SequenceClass::maximum_length;
        case SweepSet::halflen: {
            const auto wanted = spec.half_variant == HalfVariant::order
                                    ? SequenceClass::half_length
                                    : SequenceClass::maximum_length;
            return classify(q, spec.base).cls != wanted;
        }
        }
        return true;
    });
    return candidates;
}

SweepRecord measure_modulus(std::uint64_t q, std::uint64_t base, CorrelationMode mode,
                            CorrelationPath path) {
    const auto seq = generate(1, q, base);
    const auto period = seq.period();
    const double r = randomness(to_bipolar(seq.digits()), mode, path);
    return {q, base, period, class_for_order(q, period), r, mode};
}

namespace {

SweepRecord measure_truncated(std::uint64_t q, std::uint64_t base, CorrelationMode mode,
                              CorrelationPath path) {
    const auto seq = generate(1, q, base);
    const auto half = seq.digits().first(seq.period() / 2);
    const double r = randomness(to_bipolar(half), mode, path);
    return {q, base, half.size(), class_for_order(q, seq.period()), r, mode};
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, const SweepOptions& options) {
    const auto moduli = sweep_moduli(spec);
    const bool truncated = spec.set == SweepSet::halflen && spec.half_variant == HalfVariant::truncated;

    std::vector<SweepRecord> records(moduli.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < moduli.size(); i = next++) {
                records[i] = truncated ? measure_truncated(moduli[i], spec.base, spec.mode, options.path)
                                       : measure_modulus(moduli[i], spec.base, spec.mode, options.path);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = moduli.size();
        }
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return records;
}

bool is_mersenne_form(std::uint64_t q) noexcept {
    return q >= 3 && (q & (q + 1)) == 0;
}

std::vector<Minimum> find_minima(const std::vector<SweepRecord>& records) {
    std::vector<Minimum> out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        const bool local = i > 0 && i + 1 < records.size() &&
                           rec.r_value < records[i - 1].r_value &&
                           rec.r_value < records[i + 1].r_value;
        const bool mersenne = is_mersenne_form(rec.q);
        if (local || mersenne)
            out.push_back({rec.q, rec.r_value, local, mersenne});
    }
    return out;
}

SweepSummary summarize(const std::vector<SweepRecord>& records) {
    if (records.empty())
        throw std::domain_error("cannot summarize an empty sweep");
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& rec : records)
        values.push_back(rec.r_value);
    std::sort(values.begin(), values.end());

    const std::size_t n = values.size();
    const double sum = std::accumulate(values.begin(), values.end(), 0.0);
    const double median = n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
    const auto above = std::count_if(values.begin(), values.end(), [](double v) { return v > 0.9; });
    return {n,
            values.front(),
            values.back(),
            sum / static_cast<double>(n),
            median,
            static_cast<double>(above) / static_cast<double>(n)};
}

std::string format_r(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << csv_header << '\n';
    for (const auto& rec : records) {
        out << rec.q << ',' << rec.base << ',' << rec.period << ',' << to_string(rec.cls) << ','
            << format_r(rec.r_value) << ',' << to_string(rec.mode) << '\n';
    }
}

void write_plot_script(std::ostream& out, std::string_view csv_path, std::string_view title) {
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set title '" << title << "'\n"
        << "set xlabel 'q'\n"
        << "set ylabel 'R'\n"
        << "set yrange [0:1.05]\n"
        << "plot '" << csv_path << "' using 1:5 with points pointtype 7 pointsize 0.4 title 'R'\n";
}

}  // namespace dseq
