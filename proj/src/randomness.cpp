#include "dseq/randomness.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace dseq {

std::string_view to_string(CorrelationMode mode) noexcept {
    return mode == CorrelationMode::circular ? "circular" : "aperiodic";
}

CorrelationMode parse_correlation_mode(std::string_view text) {
    if (text == "circular")
        return CorrelationMode::circular;
    if (text == "aperiodic")
        return CorrelationMode::aperiodic;
    throw std::invalid_argument("unknown correlation mode '" + std::string(text) + "'");
}

BipolarSequence::BipolarSequence(std::vector<std::int8_t> values) : values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::domain_error("bipolar sequence needs at least two entries");
    for (auto v : values_)
        if (v != 1 && v != -1)
            throw std::domain_error("bipolar entries must be +1 or -1");
}

BipolarSequence to_bipolar(std::span<const std::uint64_t> digits) {
    std::vector<std::int8_t> values;
    values.reserve(digits.size());
    for (auto d : digits) {
        if (d > 1)
            throw std::domain_error("bipolar mapping needs binary digits, got " + std::to_string(d));
        values.push_back(d ? 1 : -1);
    }
    return BipolarSequence(std::move(values));
}

AutocorrelationProfile::AutocorrelationProfile(CorrelationMode mode, std::size_t n,
                                               std::vector<std::int64_t> lag_sums)
    : mode_(mode), n_(n), sums_(std::move(lag_sums)) {
    if (n_ < 2 || sums_.size() != n_ - 1)
        throw std::invalid_argument("profile needs n >= 2 and n - 1 lag sums");
    c_.reserve(sums_.size());
    std::int64_t total = 0;
    for (auto s : sums_) {
        c_.push_back(static_cast<double>(s) / static_cast<double>(n_));
        total += s < 0 ? -s : s;
    }
    // Exact integer numerator keeps R identical across the naive and FFT paths.
    r_ = 1.0 - static_cast<double>(total) / (static_cast<double>(n_) * static_cast<double>(n_ - 1));
}

AutocorrelationProfile autocorrelation(const BipolarSequence& s, CorrelationMode mode) {
    const std::size_t n = s.size();
    const auto v = s.values();
    std::vector<std::int64_t> sums(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        std::int64_t acc = 0;
        if (mode == CorrelationMode::circular) {
            for (std::size_t j = 0; j + k < n; ++j)
                acc += v[j] * v[j + k];
            for (std::size_t j = n - k; j < n; ++j)
                acc += v[j] * v[j + k - n];
        } else {
            for (std::size_t j = 0; j + k < n; ++j)
                acc += v[j] * v[j + k];
        }
        sums[k - 1] = acc;
    }
    return AutocorrelationProfile(mode, n, std::move(sums));
}

namespace {

// The FFTW planner is not thread-safe; fftw_execute on distinct buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> fftw_alloc(std::size_t count) {
    auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * count));
    if (!p)
        throw std::bad_alloc();
    return FftwBuffer<T>(p);
}

class Plan {
public:
    explicit Plan(fftw_plan p) : p_(p) {
        if (!p_)
            throw std::runtime_error("FFTW failed to create a plan");
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
    ~Plan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(p_);
    }
    void execute() const { fftw_execute(p_); }

private:
    fftw_plan p_;
};

}  // namespace

AutocorrelationProfile autocorrelation_fft(const BipolarSequence& s, CorrelationMode mode) {
    const std::size_t n = s.size();
    const std::size_t len = mode == CorrelationMode::circular ? n : 2 * n;
    const std::size_t bins = len / 2 + 1;

    auto real = fftw_alloc<double>(len);
    auto spectrum = fftw_alloc<fftw_complex>(bins);

    std::unique_ptr<Plan> forward;
    std::unique_ptr<Plan> inverse;
    {
        std::lock_guard lock(planner_mutex());
        const int size = static_cast<int>(len);
        forward = std::make_unique<Plan>(
            fftw_plan_dft_r2c_1d(size, real.get(), spectrum.get(), FFTW_ESTIMATE));
        inverse = std::make_unique<Plan>(
            fftw_plan_dft_c2r_1d(size, spectrum.get(), real.get(), FFTW_ESTIMATE));
    }

    const auto v = s.values();
    for (std::size_t i = 0; i < n; ++i)
        real[i] = v[i];
    for (std::size_t i = n; i < len; ++i)
        real[i] = 0.0;

    forward->execute();
    for (std::size_t i = 0; i < bins; ++i) {
        const double re = spectrum[i][0];
        const double im = spectrum[i][1];
        spectrum[i][0] = re * re + im * im;
        spectrum[i][1] = 0.0;
    }
    inverse->execute();

    // The unnormalized inverse carries a factor len; lag sums are integers.
    const double scale = 1.0 / static_cast<double>(len);
    std::vector<std::int64_t> sums(n - 1);
    for (std::size_t k = 1; k < n; ++k)
        sums[k - 1] = std::llround(real[k] * scale);
    return AutocorrelationProfile(mode, n, std::move(sums));
}

double randomness(const BipolarSequence& s, CorrelationMode mode, CorrelationPath path) {
    const bool use_fft = path == CorrelationPath::fft ||
                         (path == CorrelationPath::automatic && s.size() >= fft_threshold);
    return use_fft ? autocorrelation_fft(s, mode).r_value() : autocorrelation(s, mode).r_value();
}

}  // namespace dseq
