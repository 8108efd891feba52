#include "dseq/rational.hpp"

#include "dseq/sequence.hpp"

#include <stdexcept>

namespace dseq {

namespace {

mpz_class from_u64(std::uint64_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

bool fits_u64(const mpz_class& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const mpz_class& v) {
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

// Positional value of digits in base r; `powers[j]` holds r^(2^j).
mpz_class fold(std::span<const std::uint64_t> digits, const std::vector<mpz_class>& powers,
               const mpz_class& r) {
    if (digits.size() <= 32) {
        mpz_class acc = 0;
        for (auto d : digits)
            acc = acc * r + from_u64(d);
        return acc;
    }
    // Split so the low part has a power-of-two length.
    std::size_t level = 0;
    while ((std::size_t{2} << level) < digits.size())
        ++level;
    const std::size_t low_len = std::size_t{1} << level;
    const auto high = digits.first(digits.size() - low_len);
    const auto low = digits.last(low_len);
    return fold(high, powers, r) * powers[level] + fold(low, powers, r);
}

}  // namespace

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) <= 0)
        throw std::domain_error("denominator must be positive");
    if (sgn(num_) < 0 || num_ >= den_)
        throw std::domain_error("rational must lie in [0, 1)");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ /= g;
    den_ /= g;
}

std::string Rational::to_string() const {
    return num_.get_str() + "/" + den_.get_str();
}

Rational sequence_to_rational(std::span<const std::uint64_t> digits, std::uint64_t r) {
    if (r < 2)
        throw std::domain_error("base must be at least 2");
    if (digits.empty())
        throw std::domain_error("digit sequence is empty");
    bool all_top = true;
    for (auto d : digits) {
        if (d >= r)
            throw std::domain_error("digit " + std::to_string(d) + " out of range for base " +
                                    std::to_string(r));
        all_top = all_top && d == r - 1;
    }
    if (all_top)
        throw std::domain_error("ambiguous expansion: every digit equals base - 1");

    const mpz_class base = from_u64(r);
    std::vector<mpz_class> powers{base};
    while ((std::size_t{1} << powers.size()) < digits.size())
        powers.push_back(powers.back() * powers.back());

    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), digits.size());
    den -= 1;
    return Rational(fold(digits, powers, base), std::move(den));
}

std::vector<std::uint64_t> rational_to_sequence(const Rational& x, std::uint64_t r) {
    if (sgn(x.num()) == 0)
        throw std::domain_error("numerator must be positive");
    if (!fits_u64(x.den()))
        throw std::domain_error("denominator exceeds 64 bits");
    const auto seq = generate(to_u64(x.num()), to_u64(x.den()), r);
    return {seq.digits().begin(), seq.digits().end()};
}

}  // namespace dseq
