#include "dseq/cli.hpp"

#include "dseq/numtheory.hpp"
#include "dseq/randomness.hpp"
#include "dseq/rational.hpp"
#include "dseq/sequence.hpp"
#include "dseq/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace dseq::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view digit_chars = "0123456789abcdefghijklmnopqrstuvwxyz";

struct Options {
    std::uint64_t num = 1;
    std::uint64_t den = 0;
    std::uint64_t base = 2;
    std::optional<std::uint64_t> count;
    std::string digits;
    std::string format = "text";
    std::string mode = "circular";
    std::string path = "auto";
    std::string set;
    std::uint64_t limit = 0;
    std::uint64_t start = 3;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string out_path;
    std::string plot_path;
    std::string half_variant = "order";
};

CorrelationPath parse_path(const std::string& text) {
    if (text == "auto")
        return CorrelationPath::automatic;
    if (text == "naive")
        return CorrelationPath::naive;
    if (text == "fft")
        return CorrelationPath::fft;
    throw std::invalid_argument("unknown correlation path '" + text + "'");
}

double json_r(double r) {
    return std::stod(format_r(r));
}

int cmd_gen(const Options& o, std::ostream& out) {
    const auto seq = generate(o.num, o.den, o.base);
    std::vector<std::uint64_t> digits;
    if (o.count) {
        digits.reserve(*o.count);
        for (std::uint64_t i = 0; i < *o.count; ++i)
            digits.push_back(seq.digit(i));
    } else {
        digits.assign(seq.digits().begin(), seq.digits().end());
    }
    if (o.format == "json") {
        Json rec;
        rec["q"] = o.den;
        rec["num"] = o.num;
        rec["base"] = o.base;
        rec["period"] = seq.period();
        rec["digits"] = format_digits(digits, o.base);
        out << rec.dump() << '\n';
    } else {
        out << format_digits(digits, o.base) << '\n';
    }
    return exit_ok;
}

int cmd_measure(const Options& o, std::ostream& out) {
    const auto seq = generate(o.num, o.den, o.base);
    const auto mode = parse_correlation_mode(o.mode);
    const double r = randomness(to_bipolar(seq.digits()), mode, parse_path(o.path));
    const auto cls = class_for_order(o.den, seq.period());
    if (o.format == "json") {
        Json rec;
        rec["q"] = o.den;
        rec["base"] = o.base;
        rec["period"] = seq.period();
        rec["class"] = to_string(cls);
        rec["R"] = json_r(r);
        rec["mode"] = to_string(mode);
        rec["digits"] = format_digits({seq.digits().begin(), seq.digits().end()}, o.base);
        out << rec.dump() << '\n';
    } else {
        out << "q=" << o.den << " base=" << o.base << " period=" << seq.period()
            << " class=" << to_string(cls) << " R=" << format_r(r) << " mode=" << to_string(mode)
            << '\n';
    }
    return exit_ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const auto c = classify(o.den, o.base);
    if (o.format == "json") {
        Json rec;
        rec["q"] = o.den;
        rec["base"] = o.base;
        rec["class"] = to_string(c.cls);
        rec["order"] = c.order;
        out << rec.dump() << '\n';
    } else {
        out << "q=" << o.den << " base=" << o.base << " class=" << to_string(c.cls)
            << " order=" << c.order << '\n';
    }
    return exit_ok;
}

int cmd_convert(const Options& o, std::ostream& out) {
    out << sequence_to_rational(parse_digits(o.digits, o.base), o.base).to_string() << '\n';
    return exit_ok;
}

int cmd_unconvert(const Options& o, std::ostream& out) {
    const Rational x(o.num, o.den);
    if (x.den() != o.den)
        throw std::domain_error("fraction is not reduced: " + std::to_string(o.num) + "/" +
                                std::to_string(o.den) + " = " + x.to_string());
    out << format_digits(rational_to_sequence(x, o.base), o.base) << '\n';
    return exit_ok;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    SweepSpec spec;
    spec.set = parse_sweep_set(o.set);
    spec.limit = o.limit;
    spec.start = o.start;
    spec.base = o.base;
    spec.mode = parse_correlation_mode(o.mode);
    if (o.half_variant == "truncated")
        spec.half_variant = HalfVariant::truncated;
    else if (o.half_variant != "order")
        throw std::invalid_argument("unknown half variant '" + o.half_variant + "'");

    if (sweep_moduli(spec).empty())
        throw std::domain_error("no moduli in range [" + std::to_string(spec.start) + ", " +
                                std::to_string(spec.limit) + ")");

    const auto records = run_sweep(spec, {o.jobs, parse_path(o.path)});

    if (!o.plot_path.empty()) {
        std::ofstream plot(o.plot_path);
        if (!plot)
            throw std::runtime_error("cannot open " + o.plot_path);
        const std::string title = "R versus q (" + std::string(to_string(spec.set)) + ")";
        write_plot_script(plot, o.out_path.empty() ? "sweep.csv" : o.out_path, title);
    }

    if (o.out_path.empty()) {
        write_csv(out, records);
        return exit_ok;
    }

    std::ofstream csv(o.out_path, std::ios::binary);
    if (!csv)
        throw std::runtime_error("cannot open " + o.out_path);
    write_csv(csv, records);
    csv.close();
    if (!csv)
        throw std::runtime_error("failed writing " + o.out_path);

    const auto s = summarize(records);
    out << "wrote " << records.size() << " records to " << o.out_path << '\n';
    out << "count=" << s.count << " min=" << format_r(s.min) << " max=" << format_r(s.max)
        << " mean=" << format_r(s.mean) << " median=" << format_r(s.median)
        << " share_above_0.9=" << format_r(s.share_above_0_9) << '\n';

    auto minima = find_minima(records);
    const auto local = std::count_if(minima.begin(), minima.end(),
                                     [](const Minimum& m) { return m.local_minimum; });
    std::stable_sort(minima.begin(), minima.end(),
                     [](const Minimum& a, const Minimum& b) { return a.r_value < b.r_value; });
    constexpr std::size_t shown = 10;
    out << "minima: " << local << " local";
    for (std::size_t i = 0; i < minima.size(); ++i) {
        const auto& m = minima[i];
        if (i >= shown && !m.mersenne_form)
            continue;
        out << (i == 0 ? ": " : ", ") << m.q << " R=" << format_r(m.r_value);
        if (m.mersenne_form)
            out << " (2^k-1)";
        if (!m.local_minimum)
            out << " (not local)";
    }
    out << '\n';
    return exit_ok;
}

}  // namespace

std::string format_digits(const std::vector<std::uint64_t>& digits, std::uint64_t base) {
    std::string text;
    if (base <= digit_chars.size()) {
        text.reserve(digits.size());
        for (auto d : digits)
            text.push_back(digit_chars.at(d));
        return text;
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i)
            text.push_back(',');
        text += std::to_string(digits[i]);
    }
    return text;
}

std::vector<std::uint64_t> parse_digits(const std::string& text, std::uint64_t base) {
    std::vector<std::uint64_t> digits;
    if (base <= digit_chars.size()) {
        for (char c : text) {
            const char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
            const auto pos = digit_chars.find(lower);
            if (pos == std::string_view::npos || pos >= base)
                throw std::domain_error(std::string("invalid digit '") + c + "' for base " +
                                        std::to_string(base));
            digits.push_back(pos);
        }
        return digits;
    }
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const auto end = std::min(text.find(',', begin), text.size());
        std::uint64_t value = 0;
        const auto* first = text.data() + begin;
        const auto* last = text.data() + end;
        const auto res = std::from_chars(first, last, value);
        if (first == last || res.ec != std::errc{} || res.ptr != last)
            throw std::domain_error("invalid digit list '" + text + "'");
        digits.push_back(value);
        begin = end + 1;
    }
    return digits;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"d-sequence generation and randomness measurement", "dseq"};
    app.require_subcommand(1, 1);
    Options o;

    const auto base_check = CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max());
    const auto format_check = CLI::IsMember({"text", "json"});
    const auto mode_check = CLI::IsMember({"circular", "aperiodic"});
    const auto path_check = CLI::IsMember({"auto", "naive", "fft"});

    auto* gen = app.add_subcommand("gen", "print the digits of num/den");
    gen->add_option("--num", o.num, "numerator")->capture_default_str();
    gen->add_option("--den", o.den, "denominator")->required();
    gen->add_option("--base", o.base, "base")->check(base_check)->capture_default_str();
    gen->add_option("--count", o.count, "number of digits (default: one period)");
    gen->add_option("--format", o.format)->check(format_check)->capture_default_str();

    auto* measure = app.add_subcommand("measure", "period, class and R of the expansion of num/den");
    measure->add_option("--num", o.num, "numerator")->capture_default_str();
    measure->add_option("--den", o.den, "denominator")->required();
    measure->add_option("--base", o.base, "base")->check(base_check)->capture_default_str();
    measure->add_option("--mode", o.mode)->check(mode_check)->capture_default_str();
    measure->add_option("--path", o.path)->check(path_check)->capture_default_str();
    measure->add_option("--format", o.format)->check(format_check)->capture_default_str();

    auto* cls = app.add_subcommand("classify", "maximum-length / half-length classification of a prime");
    cls->add_option("--den", o.den, "prime denominator")->required();
    cls->add_option("--base", o.base, "base")->check(base_check)->capture_default_str();
    cls->add_option("--format", o.format)->check(format_check)->capture_default_str();

    auto* convert = app.add_subcommand("convert", "reduced fraction of a repeating digit string");
    convert->add_option("--digits", o.digits, "one period of digits")->required();
    convert->add_option("--base", o.base, "base")->check(base_check)->capture_default_str();

    auto* unconvert = app.add_subcommand("unconvert", "repeating digits of a reduced fraction");
    unconvert->add_option("--num", o.num, "numerator")->required();
    unconvert->add_option("--den", o.den, "denominator")->required();
    unconvert->add_option("--base", o.base, "base")->check(base_check)->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "R versus q over a family of moduli, as CSV");
    sweep->add_option("--set", o.set, "odd | prime | maxlen | halflen")
        ->required()
        ->check(CLI::IsMember({"odd", "prime", "maxlen", "halflen"}));
    sweep->add_option("--limit", o.limit, "exclusive upper bound")->required();
    sweep->add_option("--start", o.start, "inclusive lower bound")->capture_default_str();
    sweep->add_option("--base", o.base, "base")->check(base_check)->capture_default_str();
    sweep->add_option("--mode", o.mode)->check(mode_check)->capture_default_str();
    sweep->add_option("--path", o.path)->check(path_check)->capture_default_str();
    sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    sweep->add_option("--out", o.out_path, "CSV output file (default: stdout)");
    sweep->add_option("--plot", o.plot_path, "also write a gnuplot script");
    sweep->add_option("--half-variant", o.half_variant, "order | truncated")
        ->check(CLI::IsMember({"order", "truncated"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(o, out);
        if (measure->parsed())
            return cmd_measure(o, out);
        if (cls->parsed())
            return cmd_classify(o, out);
        if (convert->parsed())
            return cmd_convert(o, out);
        if (unconvert->parsed())
            return cmd_unconvert(o, out);
        return cmd_sweep(o, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace dseq::cli
