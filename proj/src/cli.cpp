#include "decisum/cli.hpp"

#include "decisum/bench.hpp"
#include "decisum/decode.hpp"
#include "decisum/enumerator.hpp"
#include "decisum/errors.hpp"
#include "decisum/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>

namespace decisum::cli {
namespace {

enum class Format { Table, Csv, Json };

const std::map<std::string, Format> kFormats{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, Direction> kDirections{{"min", Direction::Min}, {"max", Direction::Max}};
const std::map<std::string, Checksum> kChecksums{
    {"none", Checksum::None}, {"parity", Checksum::ParityEven}, {"crc8", Checksum::Crc8}};
const std::map<std::string, bench::Spacing> kSpacings{{"log", bench::Spacing::Log},
                                                      {"linear", bench::Spacing::Linear}};

/// Either the caller's stream or a file opened for the duration of a command.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw ParseError("cannot open " + path + " for writing");
            }
            stream_ = file_.get();
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

struct TopkOptions {
    std::string input;
    std::uint64_t k = 0;
    Direction direction = Direction::Min;
    Format format = Format::Table;
    std::string output = "-";
};

struct DecodeOptions {
    std::string input;
    Checksum checksum = Checksum::None;
    std::uint64_t max_candidates = 1000000;
    Format format = Format::Table;
    std::string output = "-";
};

struct BenchOptions {
    std::vector<std::size_t> n{15, 100, 1000};
    std::uint64_t k_max = 100000;
    std::size_t samples = 50;
    std::size_t trials = 3;
    std::size_t repeats = 3;
    std::uint64_t seed = 42;
    bench::Spacing spacing = bench::Spacing::Log;
    bool fit = false;
    std::string output = "-";
};

void run_topk(const TopkOptions& opt, std::ostream& out) {
    const PairList pairs = io::read_pairs(opt.input);
    auto instance = std::make_shared<const ProblemInstance>(ProblemInstance::normalize(pairs, opt.direction));
    Enumerator it(instance);
    OutputTarget target(opt.output, out);
    std::ostream& os = target.get();

    nlohmann::json results = nlohmann::json::array();
    if (opt.format == Format::Table) {
        os << "rank, sum, selection\n";
    } else if (opt.format == Format::Csv) {
        os << "rank,sum,selection\n";
    }
    for (std::uint64_t i = 0; i < opt.k; ++i) {
        auto next = it.next_ranked();
        if (!next) {
            break;
        }
        const std::string bits = io::bit_string(next->selection);
        switch (opt.format) {
        case Format::Table:
            os << next->rank << ", " << io::format_short(next->sum) << ", " << bits << '\n';
            break;
        case Format::Csv:
            os << next->rank << ',' << io::format_exact(next->sum) << ',' << bits << '\n';
            break;
        case Format::Json:
            results.push_back({{"rank", next->rank}, {"sum", next->sum}, {"selection", bits}});
            break;
        }
    }
    if (opt.format == Format::Json) {
        os << nlohmann::json{{"results", results}}.dump(2) << '\n';
    }
}

int run_decode(const DecodeOptions& opt, std::ostream& out) {
    const ConfidenceSequence confidences = io::read_pairs(opt.input);
    validate_pairs(confidences);
    const DecodeResult result = decode(confidences, opt.checksum, opt.max_candidates);

    OutputTarget target(opt.output, out);
    std::ostream& os = target.get();
    const std::string status = result.found ? "found" : "not-found";
    const std::string bits = io::bit_string(result.bits);
    switch (opt.format) {
    case Format::Table:
        os << "status: " << status << '\n';
        if (result.found) {
            os << "rank: " << result.rank << '\n'
               << "bits: " << bits << '\n'
               << "confidence: " << io::format_short(result.confidence) << '\n';
        }
        os << "tested: " << result.tested << '\n';
        break;
    case Format::Csv:
        os << "status,rank,bits,confidence,tested\n"
           << status << ',' << result.rank << ',' << bits << ','
           << (result.found ? io::format_exact(result.confidence) : std::string{}) << ',' << result.tested << '\n';
        break;
    case Format::Json: {
        nlohmann::json doc{{"status", status}, {"tested", result.tested}};
        if (result.found) {
            doc["rank"] = result.rank;
            doc["bits"] = bits;
            doc["confidence"] = result.confidence;
        }
        os << doc.dump(2) << '\n';
        break;
    }
    }
    return result.found ? kSuccess : kNotFound;
}

void run_bench_cmd(const BenchOptions& opt, std::ostream& out) {
    bench::BenchConfig config;
    config.n_values = opt.n;
    config.k_max = opt.k_max;
    config.k_samples = opt.samples;
    config.trials = opt.trials;
    config.timing_repeats = opt.repeats;
    config.seed = opt.seed;
    config.spacing = opt.spacing;
    const auto records = bench::run_bench(config);

    {
        OutputTarget target(opt.output, out);
        std::ostream& os = target.get();
        os << "n,k,pending_size,elapsed_s,trial,seed\n";
        for (const auto& r : records) {
            os << r.n << ',' << r.k << ',' << r.pending_size << ',' << io::format_exact(r.elapsed_s) << ','
               << r.trial << ',' << r.seed << '\n';
        }
    }

    if (opt.fit) {
        out << "\nn,c2,c1,c0,r_squared\n";
        for (std::size_t n : opt.n) {
            std::vector<bench::BenchRecord> subset;
            for (const auto& r : records) {
                if (r.n == n) {
                    subset.push_back(r);
                }
            }
            const auto fit = bench::fit_quadratic(subset);
            out << n << ',' << io::format_exact(fit.c2) << ',' << io::format_exact(fit.c1) << ','
                << io::format_exact(fit.c0) << ',' << io::format_exact(fit.r_squared) << '\n';
        }
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank the choice combinations of number pairs by their sums"};
    app.require_subcommand(1);

    TopkOptions topk;
    auto* topk_cmd = app.add_subcommand("topk", "List the K smallest or largest sums");
    topk_cmd->add_option("--input", topk.input, "CSV or JSON pair file, - for stdin")->required();
    topk_cmd->add_option("--k", topk.k, "Number of combinations")->required()->check(CLI::PositiveNumber);
    topk_cmd->add_option("--direction", topk.direction)->transform(CLI::CheckedTransformer(kDirections));
    topk_cmd->add_option("--format", topk.format)->transform(CLI::CheckedTransformer(kFormats));
    topk_cmd->add_option("--output", topk.output, "Output path, - for stdout");

    DecodeOptions dec;
    auto* decode_cmd = app.add_subcommand("decode", "Recover a checksum-valid bit string from confidences");
    decode_cmd->add_option("--input", dec.input, "CSV of conf0,conf1 per bit")->required();
    decode_cmd->add_option("--checksum", dec.checksum)->transform(CLI::CheckedTransformer(kChecksums));
    decode_cmd->add_option("--max-candidates", dec.max_candidates)->check(CLI::PositiveNumber);
    decode_cmd->add_option("--format", dec.format)->transform(CLI::CheckedTransformer(kFormats));
    decode_cmd->add_option("--output", dec.output);

    BenchOptions bo;
    auto* bench_cmd = app.add_subcommand("bench", "Measure pending-set size and process time against K");
    bench_cmd->add_option("--n", bo.n, "Comma separated pair counts")->delimiter(',');
    bench_cmd->add_option("--k-max", bo.k_max);
    bench_cmd->add_option("--samples", bo.samples);
    bench_cmd->add_option("--trials", bo.trials);
    bench_cmd->add_option("--repeats", bo.repeats, "Timed runs per trial; the fastest time is kept");
    bench_cmd->add_option("--seed", bo.seed);
    bench_cmd->add_option("--spacing", bo.spacing)->transform(CLI::CheckedTransformer(kSpacings));
    bench_cmd->add_flag("--fit", bo.fit, "Append quadratic fit summary to stdout");
    bench_cmd->add_option("--output", bo.output, "CSV path, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = e.get_exit_code();
        if (code == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*topk_cmd) {
            run_topk(topk, out);
            return kSuccess;
        }
        if (*decode_cmd) {
            return run_decode(dec, out);
        }
        run_bench_cmd(bo, out);
        return kSuccess;
    } catch (const NonFiniteInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidNumeric;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace decisum::cli
