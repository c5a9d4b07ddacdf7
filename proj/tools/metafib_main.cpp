#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "metafib/construction.hpp"
#include "metafib/serialization.hpp"
#include "metafib/verify.hpp"

// Exit codes: 0 success, 1 internal failure, 2 invalid input, 3 the sequence
// died, 4 verification mismatch. Shell pipelines can tell mathematical
// failure from usage errors.
namespace {

using metafib::Construction;
using metafib::Index;
using metafib::Int;
using metafib::json;
using metafib::SequenceFormat;

constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDeath = 3;
constexpr int kExitMismatch = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  out << text;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(what + " is not valid JSON: " + e.what());
  }
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Int> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t first = token.find_first_not_of(" \t");
    std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument(what + " contains an empty entry: \"" + text + "\"");
    }
    try {
      values.emplace_back(token.substr(first, last - first + 1), 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(what + " entry is not an integer: \"" + token + "\"");
    }
  }
  if (values.empty()) throw std::invalid_argument(what + " must not be empty");
  return values;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string render_sequence(SequenceFormat format, Index n0, std::span<const Int> values) {
  std::ostringstream out;
  metafib::write_sequence(out, format, n0, values);
  return out.str();
}

struct ConstructOptions {
  std::string input_path;
  std::string coeffs;
  std::string initial;
  Index k = -1;
  Index h = -1;
  std::string output;
  Index terms = -1;
  std::string format = "bfile";
  std::string seq_output;
};

int run_construct(const ConstructOptions& opt) {
  const bool inline_given = !opt.coeffs.empty() || !opt.initial.empty() || opt.k >= 0;
  if (!opt.input_path.empty() && inline_given) {
    throw std::invalid_argument("give either an input file or --coeffs/--initial, not both");
  }
  std::optional<metafib::LinearRecurrence> rec;
  if (!opt.input_path.empty()) {
    rec = metafib::linear_recurrence_from_json(
        parse_json(read_input(opt.input_path), "input recurrence"));
  } else if (!opt.coeffs.empty() && !opt.initial.empty()) {
    std::vector<Int> coeffs = parse_int_list(opt.coeffs, "--coeffs");
    std::vector<Int> initial = parse_int_list(opt.initial, "--initial");
    if (opt.k >= 0 && opt.k != static_cast<Index>(coeffs.size())) {
      throw std::invalid_argument("length(coeffs) = " + std::to_string(coeffs.size()) +
                                  " does not match k = " + std::to_string(opt.k));
    }
    rec.emplace(std::move(coeffs), std::move(initial));
  } else if (!opt.coeffs.empty() || !opt.initial.empty()) {
    throw std::invalid_argument("--coeffs and --initial must be given together");
  } else {
    throw std::invalid_argument(
        "an input recurrence is required: a JSON file or --coeffs together with --initial");
  }

  Construction c = opt.h >= 0 ? metafib::build(*rec, opt.h) : metafib::build(*rec);
  write_output(opt.output, render_json(metafib::to_json(c)));
  if (opt.terms >= 0) {
    const SequenceFormat format = metafib::sequence_format_from_name(opt.format);
    std::vector<Int> q = metafib::interleaved_prefix(c, opt.terms);
    write_output(opt.seq_output, render_sequence(format, 0, q));
  }
  return 0;
}

struct EvalOptions {
  std::string input_path;
  Index n = -1;
  std::string format = "bfile";
  std::string output;
};

int run_eval(const EvalOptions& opt) {
  if (opt.n < 0) throw std::invalid_argument("--n must be nonnegative");
  metafib::NestedSpec spec =
      metafib::nested_spec_from_json(parse_json(read_input(opt.input_path), "input recurrence"));
  const SequenceFormat format = metafib::sequence_format_from_name(opt.format);
  metafib::EvalResult result = metafib::eval_prefix(spec.rec, spec.init, opt.n);
  write_output(opt.output, render_sequence(format, spec.rec.n0(), result.values));
  if (result.death) {
    json death = json::object();
    death["death"] = metafib::to_json(*result.death);
    std::cerr << render_json(death);
    return kExitDeath;
  }
  return 0;
}

struct VerifyOptions {
  std::string bundle_path;
  Index n = -1;
  std::string output;
};

int run_verify(const VerifyOptions& opt) {
  Construction c =
      metafib::construction_from_json(parse_json(read_input(opt.bundle_path), "bundle"));
  metafib::TheoremReport report = metafib::check_theorem(c, opt.n);
  write_output(opt.output, render_json(metafib::to_json(report)));
  if (report.pass) return 0;
  if (report.first_mismatch) return kExitMismatch;
  if (report.death) return kExitDeath;
  return kExitInternal;
}

struct TraceOptions {
  std::string bundle_path;
  Index at = -1;
  std::string output;
};

int run_trace(const TraceOptions& opt) {
  Construction c =
      metafib::construction_from_json(parse_json(read_input(opt.bundle_path), "bundle"));
  metafib::CaseTrace trace = metafib::trace_case(c, opt.at);
  write_output(opt.output, render_json(metafib::to_json(trace)));
  if (trace.death) return kExitDeath;
  if (!trace.pattern_ok) return kExitMismatch;
  return 0;
}

struct ExtractOptions {
  std::string input_path;
  Index stride = 0;
  Index offset = 0;
  std::string format;
  std::string output;
};

int run_extract(const ExtractOptions& opt) {
  SequenceFormat detected = SequenceFormat::BFile;
  metafib::Sequence seq = metafib::read_sequence(read_input(opt.input_path), std::nullopt, &detected);
  const SequenceFormat format =
      opt.format.empty() ? detected : metafib::sequence_format_from_name(opt.format);
  std::vector<Int> values = metafib::extract_subsequence(seq.values, opt.stride, opt.offset);
  // The extracted subsequence is reindexed from 0.
  write_output(opt.output, render_sequence(format, 0, values));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate nested (meta-Fibonacci) recurrences and embed linear recurrent "
               "sequences into them as equally spaced subsequences"};
  app.require_subcommand(1);

  ConstructOptions construct_opt;
  CLI::App* construct = app.add_subcommand(
      "construct", "Build the interleaved sequence, nested recurrence, and initial condition "
                   "realizing a linear recurrent sequence at stride 2k");
  // --h names the initial-condition bound, so help is long-form only here.
  construct->set_help_flag("--help", "Print this help message and exit");
  construct->add_option("input", construct_opt.input_path,
                        "Input recurrence JSON file ({\"k\", \"coeffs\", \"initial\"})");
  construct->add_option("--k", construct_opt.k, "Order of the recurrence (checked against --coeffs)");
  construct->add_option("--coeffs", construct_opt.coeffs, "Comma-separated coefficients b1..bk");
  construct->add_option("--initial", construct_opt.initial, "Comma-separated initial terms a0..a_{k-1}");
  construct->add_option("--h", construct_opt.h,
                        "Initial-condition bound (default: the minimal valid value)");
  construct->add_option("-o,--output", construct_opt.output, "Write the bundle here (default stdout)");
  construct->add_option("--terms", construct_opt.terms,
                        "Also write the first N interleaved terms");
  construct->add_option("--format", construct_opt.format, "Sequence format: bfile, csv, or json")
      ->default_val("bfile");
  construct->add_option("--seq-output", construct_opt.seq_output,
                        "Write the interleaved terms here (default stdout)");

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate a nested recurrence under the zero-index convention");
  eval->add_option("input", eval_opt.input_path,
                   "Recurrence+initial JSON file ({\"n0\", \"coeffs\", \"initial\"})")
      ->required();
  eval->add_option("--n", eval_opt.n, "Number of terms to evaluate")->required();
  eval->add_option("--format", eval_opt.format, "Output format: bfile, csv, or json")
      ->default_val("bfile");
  eval->add_option("-o,--output", eval_opt.output, "Write the sequence here (default stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check that a construction bundle reproduces its interleaved sequence");
  verify->add_option("bundle", verify_opt.bundle_path, "Construction bundle JSON file")->required();
  verify->add_option("--n", verify_opt.n, "Number of indices to check")->required();
  verify->add_option("-o,--output", verify_opt.output, "Write the report here (default stdout)");

  TraceOptions trace_opt;
  CLI::App* trace = app.add_subcommand(
      "trace", "Break down the nested recurrence at one index and check the odd/even case pattern");
  trace->add_option("bundle", trace_opt.bundle_path, "Construction bundle JSON file")->required();
  trace->add_option("--at", trace_opt.at, "Index to trace (must exceed the bundle's h)")->required();
  trace->add_option("-o,--output", trace_opt.output, "Write the trace here (default stdout)");

  ExtractOptions extract_opt;
  CLI::App* extract = app.add_subcommand(
      "extract", "Take an equally spaced subsequence of a sequence file");
  extract->add_option("input", extract_opt.input_path, "Sequence file (bfile, csv, or json)")
      ->required();
  extract->add_option("--stride", extract_opt.stride, "Distance between picked entries")->required();
  extract->add_option("--offset", extract_opt.offset, "Position of the first picked entry")
      ->default_val(0);
  extract->add_option("--format", extract_opt.format,
                      "Output format (defaults to the detected input format)");
  extract->add_option("-o,--output", extract_opt.output, "Write the result here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (construct->parsed()) return run_construct(construct_opt);
    if (eval->parsed()) return run_eval(eval_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (trace->parsed()) return run_trace(trace_opt);
    if (extract->parsed()) return run_extract(extract_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
