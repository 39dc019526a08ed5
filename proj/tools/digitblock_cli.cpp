#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitblock/closed_form.hpp"
#include "digitblock/gamma_expr.hpp"
#include "digitblock/lemma1.hpp"
#include "digitblock/product_eval.hpp"
#include "digitblock/rivoal.hpp"
#include "digitblock/word.hpp"

namespace {

using namespace digitblock;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr unsigned kMaxBase = 36;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(Rational::parse(part));
  if (out.empty()) throw std::invalid_argument("empty parameter list");
  return out;
}

// "1:1,2:-1/3" -> f(1) = 1, f(2) = -1/3
FiniteSupportFn parse_function(const std::string& text) {
  FiniteSupportFn f;
  for (const auto& entry : split(text, ',')) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected n:value, got '" + entry + "'");
    const std::string key = entry.substr(0, colon);
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad argument '" + key + "'");
    }
    const auto n = std::stoull(key);
    if (n == 0) throw std::invalid_argument("use --f0 for the value at 0");
    f.set(n, Rational::parse(entry.substr(colon + 1)));
  }
  return f;
}

// Options shared by commands that evaluate products.
struct EvalFlags {
  std::uint64_t terms = 100000;
  long precision = 128;
  double tolerance = 1e-3;
  double tail_factor = 0.0;
  bool parallel = false;
  std::string format = "text";

  VerifyOptions options() const {
    VerifyOptions o;
    o.terms = terms;
    o.precision_bits = precision;
    o.tolerance = tolerance;
    o.tail_factor = tail_factor;
    o.mode = parallel ? Execution::Parallel : Execution::Serial;
    return o;
  }
};

constexpr long kMaxPrecisionBits = 1L << 20;
constexpr const char* kPrecisionEnv = "DIGITBLOCK_PRECISION";

long default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return 128;
  long bits = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, bits);
  if (ec != std::errc() || ptr != end || bits < kMinPrecisionBits || bits > kMaxPrecisionBits) {
    throw UsageError(std::string(kPrecisionEnv) + " must be an integer in [" +
                     std::to_string(kMinPrecisionBits) + ", " +
                     std::to_string(kMaxPrecisionBits) + "], got '" + env + "'");
  }
  return bits;
}

void add_precision(CLI::App* cmd, long& precision) {
  cmd->add_option("--precision", precision,
                  std::string("Working precision in bits (default from ") + kPrecisionEnv + ")")
      ->check(CLI::Range(kMinPrecisionBits, kMaxPrecisionBits))
      ->capture_default_str();
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_eval_flags(CLI::App* cmd, EvalFlags& flags) {
  cmd->add_option("--terms", flags.terms, "Number of product terms")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40))
      ->capture_default_str();
  add_precision(cmd, flags.precision);
  cmd->add_option("--tolerance", flags.tolerance, "Relative tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tail-factor", flags.tail_factor,
                  "Also pass when rel_gap <= factor * tail_estimate")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_flag("--parallel", flags.parallel, "Use the OpenMP kernel");
  add_format(cmd, flags.format);
}

void print_report_text(std::ostream& out, const VerifyReport& r) {
  out << "target: " << r.label() << '\n'
      << "terms_used: " << r.terms_used << '\n'
      << "precision_bits: " << r.precision_bits << '\n'
      << "lhs: " << r.lhs.to_string() << '\n'
      << "rhs: " << r.rhs.to_string() << '\n'
      << "abs_gap: " << r.abs_gap.to_string() << '\n'
      << "rel_gap: " << r.rel_gap.to_string() << '\n'
      << "tail_estimate: " << r.tail_estimate.to_string() << '\n'
      << "verdict: " << (r.pass ? "pass" : "fail") << '\n';
}

void print_reports(std::ostream& out, const std::vector<VerifyReport>& reports,
                   const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    out << (reports.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  } else if (format == "csv") {
    out << VerifyReport::csv_header() << '\n';
    for (const auto& r : reports) out << r.csv_row() << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) out << '\n';
      print_report_text(out, reports[i]);
    }
  }
}

int verdict_code(const std::vector<VerifyReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return kExitFail;
  }
  return kExitPass;
}

struct WordFlags {
  unsigned base = 2;
  std::string word;
  std::string a;
  std::string b;

  ProductSpec spec() const {
    Word w = Word::parse(word, base);
    if (a.empty() != b.empty()) throw UsageError("--a and --b must be given together");
    if (a.empty()) return ProductSpec::with_default_params(std::move(w));
    return ProductSpec(base, std::move(w), parse_rationals(a), parse_rationals(b));
  }
};

void add_params(CLI::App* cmd, WordFlags& flags) {
  cmd->add_option("--a", flags.a, "Comma-separated parameters a_i (default 1,1)");
  cmd->add_option("--b", flags.b, "Comma-separated parameters b_i (default 0,2)");
}

void add_base(CLI::App* cmd, unsigned& base) {
  cmd->add_option("--base", base, "Radix")->check(CLI::Range(2u, kMaxBase))->capture_default_str();
}

int run_count(const WordFlags& flags, std::uint64_t n) {
  std::cout << count_block(Word::parse(flags.word, flags.base), n) << '\n';
  return kExitPass;
}

int run_closed_form(const WordFlags& flags, bool evaluate, long precision) {
  const ProductSpec spec = flags.spec();
  const bool binary_default = spec.base() == 2 && spec == ProductSpec::with_default_params(spec.word());
  const GammaExpr expr = binary_default ? closed_form_base2(spec.word()) : closed_form_baseB(spec);
  std::cout << expr.to_text() << '\n' << expr.to_json().dump() << '\n';
  if (evaluate) std::cout << eval_gamma_expr(expr, precision).to_string() << '\n';
  return kExitPass;
}

int run_verify(const std::optional<std::string>& target, const WordFlags& word_flags,
               bool word_given, const EvalFlags& flags) {
  if (target.has_value() == word_given) {
    throw UsageError("give either a named target (rivoal, companion) or --word");
  }
  VerifyReport report;
  if (target) {
    if (*target == "rivoal") {
      report = verify(NamedFormula::Rivoal, flags.options());
    } else if (*target == "companion") {
      report = verify(NamedFormula::Companion, flags.options());
    } else {
      throw UsageError("unknown target '" + *target + "'");
    }
  } else {
    report = verify(word_flags.spec(), flags.options());
  }
  print_reports(std::cout, {report}, flags.format);
  return verdict_code({report});
}

int run_enumerate(const WordFlags& word_flags, unsigned max_len, const EvalFlags& flags) {
  if (word_flags.a.empty() != word_flags.b.empty()) {
    throw UsageError("--a and --b must be given together");
  }
  const auto a = word_flags.a.empty() ? std::vector<Rational>{1, 1} : parse_rationals(word_flags.a);
  const auto b = word_flags.b.empty() ? std::vector<Rational>{0, 2} : parse_rationals(word_flags.b);
  const auto reports = enumerate_words(word_flags.base, max_len, flags.options(), a, b);
  if (flags.format == "text") {
    for (const auto& r : reports) {
      std::cout << r.spec->word().to_string() << ' ' << (r.pass ? "pass" : "fail")
                << " rel_gap=" << r.rel_gap.to_string(6)
                << " tail=" << r.tail_estimate.to_string(6) << '\n';
    }
  } else {
    print_reports(std::cout, reports, flags.format);
  }
  return verdict_code(reports);
}

struct FuzzFlags {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 7;
  std::vector<unsigned> bases = {2, 3, 4, 10};
  unsigned max_word_len = 6;
  unsigned max_support = 30;
  std::uint64_t max_key = 200;
  bool mis_range = false;
  std::string f;
  std::string f0 = "0";
  std::string word;
  unsigned base = 2;
};

int print_fuzz_summary(const Lemma1FuzzSummary& s) {
  std::cout << s.exact << '/' << s.trials << " exact\n"
            << "all-zero words: " << s.all_zero_words
            << " (nonzero residuals: " << s.all_zero_nonzero << ")\n";
  for (const auto& c : s.counterexamples) std::cout << "counterexample: " << c.describe() << '\n';
  return s.exact == s.trials ? kExitPass : kExitFail;
}

int run_lemma1(const FuzzFlags& flags) {
  const RhsRange range = flags.mis_range ? RhsRange::Swapped : RhsRange::AsStated;
  if (!flags.f.empty() || !flags.word.empty()) {
    if (flags.f.empty() || flags.word.empty()) throw UsageError("--f requires --word and --base");
    Lemma1Case c;
    c.base = flags.base;
    c.word = Word::parse(flags.word, flags.base);
    c.f = parse_function(flags.f);
    c.f.set_value_at_zero(Rational::parse(flags.f0));
    c.residual = lemma1_residual(c.f, c.word, c.base, range);
    Lemma1FuzzSummary s;
    s.trials = 1;
    s.exact = c.residual == Rational(0) ? 1 : 0;
    const bool zeros = classify(c.word).kind == WordKind::AllZeros;
    s.all_zero_words = zeros ? 1 : 0;
    s.all_zero_nonzero = zeros && s.exact == 0 ? 1 : 0;
    std::cout << "residual: " << c.residual.to_string() << '\n';
    if (s.exact == 0) s.counterexamples.push_back(c);
    return print_fuzz_summary(s);
  }
  Lemma1FuzzConfig config;
  config.trials = flags.trials;
  config.seed = flags.seed;
  config.bases = flags.bases;
  config.max_word_len = flags.max_word_len;
  config.max_support = flags.max_support;
  config.max_key = flags.max_key;
  config.range = range;
  return print_fuzz_summary(lemma1_fuzz(config));
}

int run_alternating(std::uint64_t terms, long precision, const std::string& format) {
  if (terms < 100) throw UsageError("--terms must be >= 100");
  const CauchyReport r = alternating_cauchy({terms / 100, terms / 10, terms}, precision);
  bool contracting = true;
  for (double s : r.shrink) contracting = contracting && s > 1.0;
  const std::string estimate = r.estimates.back().to_string(std::max(r.stable_digits, 1));
  if (format == "json") {
    nlohmann::json j;
    j["checkpoints"] = r.checkpoints;
    j["estimates"] = nlohmann::json::array();
    for (const auto& e : r.estimates) j["estimates"].push_back(e.to_string());
    j["gaps"] = nlohmann::json::array();
    for (const auto& g : r.gaps) j["gaps"].push_back(g.to_string(6));
    j["shrink"] = r.shrink;
    j["stable_digits"] = r.stable_digits;
    j["estimate"] = estimate;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "checkpoint,estimate,gap\n";
    for (std::size_t i = 0; i < r.estimates.size(); ++i) {
      std::cout << r.checkpoints[i] << ',' << r.estimates[i].to_string() << ','
                << (i == 0 ? std::string() : r.gaps[i - 1].to_string(6)) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < r.estimates.size(); ++i) {
      std::cout << "k<=" << r.checkpoints[i] << ": " << r.estimates[i].to_string();
      if (i > 0) std::cout << "  gap " << r.gaps[i - 1].to_string(3);
      std::cout << '\n';
    }
    for (std::size_t i = 0; i < r.shrink.size(); ++i) {
      std::cout << "gap shrink: " << r.shrink[i] << '\n';
    }
    std::cout << "estimate: " << estimate << " (" << r.stable_digits
              << " stable digits)\n";
  }
  return contracting ? kExitPass : kExitFail;
}

int run_rivoal_forms(std::uint64_t blocks, long precision, const std::string& format) {
  const GroupingCheck c = check_grouping(blocks, precision);
  if (format == "json") {
    nlohmann::json j;
    j["blocks"] = c.blocks;
    j["exact_match"] = c.exact_match;
    j["primes"] = c.primes;
    j["original_value"] = c.original_value.to_string();
    j["grouped_value"] = c.grouped_value.to_string();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "blocks: " << c.blocks << '\n'
              << "primes in canonical form: " << c.primes << '\n'
              << "original: " << c.original_value.to_string() << '\n'
              << "grouped: " << c.grouped_value.to_string() << '\n'
              << (c.exact_match ? "exact match" : "MISMATCH") << '\n';
  }
  return c.exact_match ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  long precision = 128;
  try {
    precision = default_precision();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Digit-block infinite products: counts, Gamma closed forms and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "digitblock 1.0.0");

  WordFlags word_flags;
  EvalFlags eval_flags;
  eval_flags.precision = precision;

  auto* count = app.add_subcommand("count", "Occurrences of a word in the expansion of n");
  std::uint64_t count_n = 0;
  add_base(count, word_flags.base);
  count->add_option("--word", word_flags.word, "Digit block")->required();
  count->add_option("n", count_n, "Integer to expand")->required();

  auto* closed = app.add_subcommand("closed-form", "Gamma closed form of a word's product");
  bool evaluate = false;
  long closed_precision = precision;
  add_base(closed, word_flags.base);
  closed->add_option("--word", word_flags.word, "Digit block")->required();
  add_params(closed, word_flags);
  closed->add_flag("--eval", evaluate, "Also print the numeric value");
  add_precision(closed, closed_precision);

  auto* verify_cmd = app.add_subcommand("verify", "Compare a partial product with its closed form");
  std::optional<std::string> target;
  verify_cmd->add_option("target", target, "rivoal or companion");
  add_base(verify_cmd, word_flags.base);
  auto* word_opt = verify_cmd->add_option("--word", word_flags.word, "Digit block");
  add_params(verify_cmd, word_flags);
  add_eval_flags(verify_cmd, eval_flags);

  auto* enumerate = app.add_subcommand("enumerate", "Verify every word up to a length");
  unsigned max_len = 3;
  add_base(enumerate, word_flags.base);
  enumerate->add_option("--max-len", max_len, "Longest word")
      ->check(CLI::Range(1u, kMaxEnumerateLength))
      ->capture_default_str();
  add_params(enumerate, word_flags);
  add_eval_flags(enumerate, eval_flags);

  auto* fuzz = app.add_subcommand("lemma1-fuzz", "Exact checks of the block-counting identity");
  FuzzFlags fuzz_flags;
  fuzz->add_option("--trials", fuzz_flags.trials)->capture_default_str();
  fuzz->add_option("--seed", fuzz_flags.seed)->capture_default_str();
  fuzz->add_option("--bases", fuzz_flags.bases)
      ->delimiter(',')
      ->check(CLI::Range(2u, kMaxBase))
      ->capture_default_str();
  fuzz->add_option("--max-word-len", fuzz_flags.max_word_len)
      ->check(CLI::Range(1u, 16u))
      ->capture_default_str();
  fuzz->add_option("--max-support", fuzz_flags.max_support)
      ->check(CLI::Range(1u, 10000u))
      ->capture_default_str();
  fuzz->add_option("--max-key", fuzz_flags.max_key)
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40))
      ->capture_default_str();
  fuzz->add_flag("--mis-range", fuzz_flags.mis_range,
                 "Start the right-hand sum at the wrong index (negative control)");
  fuzz->add_option("--f", fuzz_flags.f, "Check one function, e.g. 1:1,2:-1/3");
  fuzz->add_option("--f0", fuzz_flags.f0, "Value at 0 for --f")->capture_default_str();
  fuzz->add_option("--word", fuzz_flags.word, "Word for --f");
  add_base(fuzz, fuzz_flags.base);

  auto* alternating = app.add_subcommand("alternating", "Estimate the alternating-sign product");
  std::uint64_t alt_terms = 1000000;
  long alt_precision = precision;
  std::string alt_format = "text";
  alternating->add_option("--terms", alt_terms, "Last grouped index")
      ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{1} << 40))
      ->capture_default_str();
  add_precision(alternating, alt_precision);
  add_format(alternating, alt_format);

  auto* forms = app.add_subcommand("rivoal-forms", "Original versus grouped partial products");
  std::uint64_t blocks = 1000;
  long forms_precision = precision;
  std::string forms_format = "text";
  forms->add_option("--blocks", blocks, "Number of grouped blocks")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{10000000}))
      ->capture_default_str();
  add_precision(forms, forms_precision);
  add_format(forms, forms_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*count) return run_count(word_flags, count_n);
    if (*closed) return run_closed_form(word_flags, evaluate, closed_precision);
    if (*verify_cmd) return run_verify(target, word_flags, word_opt->count() > 0, eval_flags);
    if (*enumerate) return run_enumerate(word_flags, max_len, eval_flags);
    if (*fuzz) return run_lemma1(fuzz_flags);
    if (*alternating) return run_alternating(alt_terms, alt_precision, alt_format);
    if (*forms) return run_rivoal_forms(blocks, forms_precision, forms_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
