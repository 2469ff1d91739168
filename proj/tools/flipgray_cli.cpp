// Command-line front end: generation, flip sequences, rank/unrank, successor
// queries, listing verification, and flip-length statistics.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flipgray/analysis.hpp"
#include "flipgray/coloured_permutation.hpp"
#include "flipgray/flip_sequence.hpp"
#include "flipgray/generation.hpp"
#include "flipgray/ranking.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitArgumentError = 2;
constexpr int kExitCapacityError = 3;
constexpr std::uint64_t kGreedyWarnThreshold = 10'000'000;

struct Options {
  int n = 0;
  int k = 0;
  std::string method = "flipseq";
  std::string start_text;
  std::uint64_t rank_value = 0;
  bool stream = false;
};

void emit_line(const std::string& line, bool stream) {
  std::cout << line << '\n';
  if (stream) std::cout.flush();
}

int run_gen(const Options& opt) {
  using namespace flipgray;
  const std::uint64_t expected = listing_size(opt.n, opt.k);

  std::optional<ColouredPermutation> start;
  if (!opt.start_text.empty()) {
    if (opt.method != "recursive" && opt.method != "flipseq") {
      std::cerr << "error: --start is only supported by the recursive and flipseq methods\n";
      return kExitArgumentError;
    }
    start = parse_permutation(opt.start_text, opt.k);
    if (start->n() != opt.n) {
      std::cerr << "error: --start has " << start->n() << " elements, expected " << opt.n << "\n";
      return kExitArgumentError;
    }
  }

  if (opt.method == "greedy-min" || opt.method == "greedy-max") {
    if (expected > kGreedyWarnThreshold)
      std::cerr << "warning: greedy methods hold all " << expected
                << " permutations in memory\n";
    const GreedyOutcome outcome =
        greedy(opt.n, opt.k,
               opt.method == "greedy-min" ? GreedyPriority::MinFlip : GreedyPriority::MaxFlip,
               std::max(expected, kGreedyWarnThreshold));
    for (const auto& pi : outcome.listing) emit_line(format(pi), opt.stream);
    emit_line("total:" + std::to_string(outcome.listing.size()), opt.stream);
    return (outcome.exhaustive && outcome.cyclic) ? 0 : kExitVerifyFailure;
  }

  std::uint64_t total = 0;
  const auto print = [&](const ColouredPermutation& pi) {
    emit_line(format(pi), opt.stream);
    ++total;
  };
  if (opt.method == "recursive") {
    for (const auto& pi :
         rec_listing(start ? *start : ColouredPermutation::identity(opt.n, opt.k)))
      print(pi);
  } else if (opt.method == "successor") {
    for (const auto& pi : generate_by_successor(opt.n, opt.k)) print(pi);
  } else if (opt.method == "flipseq") {
    stream_by_flipseq(start ? *start : ColouredPermutation::identity(opt.n, opt.k), print);
  } else {
    std::cerr << "error: unknown method '" << opt.method << "'\n";
    return kExitArgumentError;
  }
  emit_line("total:" + std::to_string(total), opt.stream);
  return 0;
}

int run_flipseq(const Options& opt) {
  using namespace flipgray;
  FlipSequenceIterator seq(opt.n, opt.k);
  while (true) {
    const int x = seq.next();
    if (x > opt.n) break;
    emit_line(std::to_string(x), opt.stream);
  }
  return 0;
}

int run_rank(const Options& opt) {
  using namespace flipgray;
  const ColouredPermutation pi = parse_permutation(opt.start_text, opt.k);
  if (opt.n != 0 && opt.n != pi.n()) {
    std::cerr << "error: permutation has " << pi.n() << " elements, but --n is " << opt.n << "\n";
    return kExitArgumentError;
  }
  std::cout << rank(pi) << '\n';
  return 0;
}

int run_unrank(const Options& opt) {
  using namespace flipgray;
  std::cout << format(unrank(opt.rank_value, opt.n, opt.k)) << '\n';
  return 0;
}

int run_successor(const Options& opt) {
  using namespace flipgray;
  const ColouredPermutation pi = parse_permutation(opt.start_text, opt.k);
  if (opt.n != 0 && opt.n != pi.n()) {
    std::cerr << "error: permutation has " << pi.n() << " elements, but --n is " << opt.n << "\n";
    return kExitArgumentError;
  }
  const int len = successor(pi);
  std::cout << format(flip(pi, len)) << '\n' << "flip:" << len << '\n';
  return 0;
}

int run_verify(const Options& opt) {
  using namespace flipgray;
  ListingVerifier verifier(opt.n, opt.k,
                           std::max(listing_size(opt.n, opt.k), kGreedyWarnThreshold));
  std::string line;
  std::uint64_t entries = 0;
  std::optional<std::uint64_t> declared_total;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    if (line.rfind("total:", 0) == 0) {
      declared_total = std::stoull(line.substr(6));
      continue;
    }
    verifier.consume(parse_permutation(line, opt.k));
    ++entries;
  }
  if (declared_total && *declared_total != entries) {
    std::cerr << "error: input declares total:" << *declared_total << " but has " << entries
              << " permutations\n";
    return kExitArgumentError;
  }
  const VerificationReport report = verifier.finish();
  std::cout << report.to_text();
  return report.is_hamilton_cycle ? 0 : kExitVerifyFailure;
}

int run_stats(const Options& opt) {
  using namespace flipgray;
  const FlipStats stats = avg_flip_length(opt.n, opt.k);
  const auto fraction = [](const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
  };
  std::cout << "exact:" << fraction(stats.exact_average) << '\n';
  std::cout << "exact_decimal:" << to_decimal(stats.exact_average, 15) << '\n';
  std::cout << "bound:" << to_decimal(stats.bound_lower, 15) << '\n';
  if (stats.empirical_average)
    std::cout << "empirical:" << fraction(*stats.empirical_average) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic flip Gray codes for coloured permutations"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&opt](CLI::App* cmd, bool need_n) {
    auto* n_opt = cmd->add_option("--n", opt.n, "number of values");
    cmd->add_option("--k", opt.k, "number of colours")->required();
    if (need_n) n_opt->required();
    return cmd;
  };

  auto* gen = add_common(app.add_subcommand("gen", "print a full listing"), true);
  gen->add_option("--method", opt.method,
                  "greedy-min | greedy-max | recursive | successor | flipseq");
  gen->add_option("--start", opt.start_text, "start permutation (recursive/flipseq only)");
  gen->add_flag("--stream", opt.stream, "flush after every line");

  auto* flipseq = add_common(app.add_subcommand("flipseq", "print the flip sequence"), true);
  flipseq->add_flag("--stream", opt.stream, "flush after every line");

  auto* rank_cmd = add_common(app.add_subcommand("rank", "rank of a permutation"), false);
  rank_cmd->add_option("--perm,--start", opt.start_text, "permutation text")->required();

  auto* unrank_cmd = add_common(app.add_subcommand("unrank", "permutation at a rank"), true);
  unrank_cmd->add_option("--rank", opt.rank_value, "1-based rank")->required();

  auto* succ = add_common(app.add_subcommand("successor", "next permutation in the cycle"), false);
  succ->add_option("--perm,--start", opt.start_text, "permutation text")->required();

  add_common(app.add_subcommand("verify", "verify a listing read from stdin"), true);
  add_common(app.add_subcommand("stats", "flip-length statistics"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgumentError;
  }

  try {
    if (app.got_subcommand("gen")) return run_gen(opt);
    if (app.got_subcommand("flipseq")) return run_flipseq(opt);
    if (app.got_subcommand("rank")) return run_rank(opt);
    if (app.got_subcommand("unrank")) return run_unrank(opt);
    if (app.got_subcommand("successor")) return run_successor(opt);
    if (app.got_subcommand("verify")) return run_verify(opt);
    if (app.got_subcommand("stats")) return run_stats(opt);
  } catch (const flipgray::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacityError;
  } catch (const flipgray::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgumentError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgumentError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgumentError;
  }
  return kExitArgumentError;
}
