#include "bifree/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "bifree/bnc.hpp"
#include "bifree/cumulants.hpp"
#include "bifree/errors.hpp"
#include "bifree/exp_poly.hpp"
#include "bifree/liberation.hpp"
#include "bifree/spec_file.hpp"
#include "bifree/vaccine.hpp"

namespace bifree {

namespace {

enum class Format { kHuman, kLine };

struct Options {
  Format format = Format::kHuman;
  std::string chi;
  std::string eps;
  std::string pi;
  std::string sigma;
  std::string spec;
  std::string word;
  std::string mode = "bifree";
  std::string method;
  std::string pair;
  std::optional<std::size_t> max_len;
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  bool all_generators = false;
  unsigned n = 0;
  std::optional<double> t;
};

std::string join_indices(const std::vector<std::size_t>& indices, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(indices[k] + 1);
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  bool human() const { return opt_.format == Format::kHuman; }

  std::uint64_t seed() const {
    if (opt_.seed) return *opt_.seed;
    if (!human()) throw ParseError("randomized commands need --seed in line format");
    return 1;
  }

  void load() {
    if (opt_.spec.empty()) throw ParseError("--spec is required");
    spec_ = load_spec(opt_.spec);
  }

  const Alphabet& alphabet() const { return spec_->alphabet; }

  Word word() const { return alphabet().parse_word(opt_.word); }

  std::vector<PairId> pairs_in_scope() const {
    if (!opt_.pair.empty()) return {alphabet().pair(opt_.pair)};
    std::vector<PairId> ids;
    for (const auto& p : spec_->pures) ids.push_back(p.pair());
    return ids;
  }

  int bnc_enum() {
    const ChiMap chi = ChiMap::parse(opt_.chi);
    const auto& partitions = bnc_partitions(chi);
    if (!human()) out_ << "count=" << partitions.size() << '\n';
    for (const auto& p : partitions) out_ << p.to_string() << '\n';
    if (human()) out_ << partitions.size() << " bi-non-crossing partitions for chi=" << chi.to_string() << '\n';
    return 0;
  }

  int bnc_check() {
    const ChiMap chi = ChiMap::parse(opt_.chi);
    const SetPartition p = SetPartition::parse(opt_.pi);
    const bool yes = is_bi_non_crossing(p, chi);
    out_ << (human() ? "BNC: " : "bnc=") << (yes ? "yes" : "no") << '\n';
    return 0;
  }

  int bnc_intervals() {
    const ChiMap chi = ChiMap::parse(opt_.chi);
    const EpsMap eps = EpsMap::parse(opt_.eps);
    for (const auto& interval : maximal_mono_intervals(chi, eps)) {
      if (human()) {
        out_ << '{' << join_indices(interval.indices, ",") << "}\n";
      } else {
        out_ << "interval=" << join_indices(interval.indices, " ") << '\n';
      }
    }
    return 0;
  }

  int bnc_classify() {
    const ChiMap chi = ChiMap::parse(opt_.chi);
    const BncPartition p(SetPartition::parse(opt_.pi), chi);
    const auto kinds = classify_blocks(p);
    for (std::size_t b = 0; b < kinds.size(); ++b) {
      const char* kind = kinds[b] == BlockKind::kInner ? "inner" : "outer";
      const auto& block = p.partition().blocks()[b];
      if (human()) {
        out_ << '{' << join_indices(block, ",") << "}: " << kind << '\n';
      } else {
        out_ << "block=" << join_indices(block, " ") << " kind=" << kind << '\n';
      }
    }
    return 0;
  }

  int bnc_mobius() {
    const ChiMap chi = ChiMap::parse(opt_.chi);
    const BncPartition lower(SetPartition::parse(opt_.pi), chi);
    const BncPartition upper(opt_.sigma.empty() ? SetPartition::full(chi.size()) : SetPartition::parse(opt_.sigma),
                             chi);
    out_ << (human() ? "mu = " : "mu=") << bifree::bnc_mobius(lower, upper) << '\n';
    return 0;
  }

  int bnc_order() {
    const ChiMap chi = ChiMap::parse(opt_.chi);
    out_ << (human() ? "s_chi: " : "order=") << join_indices(s_chi_permutation(chi), " ") << '\n';
    return 0;
  }

  int moment() {
    load();
    const Word w = word();
    Rational value;
    std::string label = "phi";
    if (opt_.mode == "bifree") {
      value = spec_->distribution().moment(w);
    } else if (opt_.mode == "vaccine") {
      value = vaccine_reconstruct_moment(spec_->pures, w, seed());
    } else if (opt_.mode == "conditional") {
      for (const auto& p : spec_->pures) {
        if (!p.has_theta()) throw ModeError("pair '" + alphabet().pair_name(p.pair()) + "' has no theta_moments");
      }
      value = spec_->conditional_distribution().theta(w);
      label = "theta";
    } else {
      throw ParseError("unknown --mode '" + opt_.mode + "'");
    }
    if (human()) {
      out_ << label << '(' << alphabet().format_word(w) << ") = " << to_string(value) << '\n';
    } else {
      out_ << "value=" << to_string(value) << '\n';
    }
    return 0;
  }

  int report(const std::string& method, bool holds, const std::string& verdict) {
    out_ << (human() ? method + ": " : "") << verdict << '\n';
    return holds ? 0 : 1;
  }

  int check() {
    load();
    const JointDistribution d = spec_->distribution();
    if (opt_.method == "cumulants") {
      CumulantEngine engine(d);
      std::size_t words = 0;
      std::optional<std::pair<Word, Rational>> found;
      for_each_word(scan_letters(d.pures(), opt_.all_generators), opt_.max_len.value_or(5), [&](const Word& w) {
        if (is_monochromatic(w)) return true;
        ++words;
        const Rational k = engine.kappa(w);
        if (k != 0) found.emplace(w, k);
        return !found;
      });
      if (found) {
        return report("cumulants", false,
                      "COUNTEREXAMPLE word=[" + alphabet().format_word(found->first) +
                          "] kappa=" + to_string(found->second));
      }
      return report("cumulants", true, "HOLDS words=" + std::to_string(words));
    }
    if (opt_.method == "vaccine") {
      const auto verdict = vaccine_test(d, opt_.max_len.value_or(6), opt_.trials, seed());
      return report("vaccine", verdict.holds, verdict.to_string(alphabet()));
    }
    if (opt_.method == "taur") {
      int code = 0;
      for (PairId iota : pairs_in_scope()) {
        const auto verdict = taur_test(d, iota, opt_.max_len.value_or(5), opt_.all_generators);
        code = std::max(code, report("taur " + alphabet().pair_name(iota), verdict.holds,
                                     "pair=" + alphabet().pair_name(iota) + " " + verdict.to_string(alphabet())));
        if (code) break;
      }
      return code;
    }
    if (opt_.method == "liberation") {
      LiberationExpander expander(spec_->pures);
      const JointDistribution product = JointDistribution::bifree_product(spec_->pures);
      for (PairId iota : pairs_in_scope()) {
        std::size_t words = 0;
        std::optional<Word> found;
        for_each_word(scan_letters(spec_->pures, opt_.all_generators), opt_.max_len.value_or(4),
                      [&](const Word& w) {
                        if (is_monochromatic(w)) return true;
                        ++words;
                        const auto e = expander.expand(w, iota);
                        if (e.c0 != product.moment(w) || e.c1 != eval_tensor(product, taur(w, iota))) found = w;
                        return !found;
                      });
        const std::string prefix = "pair=" + alphabet().pair_name(iota) + " ";
        if (found) {
          return report("liberation", false, prefix + "MISMATCH word=[" + alphabet().format_word(*found) + "]");
        }
        report("liberation", true, prefix + "HOLDS words=" + std::to_string(words));
      }
      return 0;
    }
    throw ParseError("unknown --method '" + opt_.method + "'");
  }

  int ubm() {
    if (opt_.t) {
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.17g", ubm_eval(opt_.n, *opt_.t));
      out_ << (human() ? "phi(U(t)^" + std::to_string(opt_.n) + ") = " : "value=") << buffer << '\n';
    } else {
      out_ << ubm_moment(opt_.n).render() << '\n';
    }
    return 0;
  }

  int taur_cmd() {
    load();
    const Word w = word();
    const TensorSum t = taur(w, alphabet().pair(opt_.pair));
    for (const auto& line : t.render(alphabet())) out_ << line << '\n';
    const Rational value = eval_tensor(spec_->distribution(), t);
    out_ << (human() ? "(phi ⊗ phi) = " : "value=") << to_string(value) << '\n';
    return 0;
  }

  int liberate() {
    load();
    const auto r = liberation_report(spec_->pures, word(), alphabet().pair(opt_.pair));
    out_ << "c0=" << to_string(r.expansion.c0) << ", c1=" << to_string(r.expansion.c1)
         << ", taur=" << to_string(r.taur_value) << ", " << (r.match ? "MATCH" : "MISMATCH") << '\n';
    return r.match ? 0 : 1;
  }

  std::string describe_symbols(const std::vector<int>& symbols) const {
    if (!spec_) return {};
    std::string out;
    for (int s : symbols) {
      if (!out.empty()) out += ' ';
      out += alphabet().symbol_name(s);
    }
    return out;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::optional<DistributionSpec> spec_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact bi-free probability computations", "bifree"};
  app.require_subcommand(1);
  app.fallthrough();
  std::map<std::string, Format> formats{{"human", Format::kHuman}, {"line", Format::kLine}};
  app.add_option("--format", opt.format, "Output format: human or line")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto add_chi = [&](CLI::App* cmd) { cmd->add_option("--chi", opt.chi, "Sides, e.g. rllr")->required(); };
  auto add_spec = [&](CLI::App* cmd) { cmd->add_option("--spec", opt.spec, "Distribution spec (JSON)")->required(); };

  CLI::App* bnc = app.add_subcommand("bnc", "Bi-non-crossing partition combinatorics");
  bnc->require_subcommand(1);
  bnc->fallthrough();
  CLI::App* bnc_enum = bnc->add_subcommand("enum", "List BNC(chi)");
  add_chi(bnc_enum);
  CLI::App* bnc_check = bnc->add_subcommand("check", "Test a partition for membership in BNC(chi)");
  add_chi(bnc_check);
  bnc_check->add_option("--pi", opt.pi, "Partition, e.g. \"1|2 5 7|3 4|6 8\"")->required();
  CLI::App* bnc_intervals = bnc->add_subcommand("intervals", "Maximal monochromatic chi-intervals");
  add_chi(bnc_intervals);
  bnc_intervals->add_option("--eps", opt.eps, "Pair colours, e.g. p0,p1,p0")->required();
  CLI::App* bnc_classify = bnc->add_subcommand("classify", "Inner/outer blocks of a BNC partition");
  add_chi(bnc_classify);
  bnc_classify->add_option("--pi", opt.pi, "Partition")->required();
  CLI::App* bnc_mobius_cmd = bnc->add_subcommand("mobius", "Möbius function mu(pi, sigma) on BNC(chi)");
  add_chi(bnc_mobius_cmd);
  bnc_mobius_cmd->add_option("--pi", opt.pi, "Lower partition")->required();
  bnc_mobius_cmd->add_option("--sigma", opt.sigma, "Upper partition (default: one block)");
  CLI::App* bnc_order = bnc->add_subcommand("order", "The s_chi ordering of positions");
  add_chi(bnc_order);

  CLI::App* moment = app.add_subcommand("moment", "Mixed moment of a word");
  add_spec(moment);
  moment->add_option("--word", opt.word, "Space-separated symbols")->required();
  moment->add_option("--mode", opt.mode, "bifree, vaccine or conditional");
  moment->add_option("--seed", opt.seed, "Seed for the vaccine centring");

  CLI::App* check = app.add_subcommand("check", "Scan a spec for bi-freeness");
  add_spec(check);
  check->add_option("--method", opt.method, "cumulants, vaccine, taur or liberation")->required();
  check->add_option("--max-len", opt.max_len, "Longest word scanned")->check(CLI::Range(1, 8));
  check->add_option("--trials", opt.trials, "Vaccine trials");
  check->add_option("--seed", opt.seed, "Seed for vaccine trials");
  check->add_option("--pair", opt.pair, "Restrict taur/liberation to one pair");
  check->add_flag("--all-generators", opt.all_generators, "Scan every generator instead of one per face");

  CLI::App* ubm = app.add_subcommand("ubm", "Moments of free unitary Brownian motion");
  ubm->add_option("--n", opt.n, "Power n")->required();
  ubm->add_option("--t", opt.t, "Evaluate at time t")->check(CLI::NonNegativeNumber);

  CLI::App* taur_cmd = app.add_subcommand("taur", "Expand the taur map of a word");
  add_spec(taur_cmd);
  taur_cmd->add_option("--word", opt.word, "Space-separated symbols")->required();
  taur_cmd->add_option("--pair", opt.pair, "Pair id iota")->required();

  CLI::App* liberate = app.add_subcommand("liberate", "Order-t liberation expansion versus taur");
  add_spec(liberate);
  liberate->add_option("--word", opt.word, "Space-separated symbols")->required();
  liberate->add_option("--pair", opt.pair, "Pair id iota")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner runner(opt, out);
  try {
    if (bnc_enum->parsed()) return runner.bnc_enum();
    if (bnc_check->parsed()) return runner.bnc_check();
    if (bnc_intervals->parsed()) return runner.bnc_intervals();
    if (bnc_classify->parsed()) return runner.bnc_classify();
    if (bnc_mobius_cmd->parsed()) return runner.bnc_mobius();
    if (bnc_order->parsed()) return runner.bnc_order();
    if (moment->parsed()) return runner.moment();
    if (check->parsed()) return runner.check();
    if (ubm->parsed()) return runner.ubm();
    if (taur_cmd->parsed()) return runner.taur_cmd();
    if (liberate->parsed()) return runner.liberate();
  } catch (const InsufficientDataError& e) {
    err << "error: " << e.what();
    if (const auto names = runner.describe_symbols(e.symbols()); !names.empty()) err << " (word: " << names << ')';
    err << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace bifree
