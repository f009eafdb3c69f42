#include "fuglede/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuglede/constructions.hpp"
#include "fuglede/enumerate.hpp"
#include "fuglede/set_io.hpp"
#include "fuglede/structure.hpp"

namespace fuglede {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string second;
  std::string partner;
  std::string out_path;
  std::string mode;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> n;
  std::vector<std::uint64_t> sizes;
  bool canonical = false;
  std::uint64_t shards = 1;
  unsigned threads = 0;
  std::size_t max_listed = 1000;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;
};

// Reads a set file and holds it to any --p / --n given on the command line.
GroupSet load(const std::string& path, const Options& opt) {
  GroupSet set = read_set_file(path);
  if (opt.p && *opt.p != set.params().p()) {
    throw ParameterError("--p " + std::to_string(*opt.p) + " does not match p = " +
                         std::to_string(set.params().p()) + " in " + path);
  }
  if (opt.n && *opt.n != set.params().n()) {
    throw ParameterError("--n " + std::to_string(*opt.n) + " does not match n = " +
                         std::to_string(set.params().n()) + " in " + path);
  }
  return set;
}

std::optional<GroupSet> load_partner(const GroupSet& set, const Options& opt) {
  if (opt.partner.empty()) return std::nullopt;
  GroupSet partner = load(opt.partner, opt);
  if (!(partner.params() == set.params())) {
    throw ParameterError("partner " + opt.partner + " lives in " + to_string(partner.params()) + ", not " +
                         to_string(set.params()));
  }
  return partner;
}

GroupParams params_from_flags(const Options& opt) {
  if (!opt.p || !opt.n) throw ParameterError("--p and --n are required");
  return GroupParams(*opt.p, *opt.n);
}

std::string join_levels(const std::vector<unsigned>& levels) {
  std::string out = "{";
  for (std::size_t i = 0; i < levels.size(); ++i) out += (i == 0 ? "" : ",") + std::to_string(levels[i]);
  return out + "}";
}

// Writes to --out when given, else to the command's stream.
void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path);
  if (!file) throw ParameterError("cannot write " + opt.out_path);
  file << text;
}

int analyze(const Options& opt, std::ostream& out) {
  const GroupSet set = load(opt.input, opt);
  if (set.empty()) throw ParameterError("empty set");
  const ZeroProfile profile = zero_set(set);
  const SizeClass size_class = classify_size(set.size(), set.params());
  const unsigned exponent = divisibility_exponent(profile);
  const bool divides = set.size() % set.params().power(exponent) == 0;

  std::vector<std::string> reps;
  for (const ClassRep& rep : profile.reps()) reps.push_back(to_string(rep));
  if (opt.json) {
    Json j;
    j["params"] = {{"p", set.params().p()}, {"n", set.params().n()}};
    j["size"] = set.size();
    j["size_class"] = to_string(size_class);
    j["zero_set"] = reps;
    j["I"] = profile.levels();
    j["divisibility_exponent"] = exponent;
    j["divisibility_check"] = divides;
    out << j.dump(2) << '\n';
  } else {
    out << "params: p=" << set.params().p() << " n=" << set.params().n() << '\n';
    out << "size: " << set.size() << '\n';
    out << "size_class: " << to_string(size_class) << '\n';
    out << "zero_set:";
    for (const std::string& r : reps) out << ' ' << r;
    out << '\n';
    out << "I: " << join_levels(profile.levels()) << '\n';
    out << "divisibility_exponent: " << exponent << '\n';
    out << "divisibility_check: " << (divides ? "ok" : "FAILED") << " (p^" << exponent << " | " << set.size()
        << ")\n";
  }
  return divides ? kExitOk : kExitFailure;
}

std::string format_construction(const Construction& c, bool json) {
  if (json) {
    Json j;
    j["theorem"] = std::string(theorem_id(c.trace.theorem));
    j["case"] = c.trace.case_id;
    Json witnesses = Json::object();
    for (const Witness& w : c.trace.witnesses) witnesses[w.name] = w.value;
    j["witnesses"] = std::move(witnesses);
    j["partner"] = format_set(c.partner);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "# theorem: " << theorem_id(c.trace.theorem) << '\n';
  out << "# case: " << c.trace.case_id << '\n';
  for (const Witness& w : c.trace.witnesses) out << "# " << w.name << ": " << w.value << '\n';
  write_set(out, c.partner);
  return out.str();
}

int construct(const Options& opt, std::ostream& out, bool want_spectrum) {
  const GroupSet set = load(opt.input, opt);
  const std::optional<GroupSet> partner = load_partner(set, opt);
  const Construction c = want_spectrum ? spectrum_from_tile(set, partner) : complement_from_spectrum(set, partner);
  emit(opt, out, format_construction(c, opt.json));
  return kExitOk;
}

int check_pair(const Options& opt, std::ostream& out) {
  const GroupSet a = load(opt.input, opt);
  const GroupSet b = load(opt.second, opt);
  if (!(a.params() == b.params())) {
    throw ParameterError(opt.input + " and " + opt.second + " use different groups: " + to_string(a.params()) +
                         " vs " + to_string(b.params()));
  }
  const PairCheck check = opt.mode == "tiling" ? check_tiling_pair(a, b) : check_spectral_pair(a, b);
  if (opt.json) {
    Json j;
    j["mode"] = opt.mode;
    j["verdict"] = check.ok;
    j["witness"] = check.witness ? Json(to_string(*check.witness)) : Json(nullptr);
    j["reason"] = check.reason;
    out << j.dump(2) << '\n';
  } else {
    out << (check.ok ? "true" : "false") << '\n';
    if (check.witness) out << "witness: " << to_string(*check.witness) << '\n';
    if (!check.ok) out << "reason: " << check.reason << '\n';
  }
  return check.ok ? kExitOk : kExitFailure;
}

int search(const Options& opt, std::ostream& out) {
  const GroupSet set = load(opt.input, opt);
  const std::optional<GroupSet> found =
      opt.mode == "tiling" ? find_complement_bruteforce(set) : find_spectrum_bruteforce(set);
  if (opt.json) {
    Json j;
    j["mode"] = opt.mode;
    j["partner"] = found ? Json(format_set(*found)) : Json(nullptr);
    emit(opt, out, j.dump(2) + "\n");
  } else {
    emit(opt, out, found ? format_set(*found) : std::string("none\n"));
  }
  return found ? kExitOk : kExitFailure;
}

int enumerate(const Options& opt, std::ostream& out) {
  EnumerationOptions options;
  if (!opt.sizes.empty()) options.sizes = opt.sizes;
  options.canonical = opt.canonical;
  options.shards = opt.shards;
  options.threads = opt.threads;
  options.max_listed = opt.max_listed;
  const EnumerationReport report = enumerate_and_check(params_from_flags(opt), options);
  emit(opt, out, opt.json ? format_report_json(report, opt.timing) : format_report(report, opt.timing));
  return report.clean() ? kExitOk : kExitFailure;
}

int oracle_compare_command(const Options& opt, std::ostream& out, const ZeroTest& zero_test) {
  const OracleCompareReport report = oracle_compare(params_from_flags(opt), opt.trials, opt.seed, zero_test);
  if (opt.json) {
    Json j;
    j["params"] = {{"p", report.params.p()}, {"n", report.params.n()}};
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["exact_zeros"] = report.zeros;
    Json list = Json::array();
    for (const OracleDiscrepancy& d : report.discrepancies) {
      list.push_back({{"trial", d.trial}, {"set", format_set(d.set)}, {"u", to_string(d.u)},
                      {"counting", d.counting}, {"exact", d.exact}});
    }
    j["discrepancies"] = std::move(list);
    out << j.dump(2) << '\n';
  } else {
    out << "params: p=" << report.params.p() << " n=" << report.params.n() << '\n';
    out << "trials: " << report.trials << '\n';
    out << "seed: " << report.seed << '\n';
    out << "exact_zeros: " << report.zeros << '\n';
    out << "discrepancies: " << report.discrepancies.size() << '\n';
    for (const OracleDiscrepancy& d : report.discrepancies) {
      out << "[trial " << d.trial << "] u=" << to_string(d.u) << " counting=" << d.counting
          << " exact=" << d.exact << '\n'
          << format_set(d.set);
    }
  }
  return report.discrepancies.empty() ? kExitOk : kExitFailure;
}

void add_group_flags(CLI::App& cmd, Options& opt, bool required) {
  auto* p = cmd.add_option("--p", opt.p, "prime p");
  auto* n = cmd.add_option("--n", opt.n, "exponent n >= 1");
  if (required) {
    p->required();
    n->required();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const ZeroTest& zero_test) {
  CLI::App app{"Spectral sets and tiles in Z_p x Z_{p^n}", "fuglede"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze_cmd = app.add_subcommand("analyze", "zero set, size class and divisibility of a set");
  analyze_cmd->add_option("set", opt.input, "set file")->required();
  add_group_flags(*analyze_cmd, opt, false);
  analyze_cmd->add_flag("--json", opt.json);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "construct a spectrum for a tile");
  auto* complement_cmd = app.add_subcommand("complement", "construct a tiling complement for a spectral set");
  for (auto* cmd : {spectrum_cmd, complement_cmd}) {
    cmd->add_option("set", opt.input, "set file")->required();
    cmd->add_option("--partner", opt.partner, "known tiling complement / spectrum of the set");
    cmd->add_option("--out", opt.out_path, "write the result here instead of stdout");
    add_group_flags(*cmd, opt, false);
    cmd->add_flag("--json", opt.json);
  }

  auto* check_cmd = app.add_subcommand("check-pair", "verify a spectral or tiling pair");
  check_cmd->add_option("first", opt.input, "set file A")->required();
  check_cmd->add_option("second", opt.second, "set file B or T")->required();
  check_cmd->add_option("--mode", opt.mode, "spectral or tiling")
      ->required()
      ->check(CLI::IsMember({"spectral", "tiling"}));
  add_group_flags(*check_cmd, opt, false);
  check_cmd->add_flag("--json", opt.json);

  auto* search_cmd = app.add_subcommand("search", "brute-force search for a spectrum or tiling complement");
  search_cmd->add_option("set", opt.input, "set file")->required();
  search_cmd->add_option("--mode", opt.mode, "spectral or tiling")
      ->required()
      ->check(CLI::IsMember({"spectral", "tiling"}));
  search_cmd->add_option("--out", opt.out_path, "write the result here instead of stdout");
  add_group_flags(*search_cmd, opt, false);
  search_cmd->add_flag("--json", opt.json);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "check tile <=> spectral over every subset of a group");
  add_group_flags(*enumerate_cmd, opt, true);
  enumerate_cmd->add_option("--sizes", opt.sizes, "only these cardinalities (comma separated)")->delimiter(',');
  enumerate_cmd->add_flag("--canonical", opt.canonical, "one representative per orbit of e -> a e + g");
  enumerate_cmd->add_option("--shards", opt.shards, "number of subset ranges")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--threads", opt.threads, "worker threads (0: automatic)");
  enumerate_cmd->add_option("--max-listed", opt.max_listed, "sets listed per report section");
  enumerate_cmd->add_option("--out", opt.out_path, "report path");
  enumerate_cmd->add_flag("--json", opt.json);
  enumerate_cmd->add_flag("--timing", opt.timing, "include wall time in the report");

  auto* compare_cmd = app.add_subcommand("oracle-compare", "random check of the counting zero test");
  add_group_flags(*compare_cmd, opt, true);
  compare_cmd->add_option("--trials", opt.trials, "number of random (A, u) pairs");
  compare_cmd->add_option("--seed", opt.seed, "std::mt19937_64 seed");
  compare_cmd->add_flag("--json", opt.json);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(opt, out);
    if (spectrum_cmd->parsed()) return construct(opt, out, true);
    if (complement_cmd->parsed()) return construct(opt, out, false);
    if (check_cmd->parsed()) return check_pair(opt, out);
    if (search_cmd->parsed()) return search(opt, out);
    if (enumerate_cmd->parsed()) return enumerate(opt, out);
    return oracle_compare_command(opt, out, zero_test);
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fuglede
