#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "permxray/binary.hpp"
#include "permxray/degeneracy.hpp"
#include "permxray/error.hpp"
#include "permxray/oeis.hpp"
#include "permxray/reconstruct.hpp"
#include "permxray/report.hpp"
#include "permxray/verify.hpp"

using namespace permxray;
using report::json;

namespace {

struct Globals {
  unsigned threads = 1;
  bool offline = false;
  int limit_n = 10;
  std::string cache_dir;
};

oeis::Options oeis_options(const Globals& g) {
  oeis::Options o = oeis::Options::from_environment();
  if (g.offline) o.offline = true;
  if (!g.cache_dir.empty()) o.cache_dir = g.cache_dir;
  return o;
}

SweepOptions sweep_options(const Globals& g) { return {g.limit_n, g.threads}; }

std::vector<std::uint64_t> parse_values(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidArgument("not a nonnegative integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"X-rays of permutations: compute, enumerate, reconstruct, verify"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "worker threads for exhaustive sweeps (0 = all cores)");
  app.add_flag("--offline", g.offline, "never contact the sequence server");
  app.add_option("--limit-n", g.limit_n, "largest order any exhaustive command may touch");
  app.add_option("--cache-dir", g.cache_dir, "b-file cache directory");

  // xray
  auto* xray_cmd = app.add_subcommand("xray", "print the X-ray of a permutation");
  std::string perm_text;
  bool diagonal = false;
  xray_cmd->add_option("perm", perm_text, "one-line permutation, digits or comma list")->required();
  xray_cmd->add_flag("--diagonal", diagonal, "diagonal instead of antidiagonal sums");

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "degeneracy classes of S_n");
  int classes_n = 0;
  bool as_json = false, as_table = false, full = false;
  classes_cmd->add_option("n", classes_n, "order")->required();
  auto* json_flag = classes_cmd->add_flag("--json", as_json, "JSON output");
  classes_cmd->add_flag("--table", as_table, "text table output (default)")->excludes(json_flag);
  classes_cmd->add_flag("--full", full, "list every class with its members");

  // reconstruct
  auto* rec_cmd = app.add_subcommand("reconstruct", "permutations with a given X-ray");
  std::string word_text, mode_text = "decide";
  std::uint64_t node_budget = SolveOptions{}.node_budget;
  rec_cmd->add_option("word", word_text, "target word, digits or comma list")->required();
  rec_cmd->add_option("--mode", mode_text, "decide, count or enumerate")->check(CLI::IsMember({"decide", "count", "enumerate"}));
  rec_cmd->add_option("--node-budget", node_budget, "node cap for decide mode");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a proposition or conjecture");
  std::string prop;
  int verify_max_n = 0;
  bool verify_json = false;
  verify_cmd->add_option("proposition", prop, "1..6, conj-binary, conj-adjacent, conj-zerotwo")
      ->required()
      ->check(CLI::IsMember(propositions()));
  verify_cmd->add_option("--max-n", verify_max_n, "largest order to check");
  verify_cmd->add_flag("--json", verify_json, "JSON output");

  // report
  auto* report_cmd = app.add_subcommand("report", "write every table as JSON and text");
  std::string out_dir;
  report_cmd->add_option("--out", out_dir, "output directory")->required();

  // oeis
  auto* oeis_cmd = app.add_subcommand("oeis", "sequence reference data");
  oeis_cmd->require_subcommand(1);
  auto* fetch_cmd = oeis_cmd->add_subcommand("fetch", "print the terms of a sequence");
  std::string seq_id;
  fetch_cmd->add_option("id", seq_id, "A-number, e.g. A002047")->required();
  auto* compare_cmd = oeis_cmd->add_subcommand("compare", "compare values with a sequence");
  std::string values_text;
  std::int64_t offset = 0;
  compare_cmd->add_option("id", seq_id, "A-number")->required();
  compare_cmd->add_option("values", values_text, "comma separated values")->required();
  compare_cmd->add_option("--offset", offset, "sequence index of the first value")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*xray_cmd) {
      const Permutation p = Permutation::parse(perm_text);
      std::cout << (diagonal ? diagonal_xray(p) : xray(p)).to_string() << "\n";
      return 0;
    }
    if (*classes_cmd) {
      const DegeneracyReport r = enumerate_classes(classes_n, sweep_options(g), full);
      if (as_json) {
        std::cout << report::dump(report::to_json(r, full));
      } else {
        std::cout << report::to_table(r);
        if (full)
          for (const auto& [key, cls] : r.classes) {
            std::cout << key << " " << cls.size << ":";
            for (const auto& m : cls.members) std::cout << " " << m.to_string();
            std::cout << "\n";
          }
      }
      return 0;
    }
    if (*rec_cmd) {
      SolveOptions so;
      so.max_n = g.limit_n;
      so.node_budget = node_budget;
      so.threads = g.threads;
      const auto start = std::chrono::steady_clock::now();
      const auto inst = ReconstructionInstance::from_word(parse_word(word_text));
      const SolveOutcome o = solve(inst, parse_solve_mode(mode_text), so);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cout << report::dump(report::to_json(o, ms));
      return 0;
    }
    if (*verify_cmd) {
      oeis::Client client(oeis_options(g));
      VerifyOptions vo;
      vo.max_n = verify_max_n;
      vo.limit_n = g.limit_n;
      vo.sweep = sweep_options(g);
      vo.client = &client;
      const VerifyResult r = verify(prop, vo);
      if (verify_json) {
        std::cout << report::dump(r.details);
      } else {
        std::cout << "verify " << prop << ": " << to_string(r.status) << "\n";
        for (const auto& e : r.evidence) std::cout << "  " << e << "\n";
      }
      return r.exit_code();
    }
    if (*report_cmd) {
      report::ReportOptions ro;
      ro.sweep = sweep_options(g);
      const auto res = report::generate_report(out_dir, ro);
      for (const auto& rec : res.records) std::cout << rec.command << " " << rec.result_digest << "\n";
      std::cout << "manifest " << res.manifest.string() << "\n";
      return 0;
    }
    if (*oeis_cmd) {
      oeis::Client client(oeis_options(g));
      if (*fetch_cmd) {
        const oeis::SequenceRef s = client.fetch(seq_id);
        std::cout << "# " << s.id << " source=" << oeis::to_string(s.source) << "\n";
        for (const auto& t : s.terms) std::cout << t.index << " " << t.value << "\n";
        return 0;
      }
      const auto values = parse_values(values_text);
      const oeis::Comparison c = client.compare(seq_id, values, offset);
      for (const auto& e : c.entries)
        std::cout << e.index << " " << e.computed << " " << e.expected.value_or("-") << " "
                  << (e.match ? "ok" : "MISMATCH") << "\n";
      std::cout << c.id << " " << oeis::to_string(c.verdict()) << " (source " << oeis::to_string(c.source) << ")\n";
      return c.verdict() == oeis::Verdict::disagree ? 1 : c.verdict() == oeis::Verdict::agree ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
