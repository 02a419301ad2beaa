#include "permxray/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "permxray/error.hpp"
#include "permxray/published.hpp"
#include "permxray/structures.hpp"

namespace permxray::report {

namespace fs = std::filesystem;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(md[i]);
  return out.str();
}

std::string histogram_line(int n, const Histogram& h) {
  std::string s = "C(" + std::to_string(n) + ")=" + std::to_string(h.size()) + ":";
  for (std::size_t i = 0; i < h.size(); ++i)
    s += (i == 0 ? " " : ",") + std::to_string(h[i].first) + "(" + std::to_string(h[i].second) + ")";
  return s;
}

std::string histogram_line(const DegeneracyReport& r) {
  return histogram_line(r.n, Histogram(r.histogram.begin(), r.histogram.end()));
}

HistogramDiff diff_published(const DegeneracyReport& r) {
  HistogramDiff d;
  const auto& table = published::degeneracy_histograms();
  auto it = table.find(r.n);
  if (it == table.end()) return d;
  d.has_published = true;
  auto cell = [](std::uint64_t a, std::uint64_t b) { return std::to_string(a) + "(" + std::to_string(b) + ")"; };
  std::set<std::uint64_t> seen;
  for (const auto& [a, b] : it->second) {
    if (!seen.insert(a).second) {
      d.notes.push_back("printed cell " + cell(a, b) + " repeats class size " + std::to_string(a));
      continue;
    }
    auto c = r.histogram.find(a);
    if (c == r.histogram.end()) {
      d.notes.push_back("printed cell " + cell(a, b) + " has no computed class of size " + std::to_string(a));
    } else if (c->second != b) {
      d.notes.push_back("printed cell " + cell(a, b) + ", computed " + cell(a, c->second));
    }
  }
  for (const auto& [a, b] : r.histogram)
    if (!seen.contains(a)) d.notes.push_back("computed cell " + cell(a, b) + " is not printed");
  d.matches = d.notes.empty();
  return d;
}

json to_json(const DegeneracyReport& r, bool include_classes) {
  json j;
  j["schema"] = kSchema;
  j["n"] = r.n;
  j["distinct"] = r.distinct();
  j["total"] = r.total();
  j["line"] = histogram_line(r);
  json h = json::array();
  for (auto [a, b] : r.histogram) h.push_back({a, b});
  j["histogram"] = std::move(h);
  const HistogramDiff d = diff_published(r);
  if (d.has_published) j["published_notes"] = d.notes;
  if (include_classes) {
    json classes = json::array();
    for (const auto& [key, cls] : r.classes) {
      json c{{"word", key}, {"size", cls.size}};
      if (r.has_members) {
        json m = json::array();
        for (const auto& p : cls.members) m.push_back(p.to_string());
        c["members"] = std::move(m);
      }
      classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
  }
  return j;
}

std::string to_table(const DegeneracyReport& r) {
  std::string s = histogram_line(r) + "\n";
  for (const auto& note : diff_published(r).notes) s += "NOTE: " + note + "\n";
  return s;
}

json to_json(const SolveOutcome& o, double elapsed_ms) {
  json w = json::array();
  for (const auto& p : o.witnesses) w.push_back(p.to_string());
  json j{{"schema", kSchema},       {"mode", to_string(o.mode)},
         {"found", o.found},        {"count", o.count},
         {"witnesses", std::move(w)}, {"nodes_explored", o.nodes_explored},
         {"elapsed_ms", elapsed_ms}};
  if (!o.infeasible_reason.empty()) j["infeasible"] = o.infeasible_reason;
  return j;
}

json to_json(const CirculantReport& r) {
  auto frac = [](const std::optional<Fraction>& f) -> json { return f ? json(f->to_string()) : json(nullptr); };
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"perm", row.perm.to_string()},
                    {"word", format_word(row.word)},
                    {"d_direct", row.d_direct ? json(*row.d_direct) : json(nullptr)},
                    {"d_formula", frac(row.d_formula)},
                    {"d_factored", frac(row.d_factored)},
                    {"matches", row.matches}});
  }
  return {{"n", r.n},
          {"rows", std::move(rows)},
          {"index_map", r.index_map},
          {"agrees_up_to_reindexing", r.agrees_up_to_reindexing},
          {"mismatches", r.mismatches}};
}

json to_json(const RunRecord& r) {
  return {{"command", r.command},
          {"params", r.params},
          {"result_digest", r.result_digest},
          {"timestamp", r.timestamp},
          {"elapsed_ms", r.elapsed_ms}};
}

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

struct Table {
  std::string name;
  json data;
  std::string text;
  std::map<std::string, std::string> params;
};

std::string join_words(const std::vector<std::string>& words) {
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) s += (i ? "," : "") + words[i];
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

const DegeneracyReport& classes_for(int n, const ReportOptions& opts, std::map<int, DegeneracyReport>& cache) {
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_classes(n, opts.sweep, false)).first;
  return it->second;
}

Table xray_counts_table(const ReportOptions& opts, std::map<int, DegeneracyReport>& cache) {
  Table t{"xray_counts", json::object(), "", {{"max_n", std::to_string(opts.counts_max_n)}}};
  json rows = json::array();
  std::ostringstream txt;
  txt << pad("n", 2) << pad("x_n", 8) << "  " << "x_max" << "  delta  published\n";
  std::map<int, published::XrayCountRow> printed;
  for (const auto& row : published::xray_counts()) printed[row.n] = row;
  for (int n = 1; n <= opts.counts_max_n; ++n) {
    const DegeneracyReport& r = classes_for(n, opts, cache);
    const MaxDegeneracy m = max_degeneracy(r);
    std::vector<std::string> words;
    for (const auto& w : m.words) words.push_back(format_word(w));
    json row{{"n", n}, {"x_n", r.distinct()}, {"xmax_words", words}, {"xmax_delta", m.delta}};
    if (n >= 3) row["build_xmax"] = build_xmax(n).to_string();
    std::string status = "-";
    if (auto p = printed.find(n); p != printed.end()) {
      const bool same = p->second.x_n == r.distinct() && p->second.xmax_words == words &&
                        p->second.xmax_delta == m.delta;
      row["published"] = {{"x_n", p->second.x_n},
                          {"xmax_words", p->second.xmax_words},
                          {"xmax_delta", p->second.xmax_delta}};
      row["matches_published"] = same;
      status = same ? "match" : "differs";
    }
    txt << pad(std::to_string(n), 2) << pad(std::to_string(r.distinct()), 8) << "  " << join_words(words) << "  "
        << m.delta << "  " << status << "\n";
    rows.push_back(std::move(row));
  }
  t.data = {{"schema", kSchema}, {"table", t.name}, {"rows", std::move(rows)}};
  t.text = txt.str();
  return t;
}

Table classes_table(const ReportOptions& opts, std::map<int, DegeneracyReport>& cache) {
  Table t{"degeneracy_classes", json::object(), "", {{"max_n", std::to_string(opts.classes_max_n)}}};
  json rows = json::array();
  std::string txt;
  for (int n = 1; n <= opts.classes_max_n; ++n) {
    const DegeneracyReport& r = classes_for(n, opts, cache);
    json j = to_json(r, false);
    j.erase("schema");
    if (auto it = published::degeneracy_histograms().find(n); it != published::degeneracy_histograms().end())
      j["published_line"] = histogram_line(n, it->second);
    rows.push_back(std::move(j));
    txt += to_table(r);
  }
  t.data = {{"schema", kSchema}, {"table", t.name}, {"rows", std::move(rows)}};
  t.text = txt;
  return t;
}

Table circulant_table(const ReportOptions& opts) {
  std::string orders;
  for (int n : opts.circulant_orders) orders += (orders.empty() ? "" : ",") + std::to_string(n);
  Table t{"circulant", json::object(), "", {{"orders", orders}}};
  json rows = json::array();
  std::ostringstream txt;
  for (int n : opts.circulant_orders) {
    const CirculantReport r = circulant_formula_report(n);
    json j = to_json(r);
    json printed = json::array();
    if (auto it = published::circulant_table().find(n); it != published::circulant_table().end()) {
      for (const auto& row : it->second) {
        bool match = false;
        for (const auto& c : r.rows)
          if (c.perm.to_string() == row.perm)
            match = format_word(c.word) == row.word && c.d_direct && *c.d_direct == row.d;
        printed.push_back({{"perm", row.perm}, {"word", row.word}, {"d", row.d}, {"matches_direct", match}});
      }
    }
    j["published"] = std::move(printed);
    txt << "n=" << n << "\n";
    txt << pad("k", 3) << "  perm" << std::string(static_cast<std::size_t>(std::max(0, n - 4)), ' ') << "  word"
        << std::string(static_cast<std::size_t>(2 * n - 5), ' ') << "  d_direct  d_formula\n";
    for (const auto& row : r.rows) {
      std::string perm = row.perm.to_string(), word = format_word(row.word);
      perm.resize(std::max<std::size_t>(perm.size(), 4), ' ');
      txt << pad(std::to_string(row.k), 3) << "  " << perm << "  " << word << "  "
          << pad(row.d_direct ? std::to_string(*row.d_direct) : "-", 8) << "  "
          << pad(row.d_formula ? row.d_formula->to_string() : "-", 9) << "\n";
    }
    txt << "formula k -> direct k:";
    for (std::size_t k = 0; k < r.index_map.size(); ++k) {
      txt << " " << k << "->";
      if (r.index_map[k].empty()) txt << "none";
      for (std::size_t i = 0; i < r.index_map[k].size(); ++i) txt << (i ? "/" : "") << r.index_map[k][i];
    }
    txt << "\nNOTE: closed form agrees with direct values at the same k for " << (r.rows.size() - r.mismatches)
        << " of " << r.rows.size() << " rows\n";
    rows.push_back(std::move(j));
  }
  t.data = {{"schema", kSchema}, {"table", t.name}, {"rows", std::move(rows)}};
  t.text = txt.str();
  return t;
}

Table palindromic_table(const ReportOptions& opts) {
  Table t{"palindromic", json::object(), "", {{"max_n", std::to_string(opts.palindromic_max_n)}}};
  json rows = json::array();
  std::ostringstream txt;
  txt << pad("n", 2) << pad("l_n", 8) << pad("r_n", 6) << pad("l_n,A=D", 9) << "  published\n";
  const auto& printed = published::palindromic_counts();
  for (int n = 1; n <= opts.palindromic_max_n; ++n) {
    const std::uint64_t l = count_palindromic(n, opts.sweep);
    const std::uint64_t r = count_reverse_inverse_invariant(n, opts.sweep);
    const std::uint64_t lad = count_diag_eq_antidiag_palindromic(n, opts.sweep);
    json row{{"n", n}, {"l_n", l}, {"r_n", r}, {"l_n_A_eq_D", lad}};
    std::string status = "-";
    if (auto it = printed.find(n); it != printed.end()) {
      row["published_l_n"] = it->second;
      status = it->second == l ? "match" : "differs";
    }
    txt << pad(std::to_string(n), 2) << pad(std::to_string(l), 8) << pad(std::to_string(r), 6)
        << pad(std::to_string(lad), 9) << "  " << status << "\n";
    rows.push_back(std::move(row));
  }
  t.data = {{"schema", kSchema}, {"table", t.name}, {"rows", std::move(rows)}};
  t.text = txt.str();
  return t;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  out << text;
  if (!out.flush()) throw IoError("cannot write " + p.string());
}

}  // namespace

ReportResult generate_report(const fs::path& out_dir, const ReportOptions& opts) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir))
    throw IoError("cannot create output directory " + out_dir.string() + (ec ? ": " + ec.message() : ""));

  ReportResult result;
  std::map<int, DegeneracyReport> cache;
  using Builder = std::function<Table()>;
  const std::vector<Builder> builders = {
      [&] { return xray_counts_table(opts, cache); },
      [&] { return classes_table(opts, cache); },
      [&] { return circulant_table(opts); },
      [&] { return palindromic_table(opts); },
  };
  json manifest_records = json::array();
  for (const auto& build : builders) {
    const auto start = std::chrono::steady_clock::now();
    Table t = build();
    const std::string body = dump(t.data);
    write_file(out_dir / (t.name + ".json"), body);
    write_file(out_dir / (t.name + ".txt"), t.text);
    RunRecord rec;
    rec.command = "report." + t.name;
    rec.params = t.params;
    rec.result_digest = sha256_hex(body);
    rec.timestamp = utc_timestamp();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    manifest_records.push_back(to_json(rec));
    result.records.push_back(std::move(rec));
  }
  result.manifest = out_dir / "manifest.json";
  write_file(result.manifest, dump({{"schema", kSchema}, {"records", std::move(manifest_records)}}));
  return result;
}

}  // namespace permxray::report
