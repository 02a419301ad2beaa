#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permxray/binary.hpp"
#include "permxray/degeneracy.hpp"
#include "permxray/reconstruct.hpp"
#include "permxray/sweep.hpp"

namespace permxray::report {

using json = nlohmann::json;

inline constexpr const char* kSchema = "permxray/1";

// Two-space indented JSON with sorted keys and a trailing newline.
std::string dump(const json& j);
std::string sha256_hex(std::string_view data);

using Histogram = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// "C(n)=rows: a(b),a(b),..."
std::string histogram_line(int n, const Histogram& h);
std::string histogram_line(const DegeneracyReport& r);

// Cell-by-cell comparison of a computed histogram with a printed one.
struct HistogramDiff {
  bool has_published = false;
  bool matches = false;
  std::vector<std::string> notes;
};

HistogramDiff diff_published(const DegeneracyReport& r);

json to_json(const DegeneracyReport& r, bool include_classes);
// Histogram line followed by one "NOTE: ..." line per published discrepancy.
std::string to_table(const DegeneracyReport& r);

json to_json(const SolveOutcome& o, double elapsed_ms);
json to_json(const CirculantReport& r);

struct RunRecord {
  std::string command;
  std::map<std::string, std::string> params;
  std::string result_digest;  // SHA-256 of the emitted JSON
  std::string timestamp;      // UTC, ISO 8601
  double elapsed_ms = 0;
};

json to_json(const RunRecord& r);
std::string utc_timestamp(std::chrono::system_clock::time_point t = std::chrono::system_clock::now());

struct ReportOptions {
  int counts_max_n = 8;       // x_n / x_max table
  int classes_max_n = 7;      // C(n) lines
  int palindromic_max_n = 9;  // l_n table
  std::vector<int> circulant_orders = {3, 5};
  SweepOptions sweep{10, 1};
};

struct ReportResult {
  std::vector<RunRecord> records;
  std::filesystem::path manifest;
};

// Writes xray_counts, degeneracy_classes, circulant and palindromic tables as
// <name>.json and <name>.txt plus manifest.json. Table files depend only on
// the options; timestamps appear only in the manifest. Throws IoError.
ReportResult generate_report(const std::filesystem::path& out_dir, const ReportOptions& opts = {});

}  // namespace permxray::report
