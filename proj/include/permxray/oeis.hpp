#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permxray::oeis {

enum class Source { network, cache, fixture };
const char* to_string(Source s);

// Values are kept as decimal text; b-files routinely exceed 64 bits.
struct Term {
  std::int64_t index = 0;
  std::string value;
  bool operator==(const Term&) const = default;
};

struct SequenceRef {
  std::string id;
  std::vector<Term> terms;
  Source source = Source::fixture;

  std::optional<std::string> value_at(std::int64_t index) const;
  std::int64_t offset() const { return terms.empty() ? 0 : terms.front().index; }
};

// "A" followed by exactly six digits.
bool is_valid_id(std::string_view id);
// b-file path component: A002047 -> b002047.txt
std::string bfile_name(std::string_view id);

// "index value" per line, '#' comments and blank lines skipped. Indices must
// be consecutive. Throws ParseError.
std::vector<Term> parse_bfile(std::string_view text);

struct HttpResponse {
  int status = 0;  // 0: transport failure
  std::string body;
  std::string error;
};

// GET of a path such as "/A002047/b002047.txt" against the configured host.
using Transport = std::function<HttpResponse(const std::string& path)>;

struct Options {
  std::filesystem::path cache_dir;
  std::filesystem::path fixture_dir;
  bool offline = false;
  std::string base_url = "https://oeis.org";
  int timeout_seconds = 20;

  // PERMXRAY_CACHE_DIR (else $XDG_CACHE_HOME/permxray/oeis, else
  // ~/.cache/permxray/oeis), PERMXRAY_FIXTURE_DIR (else the bundled data
  // directory) and PERMXRAY_OFFLINE=1.
  static Options from_environment();
};

Transport http_transport(const std::string& base_url, int timeout_seconds);

enum class Verdict { agree, disagree, incomplete };
const char* to_string(Verdict v);

struct ComparisonEntry {
  std::int64_t index = 0;
  std::string computed;
  std::optional<std::string> expected;  // nullopt: no term at this index
  bool match = false;
};

struct Comparison {
  std::string id;
  std::int64_t offset = 0;
  Source source = Source::fixture;
  std::vector<ComparisonEntry> entries;

  Verdict verdict() const;
  std::vector<std::int64_t> mismatched_indices() const;
};

// computed[j] is compared with the term at index offset + j.
Comparison compare(const SequenceRef& seq, std::span<const std::uint64_t> computed, std::int64_t offset);

// Cache, then network (unless offline), then bundled fixture. Network
// downloads are written to the cache atomically; fixtures never are, so a
// later online fetch replaces them.
class Client {
 public:
  explicit Client(Options opts);
  Client(Options opts, Transport transport);

  // Throws ParseError (malformed id or b-file), NotFound, NetworkError.
  SequenceRef fetch(const std::string& id);
  Comparison compare(const std::string& id, std::span<const std::uint64_t> computed, std::int64_t offset);

  const Options& options() const { return opts_; }

 private:
  std::optional<std::string> read_file(const std::filesystem::path& p) const;
  void write_cache(const std::string& id, const std::string& text) const;
  std::mutex& lock_for(const std::string& id);

  Options opts_;
  Transport transport_;
  std::mutex locks_guard_;
  std::map<std::string, std::mutex> locks_;
};

}  // namespace permxray::oeis
