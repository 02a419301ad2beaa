#include "permxray/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "httplib.h"

#include "permxray/error.hpp"

#ifndef PERMXRAY_BUNDLED_FIXTURE_DIR
#define PERMXRAY_BUNDLED_FIXTURE_DIR "data/oeis"
#endif

namespace permxray::oeis {

namespace fs = std::filesystem;

const char* to_string(Source s) {
  switch (s) {
    case Source::network:
      return "network";
    case Source::cache:
      return "cache";
    case Source::fixture:
      return "fixture";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::agree:
      return "agree";
    case Verdict::disagree:
      return "disagree";
    case Verdict::incomplete:
      return "incomplete";
  }
  return "?";
}

std::optional<std::string> SequenceRef::value_at(std::int64_t index) const {
  if (terms.empty()) return std::nullopt;
  const std::int64_t pos = index - terms.front().index;
  if (pos < 0 || pos >= static_cast<std::int64_t>(terms.size())) return std::nullopt;
  return terms[static_cast<std::size_t>(pos)].value;
}

bool is_valid_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::vector<Term> parse_bfile(std::string_view text) {
  std::vector<Term> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a) || a[0] == '#') continue;
    if (!(ls >> b) || (ls >> extra && extra[0] != '#') || !is_integer_text(a) || !is_integer_text(b))
      throw ParseError("b-file line " + std::to_string(lineno) + ": expected 'index value', got '" + line + "'");
    Term t{std::stoll(a), b};
    if (!terms.empty() && t.index != terms.back().index + 1)
      throw ParseError("b-file line " + std::to_string(lineno) + ": index " + a + " does not follow " +
                       std::to_string(terms.back().index));
    terms.push_back(std::move(t));
  }
  if (terms.empty()) throw ParseError("b-file has no terms");
  return terms;
}

Options Options::from_environment() {
  Options o;
  if (const char* c = std::getenv("PERMXRAY_CACHE_DIR"); c && *c) {
    o.cache_dir = c;
  } else if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
    o.cache_dir = fs::path(x) / "permxray" / "oeis";
  } else if (const char* h = std::getenv("HOME"); h && *h) {
    o.cache_dir = fs::path(h) / ".cache" / "permxray" / "oeis";
  } else {
    o.cache_dir = fs::temp_directory_path() / "permxray-oeis";
  }
  const char* f = std::getenv("PERMXRAY_FIXTURE_DIR");
  o.fixture_dir = f && *f ? fs::path(f) : fs::path(PERMXRAY_BUNDLED_FIXTURE_DIR);
  const char* off = std::getenv("PERMXRAY_OFFLINE");
  o.offline = off && *off && std::string(off) != "0";
  return o;
}

Transport http_transport(const std::string& base_url, int timeout_seconds) {
  return [base_url, timeout_seconds](const std::string& path) {
    HttpResponse r;
    try {
      httplib::Client cli(base_url);
      cli.set_connection_timeout(timeout_seconds);
      cli.set_read_timeout(timeout_seconds);
      cli.set_follow_location(true);
      auto res = cli.Get(path);
      if (!res) {
        r.error = httplib::to_string(res.error());
        return r;
      }
      r.status = res->status;
      r.body = std::move(res->body);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    return r;
  };
}

Verdict Comparison::verdict() const {
  bool missing = false;
  for (const auto& e : entries) {
    if (!e.expected) {
      missing = true;
    } else if (!e.match) {
      return Verdict::disagree;
    }
  }
  return missing ? Verdict::incomplete : Verdict::agree;
}

std::vector<std::int64_t> Comparison::mismatched_indices() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries)
    if (e.expected && !e.match) out.push_back(e.index);
  return out;
}

Comparison compare(const SequenceRef& seq, std::span<const std::uint64_t> computed, std::int64_t offset) {
  Comparison c;
  c.id = seq.id;
  c.offset = offset;
  c.source = seq.source;
  for (std::size_t j = 0; j < computed.size(); ++j) {
    ComparisonEntry e;
    e.index = offset + static_cast<std::int64_t>(j);
    e.computed = std::to_string(computed[j]);
    e.expected = seq.value_at(e.index);
    e.match = e.expected && *e.expected == e.computed;
    c.entries.push_back(std::move(e));
  }
  return c;
}

Client::Client(Options opts) : Client(opts, http_transport(opts.base_url, opts.timeout_seconds)) {}

Client::Client(Options opts, Transport transport) : opts_(std::move(opts)), transport_(std::move(transport)) {}

std::mutex& Client::lock_for(const std::string& id) {
  std::lock_guard<std::mutex> g(locks_guard_);
  return locks_[id];
}

std::optional<std::string> Client::read_file(const fs::path& p) const {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Client::write_cache(const std::string& id, const std::string& text) const {
  std::error_code ec;
  fs::create_directories(opts_.cache_dir, ec);
  if (ec) throw IoError("cannot create cache directory " + opts_.cache_dir.string() + ": " + ec.message());
  std::random_device rd;
  const fs::path final_path = opts_.cache_dir / bfile_name(id);
  const fs::path tmp = opts_.cache_dir / (bfile_name(id) + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw IoError("cannot write " + tmp.string());
  }
  fs::rename(tmp, final_path, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

SequenceRef Client::fetch(const std::string& id) {
  if (!is_valid_id(id)) throw ParseError("malformed OEIS id '" + id + "' (expected A followed by six digits)");
  std::lock_guard<std::mutex> guard(lock_for(id));
  SequenceRef ref;
  ref.id = id;

  if (auto text = read_file(opts_.cache_dir / bfile_name(id))) {
    ref.terms = parse_bfile(*text);
    ref.source = Source::cache;
    return ref;
  }

  std::string network_error;
  bool network_not_found = false;
  if (!opts_.offline) {
    const HttpResponse r = transport_("/" + id + "/" + bfile_name(id));
    if (r.status == 200) {
      ref.terms = parse_bfile(r.body);
      ref.source = Source::network;
      write_cache(id, r.body);
      return ref;
    }
    if (r.status == 404) {
      network_not_found = true;
    } else {
      network_error = r.status == 0 ? r.error : "HTTP status " + std::to_string(r.status);
    }
  }

  if (auto text = read_file(opts_.fixture_dir / bfile_name(id))) {
    ref.terms = parse_bfile(*text);
    ref.source = Source::fixture;
    return ref;
  }

  if (network_not_found || opts_.offline) throw NotFound(id + " not found" + (opts_.offline ? " (offline, no cache or fixture)" : ""));
  throw NetworkError("fetching " + id + " failed: " + network_error);
}

Comparison Client::compare(const std::string& id, std::span<const std::uint64_t> computed, std::int64_t offset) {
  return oeis::compare(fetch(id), computed, offset);
}

}  // namespace permxray::oeis
