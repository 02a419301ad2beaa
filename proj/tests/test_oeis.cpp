#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "oracles.hpp"
#include "permxray/error.hpp"
#include "permxray/oeis.hpp"

using namespace permxray;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("permxray-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

oeis::Options offline_opts(const fs::path& cache) {
  oeis::Options o;
  o.cache_dir = cache;
  o.fixture_dir = PERMXRAY_TEST_FIXTURE_DIR;
  o.offline = true;
  return o;
}

std::string read(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("b-file parsing") {
  const auto t = oeis::parse_bfile("# comment\n\n1 1\n2 2\r\n3 5 # trailing\n");
  REQUIRE(t.size() == 3);
  CHECK(t[2].index == 3);
  CHECK(t[2].value == "5");
  CHECK(oeis::parse_bfile("0 123456789012345678901234567890")[0].value == "123456789012345678901234567890");
  CHECK_THROWS_AS(oeis::parse_bfile("1 1\n3 2\n"), ParseError);
  CHECK_THROWS_AS(oeis::parse_bfile("1 x\n"), ParseError);
  CHECK_THROWS_AS(oeis::parse_bfile("<html>\n"), ParseError);
  CHECK_THROWS_AS(oeis::parse_bfile("# nothing\n"), ParseError);
}

TEST_CASE("ids") {
  CHECK(oeis::is_valid_id("A002047"));
  CHECK_FALSE(oeis::is_valid_id("A19589"));
  CHECK_FALSE(oeis::is_valid_id("a002047"));
  CHECK(oeis::bfile_name("A002047") == "b002047.txt");
  TempDir d;
  oeis::Client c(offline_opts(d.path));
  CHECK_THROWS_AS(c.fetch("A19589"), ParseError);
}

TEST_CASE("bundled fixtures") {
  TempDir d;
  oeis::Client c(offline_opts(d.path));
  const auto a = c.fetch("A002047");
  CHECK(a.source == oeis::Source::fixture);
  CHECK(a.value_at(0) == "1");
  CHECK(a.value_at(3) == "28");
  const auto inv = c.fetch("A000085");
  for (int n = 0; n <= 12; ++n) CHECK(inv.value_at(n) == std::to_string(oracle::involutions(n)));
  // a(k) = (2^(2k-1) + 1)/3 sits at index k-1
  const auto a7583 = c.fetch("A007583");
  for (int k = 1; k <= 10; ++k) CHECK(a7583.value_at(k - 1) == std::to_string(((1ULL << (2 * k - 1)) + 1) / 3));
  for (const char* id : {"A019589", "A002047", "A000571", "A000085", "A097296", "A037224", "A047729", "A007583"})
    CHECK_NOTHROW(c.fetch(id));
  // fixtures are never copied into the cache
  CHECK_FALSE(fs::exists(d.path / "b002047.txt"));
  CHECK_THROWS_AS(c.fetch("A000001"), NotFound);
}

TEST_CASE("comparison") {
  TempDir d;
  oeis::Client c(offline_opts(d.path));
  const std::vector<std::uint64_t> x = {1, 2, 5, 16, 59, 246, 1105, 5270};
  CHECK(c.compare("A019589", x, 1).verdict() == oeis::Verdict::agree);
  CHECK(c.compare("A019589", x, 0).verdict() == oeis::Verdict::disagree);
  CHECK(c.compare("A019589", std::vector<std::uint64_t>{}, 1).verdict() == oeis::Verdict::agree);
  std::vector<std::uint64_t> s = {1, 1, 2, 4, 9, 22, 59, 167, 490};
  s[4] = 10;
  const auto bad = c.compare("A000571", s, 1);
  CHECK(bad.verdict() == oeis::Verdict::disagree);
  CHECK(bad.mismatched_indices() == std::vector<std::int64_t>{5});
  const std::vector<std::uint64_t> long_run(40, 1);
  CHECK(c.compare("A002047", long_run, 0).verdict() == oeis::Verdict::disagree);
  CHECK(c.compare("A002047", std::vector<std::uint64_t>{244, 1}, 4).verdict() == oeis::Verdict::incomplete);
}

TEST_CASE("fake transport: cache round trip and errors") {
  TempDir d;
  oeis::Options o = offline_opts(d.path / "cache");
  o.offline = false;
  o.fixture_dir = d.path / "no-fixtures";
  int calls = 0;
  oeis::Client c(o, [&](const std::string& path) {
    ++calls;
    if (path == "/A000085/b000085.txt") return oeis::HttpResponse{200, "0 1\n1 1\n2 2\n3 4\n", ""};
    if (path == "/A999999/b999999.txt") return oeis::HttpResponse{200, "<html>oops</html>\n", ""};
    if (path == "/A123456/b123456.txt") return oeis::HttpResponse{0, "", "connection refused"};
    return oeis::HttpResponse{404, "", ""};
  });
  const auto first = c.fetch("A000085");
  CHECK(first.source == oeis::Source::network);
  CHECK(fs::exists(d.path / "cache" / "b000085.txt"));
  const auto second = c.fetch("A000085");
  CHECK(second.source == oeis::Source::cache);
  CHECK(second.terms == first.terms);
  CHECK(calls == 1);
  CHECK_THROWS_AS(c.fetch("A000001"), NotFound);
  CHECK_THROWS_AS(c.fetch("A123456"), NetworkError);
  CHECK_THROWS_AS(c.fetch("A999999"), ParseError);
  CHECK_FALSE(fs::exists(d.path / "cache" / "b999999.txt"));
  for (const auto& e : fs::directory_iterator(d.path / "cache"))
    CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
}

TEST_CASE("transport failure falls back to the fixture") {
  TempDir d;
  oeis::Options o = offline_opts(d.path);
  o.offline = false;
  oeis::Client c(o, [](const std::string&) { return oeis::HttpResponse{0, "", "no route"}; });
  const auto s = c.fetch("A002047");
  CHECK(s.source == oeis::Source::fixture);
  CHECK_FALSE(fs::exists(d.path / "b002047.txt"));
}

TEST_CASE("offline never calls the transport") {
  TempDir d;
  bool called = false;
  oeis::Client c(offline_opts(d.path), [&](const std::string&) {
    called = true;
    return oeis::HttpResponse{};
  });
  CHECK(c.fetch("A002047").source == oeis::Source::fixture);
  CHECK_FALSE(called);
}

TEST_CASE("http transport against a local server") {
  httplib::Server svr;
  svr.Get("/A002047/b002047.txt", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("0 1\n1 2\n2 6\n3 28\n4 244\n", "text/plain");
  });
  const int port = svr.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { svr.listen_after_bind(); });
  svr.wait_until_ready();

  TempDir d;
  oeis::Options o;
  o.cache_dir = d.path / "cache";
  o.fixture_dir = d.path / "none";
  o.base_url = "http://127.0.0.1:" + std::to_string(port);
  o.timeout_seconds = 5;
  oeis::Client c(o);
  const auto s = c.fetch("A002047");
  CHECK(s.source == oeis::Source::network);
  CHECK(s.value_at(4) == "244");
  CHECK(read(d.path / "cache" / "b002047.txt") == "0 1\n1 2\n2 6\n3 28\n4 244\n");
  CHECK_THROWS_AS(c.fetch("A000085"), NotFound);
  svr.stop();
  t.join();

  oeis::Client dead(o);
  CHECK_THROWS_AS(dead.fetch("A000571"), NetworkError);
}

TEST_CASE("concurrent fetches of one id") {
  TempDir d;
  oeis::Options o = offline_opts(d.path / "cache");
  o.offline = false;
  std::atomic<int> calls{0};
  oeis::Client c(o, [&](const std::string&) {
    ++calls;
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
    return oeis::HttpResponse{200, "0 1\n1 1\n", ""};
  });
  std::vector<std::jthread> ts;
  for (int i = 0; i < 4; ++i) ts.emplace_back([&] { c.fetch("A000085"); });
  ts.clear();
  CHECK(calls == 1);
}
