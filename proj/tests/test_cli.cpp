#include <gtest/gtest.h>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "helpers.hpp"

using testing_helpers::data_path;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cvec");
  std::ostringstream out, err;
  int code = cvec::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / ("cvec_test_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << content;
  return p.string();
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

int free_port() {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr);
  socklen_t len = sizeof addr;
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return ntohs(addr.sin_port);
}

}  // namespace

TEST(Cli, MutatePrintsFramedMatrix) {
  Result r = run({"mutate", data_path("matrices/a2.json"), "-k", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[[0,-1],[1,0],[-1,1],[0,1]]\n");
}

TEST(Cli, ExploreA3) {
  Result r = run({"explore", data_path("matrices/a3.json"), "--canonical", "--budget", "100"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(last_line(r.out), "14 seeds, exhausted, 0 violations");
  EXPECT_NE(r.out.find("positive (6)"), std::string::npos);
}

TEST(Cli, ExploreKroneckerNotExhausted) {
  Result r = run({"explore", data_path("matrices/kronecker.json"), "--budget", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "50 seeds, not exhausted, 0 violations");
}

TEST(Cli, Laurent) {
  Result r = run({"laurent", data_path("matrices/a2.json"), "--word", "1,2,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("NOT HOMOGENEOUS"), std::string::npos);
  EXPECT_NE(r.out.find("g = "), std::string::npos);
}

TEST(Cli, TautiltAndCvectors) {
  Result t = run({"tautilt", data_path("algebras/a3.json")});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(last_line(t.out), "14 silting records, exhausted");
  Result j = run({"tautilt", data_path("algebras/a2.json"), "--json"});
  ASSERT_EQ(j.code, 0);
  auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["records"].size(), 5u);
  EXPECT_TRUE(parsed["exhausted"].get<bool>());
  Result c = run({"cvectors", data_path("algebras/nakayama3.json")});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("cv+ (6)"), std::string::npos);
  EXPECT_EQ(last_line(c.out), "sign-coherence: ok");
}

TEST(Cli, SuitePasses) {
  Result r = run({"check", data_path("suite.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(last_line(r.out), "18/18 checks passed");
}

TEST(Cli, FailingSuiteExitsTwo) {
  const std::string dir = fs::path(data_path("suite.json")).parent_path().string();
  nlohmann::json suite{{"checks",
                        {{{"name", "wrong expectation"},
                          {"kind", "finite_type"},
                          {"matrix", dir + "/matrices/kronecker.json"},
                          {"budget", 50},
                          {"expect", "finite"}}}}};
  Result r = run({"check", temp_file("suite.json", suite.dump())});
  EXPECT_EQ(r.code, 2) << r.err;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, MalformedInputExitsOne) {
  EXPECT_EQ(run({"mutate", temp_file("bad.json", "{\"n\": 2,"), "-k", "1"}).code, 1);
  Result r = run({"mutate", temp_file("bad2.json", "{\"n\": 2,\n \"rows\": [[0,1],[1,0]]}"), "-k", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("skew"), std::string::npos);
  EXPECT_EQ(run({"mutate", data_path("matrices/a2.json"), "-k", "3"}).code, 1);
  EXPECT_EQ(run({"explore", data_path("matrices/a2.json"), "--budget", "0"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"tautilt", "/nonexistent.json"}).code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Serve, HttpRoundTrip) {
  const int port = free_port();
  std::ostringstream log;
  std::thread server([&] { cvec::cli::serve("127.0.0.1", port, log); });
  httplib::Client client("127.0.0.1", port);
  httplib::Result created;
  for (int attempt = 0; attempt < 100 && !created; ++attempt) {
    created = client.Post("/sessions", R"({"example":"a2"})", "application/json");
    if (!created) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  EXPECT_EQ(created->get_header_value("Access-Control-Allow-Origin"), "*");
  auto body = nlohmann::json::parse(created->body);
  const std::string id = body["id"];

  auto mutated = client.Post("/sessions/" + id + "/mutate", R"({"k":1})", "application/json");
  ASSERT_TRUE(mutated);
  EXPECT_EQ(mutated->status, 200);
  EXPECT_EQ(nlohmann::json::parse(mutated->body)["matrix"], nlohmann::json::parse("[[0,-1],[1,0],[-1,1],[0,1]]"));

  auto undone = client.Post("/sessions/" + id + "/undo", "", "application/json");
  ASSERT_TRUE(undone);
  EXPECT_EQ(nlohmann::json::parse(undone->body), body["state"]);

  auto again = client.Post("/sessions/" + id + "/undo", "", "application/json");
  ASSERT_TRUE(again);
  EXPECT_EQ(again->status, 409);
  auto missing = client.Get("/sessions/zzz");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  auto options = client.Options("/sessions");
  ASSERT_TRUE(options);
  EXPECT_EQ(options->status, 204);

  cvec::cli::stop_server();
  server.join();
}
