#include <gtest/gtest.h>

#include <thread>

#include "cvec/session.hpp"

using namespace cvec;

namespace {

std::string create_id(SessionService& s, const std::string& example) {
  ApiResponse r = s.handle("POST", "/sessions", Json{{"example", example}}.dump());
  EXPECT_EQ(r.status, 201);
  return r.body["id"].get<std::string>();
}

}  // namespace

TEST(Session, ExamplesListed) {
  SessionService s;
  ApiResponse r = s.handle("GET", "/examples", "");
  EXPECT_EQ(r.status, 200);
  ASSERT_TRUE(r.body.is_array());
  EXPECT_EQ(r.body.size(), 6u);
}

TEST(Session, MatrixMutateUndoRoundTrip) {
  SessionService s;
  ApiResponse c = s.handle("POST", "/sessions", R"({"example":"a2"})");
  ASSERT_EQ(c.status, 201);
  const std::string id = c.body["id"];
  const Json initial = c.body["state"];
  EXPECT_EQ(initial["matrix"], Json::parse("[[0,1],[-1,0],[1,0],[0,1]]"));
  EXPECT_EQ(initial["signs"], Json::parse(R"(["positive","positive"])"));

  ApiResponse m = s.handle("POST", "/sessions/" + id + "/mutate", R"({"k":1})");
  ASSERT_EQ(m.status, 200);
  EXPECT_EQ(m.body["matrix"], Json::parse("[[0,-1],[1,0],[-1,1],[0,1]]"));
  EXPECT_EQ(m.body["word"], Json::parse("[1]"));
  EXPECT_EQ(m.body["signs"], Json::parse(R"(["negative","positive"])"));
  EXPECT_EQ(m.body["history"], 1);

  ApiResponse u = s.handle("POST", "/sessions/" + id + "/undo", "");
  ASSERT_EQ(u.status, 200);
  EXPECT_EQ(u.body, initial);
  EXPECT_EQ(s.handle("GET", "/sessions/" + id, "").body, initial);
  EXPECT_EQ(s.handle("POST", "/sessions/" + id + "/undo", "").status, 409);
}

TEST(Session, PentagonThroughApi) {
  SessionService s;
  const std::string id = create_id(s, "a2");
  Json last;
  for (int k : {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}) last = s.mutate(id, Json{{"k", k}}).body;
  EXPECT_EQ(last["matrix"], Json::parse("[[0,1],[-1,0],[1,0],[0,1]]"));
  EXPECT_EQ(last["history"], 10);
}

TEST(Session, AlgebraMode) {
  SessionService s;
  const std::string id = create_id(s, "nakayama3");
  ApiResponse g = s.get(id);
  EXPECT_EQ(g.body["mode"], "algebra");
  EXPECT_EQ(g.body["g_matrix"], Json::parse("[[1,0,0],[0,1,0],[0,0,1]]"));
  ApiResponse m = s.mutate(id, Json{{"k", 2}});
  ASSERT_EQ(m.status, 200);
  EXPECT_EQ(m.body["word"], Json::parse("[2]"));
  EXPECT_EQ(m.body["g_vectors"].size(), 3u);
  EXPECT_EQ(s.undo(id).body, g.body);

  Json custom{{"mode", "algebra"},
              {"payload", Json::parse(R"({"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]})")}};
  ApiResponse c = s.create(custom);
  EXPECT_EQ(c.status, 201);
  EXPECT_EQ(c.body["state"]["n"], 2);
}

TEST(Session, Errors) {
  SessionService s;
  EXPECT_EQ(s.handle("POST", "/sessions", "{oops").status, 400);
  EXPECT_EQ(s.handle("POST", "/sessions", R"({"example":"e9"})").status, 404);
  EXPECT_EQ(s.handle("POST", "/sessions", R"({"mode":"tensor","payload":{}})").status, 400);
  EXPECT_EQ(s.handle("POST", "/sessions", R"({"mode":"matrix","payload":{"n":2,"rows":[[0,1],[1,0]]}})").status, 400);
  EXPECT_EQ(s.handle("POST", "/sessions", R"({"mode":"matrix","payload":{"n":1,"rows":[[0],[1]]}})").status, 400);
  EXPECT_EQ(s.handle("GET", "/sessions/nope", "").status, 404);
  EXPECT_EQ(s.handle("GET", "/elsewhere", "").status, 404);
  const std::string id = create_id(s, "a3");
  EXPECT_EQ(s.handle("POST", "/sessions/" + id + "/mutate", R"({"k":0})").status, 400);
  EXPECT_EQ(s.handle("POST", "/sessions/" + id + "/mutate", R"({"k":4})").status, 400);
  EXPECT_EQ(s.handle("POST", "/sessions/" + id + "/mutate", R"({"k":"1"})").status, 400);
  ApiResponse bad = s.handle("POST", "/sessions/" + id + "/mutate", "{}");
  EXPECT_TRUE(bad.body.contains("error"));
}

TEST(Session, ConcurrentSessionsAreIndependent) {
  SessionService s;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(create_id(s, "markov"));
  std::vector<std::thread> threads;
  for (const auto& id : ids)
    threads.emplace_back([&s, id] {
      for (int step = 0; step < 20; ++step) s.mutate(id, Json{{"k", 1 + step % 3}});
    });
  for (auto& t : threads) t.join();
  const Json first = s.get(ids[0]).body;
  for (const auto& id : ids) {
    Json st = s.get(id).body;
    EXPECT_EQ(st["history"], 20);
    EXPECT_EQ(st["matrix"], first["matrix"]);
  }
}
