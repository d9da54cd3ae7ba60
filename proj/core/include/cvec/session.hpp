#pragma once

// Mutation sessions behind the local HTTP API. Transport-free: the server
// in tools/ forwards method, path and body to handle().

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "cvec/io.hpp"

namespace cvec {

struct ApiResponse {
  int status = 200;
  Json body;
};

class SessionService {
 public:
  ApiResponse handle(const std::string& method, const std::string& path, const std::string& body);

  ApiResponse create(const Json& request);
  ApiResponse mutate(const std::string& id, const Json& request);
  ApiResponse undo(const std::string& id);
  ApiResponse get(const std::string& id);
  static Json examples();

 private:
  struct MatrixLineage {
    IntMatrix d;
    std::vector<PatternSeed> seeds;
  };
  struct AlgebraLineage {
    AlgebraPtr alg;
    std::vector<SiltingRecord> records;
  };
  struct Session {
    std::string id;
    std::mutex mutex;  // serializes requests within the session
    std::variant<MatrixLineage, AlgebraLineage> lineage;
  };

  std::shared_ptr<Session> find(const std::string& id);
  static Json state(const Session& s);

  std::mutex mutex_;
  std::size_t next_id_ = 1;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace cvec
