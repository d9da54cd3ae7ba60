#include "cvec/session.hpp"

#include "cvec/fixtures.hpp"

#include <cctype>

namespace cvec {

namespace {

ApiResponse error(int status, const std::string& what) { return {status, Json{{"error", what}}}; }

Json sign_classes(const IntMatrix& c) {
  Json out = Json::array();
  for (std::size_t j = 0; j < c.cols(); ++j) {
    std::string s = to_string(classify_sign(c.col(j)));
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    out.push_back(s);
  }
  return out;
}

Json example_payload(const std::string& name) {
  if (name == "nakayama3") return to_json(fixture_algebra(name));
  IntMatrix b = fixture_matrix(name);
  return Json{{"n", b.rows()}, {"rows", to_json(b)}};
}

}  // namespace

Json SessionService::examples() {
  Json out = Json::array();
  for (const auto& name : {"a2", "a3", "b2", "kronecker", "markov"})
    out.push_back(Json{{"name", name}, {"mode", "matrix"}, {"payload", example_payload(name)}});
  out.push_back(Json{{"name", "nakayama3"}, {"mode", "algebra"}, {"payload", example_payload("nakayama3")}});
  return out;
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Json SessionService::state(const Session& s) {
  Json out{{"id", s.id}};
  if (const auto* m = std::get_if<MatrixLineage>(&s.lineage)) {
    const PatternSeed& seed = m->seeds.back();
    out["mode"] = "matrix";
    out["word"] = one_based(seed.word);
    out["n"] = seed.matrix.rank();
    out["matrix"] = to_json(seed.matrix.entries());
    out["c_matrix"] = to_json(seed.cmatrix);
    out["g_matrix"] = to_json(seed.gmatrix);
    out["signs"] = sign_classes(seed.cmatrix);
    out["history"] = m->seeds.size() - 1;
    return out;
  }
  const auto& a = std::get<AlgebraLineage>(s.lineage);
  const SiltingRecord& r = a.records.back();
  out["mode"] = "algebra";
  out["word"] = one_based(r.word);
  out["n"] = a.alg->vertex_count();
  out["c_matrix"] = to_json(r.c_matrix);
  out["g_matrix"] = to_json(r.g_matrix);
  out["signs"] = sign_classes(r.c_matrix);
  Json g = Json::array(), h = Json::array();
  for (const auto& t : r.summands) {
    g.push_back(to_json(t.g_vector()));
    h.push_back(to_json(h0(t).dimension_vector()));
  }
  out["g_vectors"] = g;
  out["h0_dims"] = h;
  out["record"] = to_json(r);
  out["history"] = a.records.size() - 1;
  return out;
}

ApiResponse SessionService::create(const Json& request) {
  if (!request.is_object()) return error(400, "request body must be a JSON object");
  Json payload;
  std::string mode;
  if (request.contains("example")) {
    const Json& name = request["example"];
    if (!name.is_string()) return error(400, "field 'example': expected a string");
    Json found;
    for (const auto& e : examples())
      if (e["name"] == name) found = e;
    if (found.is_null()) return error(404, "unknown example " + name.get<std::string>());
    payload = found["payload"];
    mode = found["mode"].get<std::string>();
  } else {
    if (!request.contains("mode") || !request["mode"].is_string()) return error(400, "field 'mode': expected \"matrix\" or \"algebra\"");
    if (!request.contains("payload")) return error(400, "field 'payload': missing");
    mode = request["mode"].get<std::string>();
    payload = request["payload"];
  }
  auto s = std::make_shared<Session>();
  try {
    if (mode == "matrix") {
      MatrixFile mf = matrix_file_from_json(payload);
      if (!mf.square()) return error(400, "field 'payload.rows': matrix sessions start from a square exchange matrix");
      s->lineage = MatrixLineage{*skew_symmetrizer(mf.rows), {root_seed(mf.rows)}};
    } else if (mode == "algebra") {
      AlgebraPtr alg = Algebra::create(algebra_from_json(payload));
      s->lineage = AlgebraLineage{alg, {root_record(alg)}};
    } else {
      return error(400, "field 'mode': expected \"matrix\" or \"algebra\"");
    }
  } catch (const Error& e) {
    return error(400, e.what());
  }
  {
    std::lock_guard lock(mutex_);
    s->id = "s" + std::to_string(next_id_++);
    sessions_.emplace(s->id, s);
  }
  std::lock_guard lock(s->mutex);
  return {201, Json{{"id", s->id}, {"state", state(*s)}}};
}

ApiResponse SessionService::mutate(const std::string& id, const Json& request) {
  auto s = find(id);
  if (!s) return error(404, "unknown session " + id);
  if (!request.is_object() || !request.contains("k") || !request["k"].is_number_integer())
    return error(400, "field 'k': expected a one-based integer index");
  const long long k = request["k"].get<long long>();
  std::lock_guard lock(s->mutex);
  const std::size_t n = std::holds_alternative<MatrixLineage>(s->lineage)
                            ? std::get<MatrixLineage>(s->lineage).seeds.back().matrix.rank()
                            : std::get<AlgebraLineage>(s->lineage).alg->vertex_count();
  if (k < 1 || static_cast<std::size_t>(k) > n) return error(400, "field 'k': index out of range 1.." + std::to_string(n));
  try {
    if (auto* m = std::get_if<MatrixLineage>(&s->lineage)) {
      m->seeds.push_back(mutate_seed(m->seeds.back(), static_cast<std::size_t>(k - 1), m->d));
    } else {
      auto& a = std::get<AlgebraLineage>(s->lineage);
      a.records.push_back(cvec::mutate(a.records.back(), static_cast<std::size_t>(k - 1)));
    }
  } catch (const Error& e) {
    return error(422, e.what());
  }
  return {200, state(*s)};
}

ApiResponse SessionService::undo(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard lock(s->mutex);
  bool popped = false;
  if (auto* m = std::get_if<MatrixLineage>(&s->lineage)) {
    popped = m->seeds.size() > 1;
    if (popped) m->seeds.pop_back();
  } else {
    auto& a = std::get<AlgebraLineage>(s->lineage);
    popped = a.records.size() > 1;
    if (popped) a.records.pop_back();
  }
  if (!popped) return error(409, "nothing to undo");
  return {200, state(*s)};
}

ApiResponse SessionService::get(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard lock(s->mutex);
  return {200, state(*s)};
}

ApiResponse SessionService::handle(const std::string& method, const std::string& path, const std::string& body) {
  Json request;
  if (!body.empty()) {
    try {
      request = parse_json(body, "body");
    } catch (const ParseError& e) {
      return error(400, e.what());
    }
  }
  if (method == "GET" && path == "/examples") return {200, examples()};
  if (method == "POST" && path == "/sessions") return create(request);
  const std::string prefix = "/sessions/";
  if (path.rfind(prefix, 0) != 0) return error(404, "no route for " + path);
  std::string rest = path.substr(prefix.size());
  auto slash = rest.find('/');
  std::string id = rest.substr(0, slash);
  std::string action = slash == std::string::npos ? "" : rest.substr(slash + 1);
  if (method == "GET" && action.empty()) return get(id);
  if (method == "POST" && action == "mutate") return mutate(id, request);
  if (method == "POST" && action == "undo") return undo(id);
  return error(404, "no route for " + method + " " + path);
}

}  // namespace cvec
