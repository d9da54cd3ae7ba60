#include "cli.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <functional>
#include <sstream>

#include "cvec/fixtures.hpp"
#include "cvec/io.hpp"
#include "cvec/laurent.hpp"
#include "cvec/mutation.hpp"
#include "cvec/session.hpp"
#include "cvec/silting.hpp"

namespace cvec::cli {

namespace {

// Problems with the input (as opposed to theorem violations).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto with_input(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const Error& e) {
    throw InputError(what + ": " + e.what());
  }
}

MatrixFile load_matrix(const std::string& path) {
  return with_input(path, [&] { return matrix_file_from_json(read_json_file(path)); });
}

AlgebraPtr load_algebra(const std::string& path) {
  return with_input(path, [&] { return Algebra::create(algebra_from_json(read_json_file(path))); });
}

std::string vec_str(const IntVector& v) { return to_json(v).dump(); }

std::string set_str(const std::set<IntVector>& s) {
  std::string out;
  for (const auto& v : s) out += (out.empty() ? "" : " ") + vec_str(v);
  return out.empty() ? "(none)" : out;
}

std::vector<std::size_t> parse_word(const std::string& text, std::size_t n) {
  std::vector<std::size_t> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    long k = 0;
    try {
      k = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw InputError("--word: \"" + item + "\" is not an index");
    }
    if (pos != item.size() || k < 1 || static_cast<std::size_t>(k) > n)
      throw InputError("--word: index " + item + " out of range 1.." + std::to_string(n));
    word.push_back(static_cast<std::size_t>(k - 1));
  }
  return word;
}

void print_violations(std::ostream& out, const std::string& label, const CheckReport& r) {
  for (const auto& v : r.violations)
    out << "  " << label << " violation at word " << one_based(v.word).dump() << " column " << v.column + 1 << ": "
        << v.what << "\n";
}

int cmd_mutate(const std::string& file, const std::vector<int>& ks, std::ostream& out) {
  MatrixFile m = load_matrix(file);
  ExtendedExchangeMatrix b = m.extended();
  for (int k : ks) {
    if (k < 1 || static_cast<std::size_t>(k) > b.rank())
      throw InputError("-k " + std::to_string(k) + " out of range 1.." + std::to_string(b.rank()));
    b = mutate(b, static_cast<std::size_t>(k - 1));
  }
  out << to_compact(b.entries()) << "\n";
  return kOk;
}

int cmd_explore(const std::string& file, std::size_t budget, bool canonical, std::optional<std::size_t> depth,
                std::ostream& out) {
  MatrixFile m = load_matrix(file);
  if (!m.square()) throw InputError(file + ": explore needs a square exchange matrix");
  ExploreOptions opts{budget, canonical, depth};
  ExploreResult r = with_input(file, [&] { return explore(m.rows, opts); });
  CheckReport sign = check_sign_coherence(r.seeds);
  CheckReport dual = check_tropical_duality(r.seeds, r.skew_symmetrizer);
  std::set<IntVector> pos, neg;
  for (const auto& c : r.cvectors) (classify_sign(c) == SignClass::Negative ? neg : pos).insert(c);
  out << "skew-symmetrizer: " << to_compact(r.skew_symmetrizer) << "\n";
  out << "c-vectors (" << r.cvectors.size() << "): " << set_str(r.cvectors) << "\n";
  out << "positive (" << pos.size() << "): " << set_str(pos) << "\n";
  out << "negative (" << neg.size() << "): " << set_str(neg) << "\n";
  print_violations(out, "sign-coherence", sign);
  print_violations(out, "tropical-duality", dual);
  const std::size_t violations = sign.violations.size() + dual.violations.size();
  out << r.seeds.size() << " seeds, " << (r.exhausted ? "exhausted" : "not exhausted") << ", " << violations
      << " violations\n";
  return violations == 0 ? kOk : kViolations;
}

int cmd_laurent(const std::string& file, const std::string& word_text, std::ostream& out) {
  MatrixFile m = load_matrix(file);
  if (!m.square()) throw InputError(file + ": laurent needs a square exchange matrix");
  const std::size_t n = m.n;
  auto word = parse_word(word_text, n);
  IntMatrix d = *skew_symmetrizer(m.rows);
  LaurentSeed ls = laurent_root(m.rows);
  PatternSeed ps = root_seed(m.rows);
  int status = kOk;
  auto report = [&](const std::string& head) {
    out << head << "\n";
    for (std::size_t j = 0; j < n; ++j) {
      out << "  x" << j + 1 << " = " << ls.variables[j].to_string();
      try {
        out << "   g = " << vec_str(g_vector(ls.variables[j], m.rows)) << "\n";
      } catch (const NotHomogeneous&) {
        out << "   NOT HOMOGENEOUS\n";
        status = kViolations;
      }
    }
    if (status == kOk && ls.g_matrix() != ps.gmatrix) {
      out << "  grading g-vectors differ from duality G = " << to_compact(ps.gmatrix) << "\n";
      status = kViolations;
    }
  };
  report("initial seed");
  for (std::size_t step = 0; step < word.size(); ++step) {
    try {
      ls = exchange_step(ls, word[step]);
    } catch (const NonExactDivision& e) {
      out << "step " << step + 1 << ": division not exact: " << e.what() << "\n";
      return kViolations;
    }
    ps = mutate_seed(ps, word[step], d);
    report("after mu_" + std::to_string(word[step] + 1) + " (word " + one_based(ls.word).dump() + ")");
  }
  return status;
}

int cmd_tautilt(const std::string& file, std::size_t budget, bool json, std::ostream& out) {
  AlgebraPtr alg = load_algebra(file);
  SiltingEnumeration e = with_input(file, [&] { return enumerate_silting(alg, budget); });
  if (json) {
    Json records = Json::array();
    for (const auto& r : e.records) records.push_back(to_json(r));
    out << Json{{"records", records}, {"exhausted", e.exhausted}}.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < e.records.size(); ++i) {
    const auto& r = e.records[i];
    out << "record " << i + 1 << " word " << one_based(r.word).dump() << "\n";
    out << "  G = " << to_compact(r.g_matrix) << "\n";
    out << "  C = " << to_compact(r.c_matrix) << "\n";
    out << "  module summands (h0 dims):";
    std::size_t shifted = 0;
    for (const auto& s : r.summands) {
      Representation h = h0(s);
      if (h.is_zero()) ++shifted;
      else out << " " << vec_str(h.dimension_vector());
    }
    out << "  shifted projectives: " << shifted << "\n";
  }
  out << e.records.size() << " silting records, " << (e.exhausted ? "exhausted" : "not exhausted") << "\n";
  return kOk;
}

int cmd_cvectors(const std::string& file, std::size_t budget, std::ostream& out) {
  AlgebraPtr alg = load_algebra(file);
  CVectorReport r = with_input(file, [&] { return cvectors(alg, budget); });
  out << "records: " << r.records << (r.exhausted ? " (exhausted)" : " (not exhausted)") << "\n";
  out << "cv (" << r.cv.size() << "): " << set_str(r.cv) << "\n";
  out << "cv+ (" << r.cv_plus.size() << "): " << set_str(r.cv_plus) << "\n";
  out << "cv- (" << r.cv_minus.size() << "): " << set_str(r.cv_minus) << "\n";
  for (const auto& v : r.violations) out << "  sign-coherence violation: " << v << "\n";
  out << "sign-coherence: " << (r.violations.empty() ? "ok" : "VIOLATED") << "\n";
  return r.violations.empty() ? kOk : kViolations;
}

// One theorem check from a suite file. Returns (passed, detail).
std::pair<bool, std::string> run_check(const Json& c, const std::filesystem::path& base) {
  auto field = [&](const char* key) -> const Json& {
    if (!c.contains(key)) throw InputError(std::string("check is missing field '") + key + "'");
    return c[key];
  };
  auto path_of = [&](const char* key) { return (base / field(key).get<std::string>()).string(); };
  const std::string kind = field("kind").get<std::string>();
  const std::size_t budget = c.value("budget", std::size_t{1000});
  std::optional<std::size_t> depth;
  if (c.contains("max_depth")) depth = c["max_depth"].get<std::size_t>();

  if (kind == "sign_coherence" || kind == "tropical_duality") {
    MatrixFile m = load_matrix(path_of("matrix"));
    ExploreResult r = explore(m.rows, ExploreOptions{budget, false, depth});
    CheckReport rep = kind == "sign_coherence" ? check_sign_coherence(r.seeds)
                                               : check_tropical_duality(r.seeds, r.skew_symmetrizer);
    return {rep.ok(), std::to_string(rep.checked) + " seeds, " + std::to_string(rep.violations.size()) + " violations"};
  }
  if (kind == "laurent") {
    MatrixFile m = load_matrix(path_of("matrix"));
    GCrossCheckReport rep = cross_check_g(m.rows, budget, depth);
    return {rep.ok(), std::to_string(rep.seeds_checked) + " seeds, " + std::to_string(rep.distinct_variables) +
                          " distinct variables"};
  }
  if (kind == "finite_type") {
    MatrixFile m = load_matrix(path_of("matrix"));
    FiniteTypeResult r = finite_type_probe(m.rows, budget);
    const bool want = field("expect").get<std::string>() == "finite";
    return {r.finite == want, std::string(r.finite ? "finite" : "budget exceeded") + ", " +
                                  std::to_string(r.cvectors.size()) + " c-vectors"};
  }
  if (kind == "symmetries") {
    AlgebraPtr alg = load_algebra(path_of("algebra"));
    SymmetryReport r = check_symmetries(alg, budget);
    std::string detail = r.ok() ? "cv- = -cv+, cv(A) = -cv(A^op), cv+(A) = cv+(A^op)" : r.violations.front();
    return {r.ok(), detail};
  }
  if (kind == "cv_plus_equals_roots") {
    AlgebraPtr alg = load_algebra(path_of("algebra"));
    IntMatrix cartan = int_matrix_from_json(field("cartan"), "cartan");
    CVectorReport r = cvectors(alg, budget);
    auto roots = positive_roots(cartan, c.value("height_bound", std::size_t{64}));
    return {r.exhausted && r.violations.empty() && r.cv_plus == roots,
            std::to_string(r.cv_plus.size()) + " positive c-vectors, " + std::to_string(roots.size()) + " roots"};
  }
  if (kind == "cv_plus_equals_dims") {
    AlgebraPtr alg = load_algebra(path_of("algebra"));
    std::set<IntVector> dims;
    for (const auto& f : field("modules")) {
      const std::string p = (base / f.get<std::string>()).string();
      dims.insert(with_input(p, [&] { return module_from_json(alg, read_json_file(p)); }).dimension_vector());
    }
    CVectorReport r = cvectors(alg, budget);
    return {r.exhausted && r.violations.empty() && r.cv_plus == dims,
            std::to_string(r.cv_plus.size()) + " positive c-vectors, " + std::to_string(dims.size()) +
                " dimension vectors"};
  }
  throw InputError("unknown check kind '" + kind + "'");
}

int cmd_check(const std::string& file, std::ostream& out) {
  Json suite = with_input(file, [&] { return read_json_file(file); });
  if (!suite.contains("checks") || !suite["checks"].is_array()) throw InputError(file + ": field 'checks': expected an array");
  const std::filesystem::path base = std::filesystem::path(file).parent_path();
  std::size_t failed = 0;
  for (std::size_t i = 0; i < suite["checks"].size(); ++i) {
    const Json& c = suite["checks"][i];
    const std::string name = c.value("name", "check " + std::to_string(i + 1));
    std::pair<bool, std::string> res;
    try {
      res = run_check(c, base);
    } catch (const InputError& e) {
      throw InputError(file + ": checks[" + std::to_string(i) + "]: " + e.what());
    } catch (const Json::exception& e) {
      throw InputError(file + ": checks[" + std::to_string(i) + "]: " + e.what());
    } catch (const NotExhausted& e) {
      res = {false, e.what()};
    }
    if (!res.first) ++failed;
    out << (res.first ? "PASS  " : "FAIL  ") << name << "  (" << res.second << ")\n";
  }
  out << suite["checks"].size() - failed << "/" << suite["checks"].size() << " checks passed\n";
  return failed == 0 ? kOk : kViolations;
}

httplib::Server* g_server = nullptr;
std::mutex g_server_mutex;

}  // namespace

int serve(const std::string& host, int port, std::ostream& out) {
  SessionService service;
  httplib::Server server;
  auto handler = [&](const httplib::Request& req, httplib::Response& res) {
    ApiResponse r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(".*", handler);
  server.Post(".*", handler);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  {
    std::lock_guard lock(g_server_mutex);
    g_server = &server;
  }
  out << "serving on http://" << host << ":" << port << std::endl;
  const bool ok = server.listen(host, port);
  {
    std::lock_guard lock(g_server_mutex);
    g_server = nullptr;
  }
  return ok ? kOk : kMalformedInput;
}

void stop_server() {
  std::lock_guard lock(g_server_mutex);
  if (g_server) g_server->stop();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact c-vectors and g-vectors for cluster patterns and quiver algebras", "cvec"};
  app.require_subcommand(1);

  std::string file;
  std::vector<int> ks;
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate an exchange matrix (square input gets principal coefficients)");
  mutate_cmd->add_option("matrix", file, "matrix JSON file")->required();
  mutate_cmd->add_option("-k", ks, "one-based mutation index, repeatable")->required();

  std::size_t budget = 1000;
  bool canonical = false;
  std::optional<std::size_t> depth;
  auto* explore_cmd = app.add_subcommand("explore", "breadth-first exploration of the mutation class");
  explore_cmd->add_option("matrix", file, "matrix JSON file")->required();
  explore_cmd->add_option("--budget", budget, "maximal number of seeds")->check(CLI::PositiveNumber);
  explore_cmd->add_flag("--canonical", canonical, "identify seeds up to relabeling");
  explore_cmd->add_option("--max-depth", depth, "maximal word length");

  std::string word;
  auto* laurent_cmd = app.add_subcommand("laurent", "cluster variables and their g-vectors along a word");
  laurent_cmd->add_option("matrix", file, "matrix JSON file")->required();
  laurent_cmd->add_option("--word", word, "comma-separated one-based indices")->required();

  bool json = false;
  auto* tautilt_cmd = app.add_subcommand("tautilt", "enumerate two-term silting / support tau-tilting objects");
  tautilt_cmd->add_option("algebra", file, "algebra JSON file")->required();
  tautilt_cmd->add_option("--budget", budget, "maximal number of records")->check(CLI::PositiveNumber);
  tautilt_cmd->add_flag("--json", json, "emit records as JSON");

  auto* cvectors_cmd = app.add_subcommand("cvectors", "c-vectors of an algebra");
  cvectors_cmd->add_option("algebra", file, "algebra JSON file")->required();
  cvectors_cmd->add_option("--budget", budget, "maximal number of records")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "run a suite of theorem checks");
  check_cmd->add_option("suite", file, "suite JSON file")->required();

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "serve the session API over local HTTP");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "bind address");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    if (*mutate_cmd) return cmd_mutate(file, ks, out);
    if (*explore_cmd) return cmd_explore(file, budget, canonical, depth, out);
    if (*laurent_cmd) return cmd_laurent(file, word, out);
    if (*tautilt_cmd) return cmd_tautilt(file, budget, json, out);
    if (*cvectors_cmd) return cmd_cvectors(file, budget, out);
    if (*check_cmd) return cmd_check(file, out);
    if (*serve_cmd) return serve(host, port, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace cvec::cli
