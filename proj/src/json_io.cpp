#include "tdopt/json_io.hpp"

#include <cstdint>
#include <functional>
#include <set>

#include "json.hpp"
#include "tdopt/errors.hpp"
#include "tdopt/graph.hpp"
#include "tdopt/linalg.hpp"
#include "tdopt/matroid.hpp"

namespace tdopt {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const RatMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).str());
    rows.push_back(std::move(row));
  }
  Json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["entries"] = std::move(rows);
  return out;
}

Json parents_json(const std::vector<int>& parent) {
  Json out = Json::array();
  for (int p : parent) out.push_back(p);
  return out;
}

Json leaf_map_json(const std::map<int, int>& m) {
  Json out = Json::object();
  for (const auto& [id, leaf] : m) out[std::to_string(id)] = leaf;
  return out;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Rat rat_from(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
  throw ParseError("json: expected a rational as integer or string");
}

Int int_from(const Json& j) {
  Rat r = rat_from(j);
  if (!r.is_integer()) throw ParseError("json: expected an integer");
  return r.num();
}

RatMatrix matrix_from(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("json: matrix needs rows, cols, entries");
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0) throw ParseError("json: negative matrix dimensions");
  const Json& e = j.at("entries");
  if (!e.is_array() || static_cast<int>(e.size()) != rows)
    throw ParseError("json: entry row count mismatch");
  RatMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != cols)
      throw ParseError("json: entry column count mismatch");
    for (int jj = 0; jj < cols; ++jj) a.at(i, jj) = rat_from(e[i][jj]);
  }
  return a;
}

std::vector<int> parents_from(const Json& j) {
  if (!j.is_array()) throw ParseError("json: parents must be an array");
  std::vector<int> out;
  for (const Json& v : j) out.push_back(v.get<int>());
  return out;
}

std::map<int, int> leaf_map_from(const Json& j) {
  if (!j.is_object()) throw ParseError("json: leaf_map must be an object");
  std::map<int, int> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    try {
      out[std::stoi(it.key())] = it.value().get<int>();
    } catch (const std::exception&) {
      throw ParseError("json: bad leaf_map entry");
    }
  }
  return out;
}

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("json: malformed document");
  return j;
}

}  // namespace

std::string to_json(const RatMatrix& a, bool pretty) {
  Json j;
  j["kind"] = "matrix";
  j["matrix"] = matrix_json(a);
  return dump(j, pretty);
}

std::string to_json(const RatMatrix& a, const DepthDecomposition& d, bool pretty) {
  Json j;
  j["kind"] = "decomposition";
  j["matrix"] = matrix_json(a);
  j["parents"] = parents_json(d.tree.parent);
  j["leaf_map"] = leaf_map_json(d.leaf_map);
  j["depth"] = d.tree.depth();
  return dump(j, pretty);
}

std::string to_json(const RatMatrix& a, const ExtendedDepthDecomposition& e, bool pretty) {
  Json j;
  j["kind"] = "extended_decomposition";
  j["matrix"] = matrix_json(a);
  j["parents"] = parents_json(e.tree.parent);
  j["leaf_map"] = leaf_map_json(e.leaf_map);
  Json basis = Json::object();
  for (const auto& [node, vec] : e.basis_map) {
    Json bv = Json::array();
    for (const Rat& r : vec) bv.push_back(r.str());
    basis[std::to_string(node)] = std::move(bv);
  }
  j["basis_map"] = std::move(basis);
  j["depth"] = e.tree.depth();
  return dump(j, pretty);
}

std::string to_json(const RatMatrix& a, const TransformResult& r, bool pretty) {
  Json j;
  j["kind"] = "transform";
  j["matrix"] = matrix_json(a);
  j["B"] = matrix_json(r.B);
  j["A_prime"] = matrix_json(r.A_prime);
  j["forest"] = parents_json(r.witness_forest.parent);
  j["depth"] = r.reported_depth;
  j["exact"] = r.exact;
  Json removed = Json::array();
  for (int i : r.removed_rows) removed.push_back(i);
  j["removed_rows"] = std::move(removed);
  return dump(j, pretty);
}

std::string to_json(const IPInstance& inst, bool pretty) {
  Json j;
  j["kind"] = "instance";
  Json a = Json::array();
  for (int i = 0; i < inst.a.rows(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < inst.a.cols(); ++jj) row.push_back(inst.a.at(i, jj).str());
    a.push_back(std::move(row));
  }
  j["A"] = std::move(a);
  Json b = Json::array();
  for (const Rat& r : inst.b) b.push_back(r.str());
  j["b"] = std::move(b);
  auto bounds = [](const std::vector<std::optional<Int>>& v, const char* inf) {
    Json out = Json::array();
    for (const auto& o : v) out.push_back(o ? Json(o->str()) : Json(inf));
    return out;
  };
  j["l"] = bounds(inst.lower, "-inf");
  j["u"] = bounds(inst.upper, "inf");
  Json obj = Json::array();
  for (const ObjectiveTerm& t : inst.objective) {
    Json tj;
    switch (t.kind) {
      case ObjectiveTerm::Kind::Linear:
        tj["kind"] = "linear";
        tj["c"] = t.c.str();
        break;
      case ObjectiveTerm::Kind::Quadratic:
        tj["kind"] = "quadratic";
        tj["a"] = t.a.str();
        tj["c"] = t.c.str();
        break;
      case ObjectiveTerm::Kind::Pwl: {
        tj["kind"] = "pwl";
        Json pts = Json::array();
        for (const auto& [x, y] : t.points) pts.push_back(Json::array({x.str(), y.str()}));
        tj["points"] = std::move(pts);
        break;
      }
    }
    obj.push_back(std::move(tj));
  }
  j["objective"] = std::move(obj);
  return dump(j, pretty);
}

std::string to_json(const IPSolution& s, bool pretty, const IPSolution* oracle) {
  Json j;
  j["kind"] = "solution";
  j["status"] = to_string(s.status);
  if (s.status == SolveStatus::Optimal || s.status == SolveStatus::Limit) {
    Json x = Json::array();
    for (const Int& v : s.x) x.push_back(v.str());
    j["x"] = std::move(x);
    j["value"] = s.value.str();
  }
  j["steps"] = s.steps;
  j["transformed"] = s.transformed;
  if (s.transformed) {
    j["depth"] = s.depth;
    j["depth_exact"] = s.exact_depth;
  }
  if (oracle) {
    Json o;
    o["status"] = to_string(oracle->status);
    if (oracle->status == SolveStatus::Optimal) o["value"] = oracle->value.str();
    bool agree = oracle->status == s.status &&
                 (s.status != SolveStatus::Optimal || oracle->value == s.value);
    o["agree"] = agree;
    j["oracle"] = std::move(o);
  }
  return dump(j, pretty);
}

RatMatrix matrix_from_json(const std::string& text) {
  Json j = parse_text(text);
  if (j.is_object() && j.contains("matrix")) return matrix_from(j.at("matrix"));
  throw ParseError("json: no matrix found");
}

IPInstance instance_from_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object() || !j.contains("A") || !j.contains("b"))
    throw ParseError("json: instance needs A and b");
  const Json& a = j.at("A");
  if (!a.is_array()) throw ParseError("json: A must be an array of rows");
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  IPInstance inst;
  inst.a = RatMatrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!a[i].is_array() || static_cast<int>(a[i].size()) != cols)
      throw ParseError("json: ragged A");
    for (int jj = 0; jj < cols; ++jj) inst.a.at(i, jj) = rat_from(a[i][jj]);
  }
  if (cols == 0 && j.contains("n")) {
    cols = j.at("n").get<int>();
    inst.a = RatMatrix(rows, cols);
  }
  for (const Json& v : j.at("b")) inst.b.push_back(rat_from(v));
  auto bounds_from = [&](const char* key) {
    std::vector<std::optional<Int>> out;
    if (!j.contains(key)) {
      out.assign(cols, std::nullopt);
      return out;
    }
    for (const Json& v : j.at(key)) {
      if (v.is_null()) {
        out.push_back(std::nullopt);
      } else if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "-inf")
          out.push_back(std::nullopt);
        else
          out.push_back(int_from(v));
      } else {
        out.push_back(int_from(v));
      }
    }
    return out;
  };
  inst.lower = bounds_from("l");
  inst.upper = bounds_from("u");
  if (j.contains("objective")) {
    for (const Json& tj : j.at("objective")) {
      if (!tj.is_object() || !tj.contains("kind"))
        throw ParseError("json: objective term needs a kind");
      const std::string kind = tj.at("kind").get<std::string>();
      if (kind == "linear") {
        inst.objective.push_back(ObjectiveTerm::linear(rat_from(tj.at("c"))));
      } else if (kind == "quadratic") {
        inst.objective.push_back(
            ObjectiveTerm::quadratic(rat_from(tj.at("a")), rat_from(tj.at("c"))));
      } else if (kind == "pwl") {
        std::vector<std::pair<Int, Rat>> pts;
        for (const Json& p : tj.at("points")) {
          if (!p.is_array() || p.size() != 2) throw ParseError("json: pwl point must be a pair");
          pts.emplace_back(int_from(p[0]), rat_from(p[1]));
        }
        inst.objective.push_back(ObjectiveTerm::pwl(std::move(pts)));
      } else {
        throw ParseError("json: unknown objective kind " + kind);
      }
    }
  }
  inst.check();
  return inst;
}

bool VerifyReport::all_ok() const {
  for (const VerifyCheck& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

namespace {

bool guarded(const std::function<bool()>& f) {
  try {
    return f();
  } catch (const SizeLimit&) {
    throw;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

VerifyReport verify_artifact(const std::string& text, const Limits& lim) {
  Json j = parse_text(text);
  if (!j.is_object() || !j.contains("kind")) throw ParseError("json: artifact needs a kind");
  VerifyReport rep;
  rep.kind = j.at("kind").get<std::string>();
  if (!j.contains("matrix")) throw ParseError("json: artifact needs its source matrix");
  RatMatrix a = matrix_from(j.at("matrix"));

  if (rep.kind == "decomposition" || rep.kind == "extended_decomposition") {
    DepthDecomposition d;
    d.tree.parent = parents_from(j.at("parents"));
    d.leaf_map = leaf_map_from(j.at("leaf_map"));
    VectorMatroid m = VectorMatroid::column_matroid(a, lim.rank_cache_capacity);
    rep.checks.push_back({"decomposition-valid", guarded([&] { return validate(m, d, lim); })});
    if (rep.kind == "extended_decomposition") {
      ExtendedDepthDecomposition e;
      e.tree = d.tree;
      e.leaf_map = d.leaf_map;
      const Json& basis = j.at("basis_map");
      if (!basis.is_object()) throw ParseError("json: basis_map must be an object");
      for (auto it = basis.begin(); it != basis.end(); ++it) {
        Vec v;
        for (const Json& r : it.value()) v.push_back(rat_from(r));
        try {
          e.basis_map[std::stoi(it.key())] = std::move(v);
        } catch (const std::exception&) {
          throw ParseError("json: bad basis_map key");
        }
      }
      rep.checks.push_back(
          {"basis-assignment-valid", guarded([&] { return validate_extended(m, e, lim); })});
    }
    return rep;
  }

  if (rep.kind == "transform") {
    TransformResult r;
    r.B = matrix_from(j.at("B"));
    r.A_prime = matrix_from(j.at("A_prime"));
    r.witness_forest.parent = parents_from(j.at("forest"));
    r.reported_depth = j.at("depth").get<int>();
    for (const Json& v : j.at("removed_rows")) r.removed_rows.push_back(v.get<int>());

    std::vector<int> kept;
    {
      std::set<int> removed(r.removed_rows.begin(), r.removed_rows.end());
      for (int i = 0; i < a.rows(); ++i)
        if (!removed.count(i)) kept.push_back(i);
    }
    RatMatrix a0 = a.select_rows(kept);
    rep.checks.push_back({"B-regular", guarded([&] {
                            invert(r.B);
                            return true;
                          })});
    rep.checks.push_back({"product-matches", guarded([&] { return r.B * a0 == r.A_prime; })});
    rep.checks.push_back({"forest-covers-dual-graph", guarded([&] {
                            return verify_td_witness(dual_graph(r.A_prime), r.witness_forest);
                          })});
    rep.checks.push_back(
        {"height-within-depth",
         guarded([&] { return r.witness_forest.height() <= r.reported_depth; })});
    rep.checks.push_back({"column-supports-on-root-paths", guarded([&] {
                            return entry_complexity_certificate(a0, r).support_on_root_paths;
                          })});
    return rep;
  }

  throw ParseError("json: unknown artifact kind " + rep.kind);
}

}  // namespace tdopt
