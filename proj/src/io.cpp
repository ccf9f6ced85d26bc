#include "pshadow/io.hpp"

#include <set>
#include <sstream>

namespace pshadow {

namespace {

Json rows_of(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix parse_rows(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains("n") || !j.contains(field)) {
    throw InvalidArgument(std::string("expected an object with \"n\" and \"") + field + "\"");
  }
  if (!j["n"].is_number_integer()) throw InvalidArgument("\"n\" must be an integer");
  const auto n = j["n"].get<Int>();
  const Json& rows = j[field];
  if (n < 0 || !rows.is_array() || static_cast<Int>(rows.size()) != n) {
    throw InvalidArgument(std::string("\"") + field + "\" must hold n rows");
  }
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Int>(row.size()) != n) {
      throw InvalidArgument("row " + std::to_string(i) + " must have length n");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number_integer()) throw InvalidArgument("matrix entries must be integers");
      m(i, k) = v.get<Int>();
    }
  }
  return m;
}

std::vector<std::vector<Int>> vectors_of(const std::vector<IntVector>& vs) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : vs) out.emplace_back(v.data(), v.data() + v.size());
  return out;
}

}  // namespace

Json to_json(const IntMatrix& m) { return {{"n", m.rows()}, {"rows", rows_of(m)}}; }

IntMatrix int_matrix_from_json(const Json& j) { return parse_rows(j, "rows"); }

SkewIntMatrix skew_matrix_from_json(const Json& j) { return SkewIntMatrix(int_matrix_from_json(j)); }

Json to_json(const Quiver& q) { return {{"n", q.size()}, {"arr", rows_of(q.arr())}}; }

Quiver quiver_from_json(const Json& j) { return Quiver(parse_rows(j, "arr")); }

Json certificate_json(const SkewIntMatrix& a, const Ps3Certificate& c) {
  return {{"matrix", to_json(a.matrix())}, {"certificate", to_json(c.c)}, {"rays", vectors_of(c.rays_used)}};
}

Json witness_json(const SkewIntMatrix& a, const Ps3Witness& w) {
  return {{"matrix", to_json(a.matrix())}, {"missing_index", w.missing_index}};
}

Json to_json(const ShadowRecord& r) {
  Json j = {{"kind", r.kind == RecordKind::Shadow ? "shadow" : "shade"},
            {"n", r.n},
            {"rows", rows_of(r.matrix.matrix())},
            {"rank", r.rank}};
  j["certificate"] = r.certificate ? to_json(r.certificate->c) : Json(nullptr);
  return j;
}

ShadowRecord record_from_json(const Json& j) {
  ShadowRecord r;
  r.matrix = SkewIntMatrix(parse_rows(j, "rows"));
  r.n = r.matrix.size();
  if (!j.contains("rank") || !j["rank"].is_number_integer()) throw InvalidArgument("record needs an integer \"rank\"");
  r.rank = j["rank"].get<int>();
  const std::string kind = j.value("kind", "shade");
  if (kind != "shade" && kind != "shadow") throw InvalidArgument("record kind must be shade or shadow");
  r.kind = kind == "shadow" ? RecordKind::Shadow : RecordKind::Shade;
  if (j.contains("certificate") && !j["certificate"].is_null()) {
    r.certificate = Ps3Certificate{int_matrix_from_json(j["certificate"]), {}};
  }
  return r;
}

Json to_json(const BlockMatch& b) {
  Json roles = Json::object();
  for (const auto& [name, v] : b.roles) roles[name] = v;
  return {{"pair", {b.pair.first, b.pair.second}}, {"kind", std::string(to_string(b.kind))}, {"roles", roles}};
}

Json to_json(const CandidateQuiver& c) {
  Json matching = Json::array();
  for (const auto& [a, b] : c.matching) matching.push_back({a, b});
  Json blocks = Json::array();
  for (const auto& b : c.blocks) blocks.push_back(to_json(b));
  return {{"arr", rows_of(c.quiver.arr())},
          {"matching", matching},
          {"loops", std::vector<Int>(c.loops.data(), c.loops.data() + c.loops.size())},
          {"blocks", blocks}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"checks", checks}};
}

std::string to_dot(const Quiver& q, const std::vector<BlockMatch>& blocks) {
  std::set<int> black, white;
  for (const auto& b : blocks) {
    black.insert(b.black.begin(), b.black.end());
    white.insert(b.outlets.begin(), b.outlets.end());
  }
  std::ostringstream out;
  out << "digraph Q {\n";
  for (int v = 0; v < q.size(); ++v) {
    out << "  " << v;
    if (black.count(v)) {
      out << " [style=filled, fillcolor=black, fontcolor=white]";
    } else if (white.count(v)) {
      out << " [style=filled, fillcolor=white]";
    }
    out << ";\n";
  }
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      for (Int k = 0; k < q.arrows(i, j); ++k) out << "  " << i << " -> " << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pshadow
