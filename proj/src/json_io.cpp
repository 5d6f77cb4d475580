#include "rigiditylab/json_io.hpp"

#include <fstream>

namespace rigiditylab {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(Errc::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_member(const Json& j, const char* key) {
  const Json& m = member(j, key);
  if (!m.is_number_integer()) parse_fail(std::string("field '") + key + "' must be an integer");
  return m.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail("rational literal must be a string like \"p/q\"");
}

Json scalar_to_json(const GaussianRational& z, bool complex_space) {
  if (!complex_space) {
    if (!z.is_real()) parse_fail("refusing to serialize a complex value as real");
    return rational_to_json(z.re);
  }
  return Json{{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}};
}

GaussianRational scalar_from_json(const Json& j) {
  if (j.is_object())
    return {rational_from_json(member(j, "re")), rational_from_json(member(j, "im"))};
  return GaussianRational(rational_from_json(j));
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [t, u] : g.edges) edges.push_back(Json::array({t, u}));
  return Json{{"v", g.v}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const Json& edges_json = member(j, "edges");
  if (!edges_json.is_array()) parse_fail("'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : edges_json) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      parse_fail("each edge must be a pair of vertex indices");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(int_member(j, "v"), std::move(edges));
  } catch (const Error&) {
    throw;
  }
}

Json space_to_json(const SpaceDescriptor& s) {
  return Json{{"kind", s.kind_name()}, {"d", s.d}, {"s", s.s}};
}

SpaceDescriptor space_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) parse_fail("'kind' must be a string");
  SpaceDescriptor s;
  s.kind = space_kind_from_name(kind.get<std::string>());
  s.d = int_member(j, "d");
  s.s = j.contains("s") && j.at("s").is_number_integer() ? j.at("s").get<int>()
        : (s.kind == SpaceKind::Minkowski || s.kind == SpaceKind::Hyperbolic) ? 1
                                                                              : 0;
  s.validate();
  return s;
}

Json framework_to_json(const Framework& f) {
  Json j = graph_to_json(f.graph);
  j["space"] = space_to_json(f.space);
  Json config = Json::array();
  for (const Point& pt : f.config.points) {
    Json row = Json::array();
    for (const auto& c : pt) row.push_back(scalar_to_json(c, f.space.is_complex()));
    config.push_back(row);
  }
  j["config"] = config;
  return j;
}

Framework framework_from_json(const Json& j) {
  Framework f;
  f.graph = graph_from_json(j);
  f.space = space_from_json(member(j, "space"));
  const Json& config = member(j, "config");
  if (!config.is_array()) parse_fail("'config' must be an array of coordinate rows");
  for (const Json& row : config) {
    if (!row.is_array()) parse_fail("each configuration row must be an array");
    Point pt;
    for (const Json& c : row) pt.push_back(scalar_from_json(c));
    f.config.points.push_back(std::move(pt));
  }
  try {
    f.validate();
  } catch (const Error& e) {
    parse_fail(std::string("invalid framework: ") + e.what());
  }
  return f;
}

Json pair_to_json(const FrameworkPair& p) {
  return Json{{"first", framework_to_json(p.first)},
              {"second", framework_to_json(p.second)},
              {"haar_coords", p.haar_coords}};
}

FrameworkPair pair_from_json(const Json& j) {
  FrameworkPair p{framework_from_json(member(j, "first")),
                  framework_from_json(member(j, "second")),
                  j.contains("haar_coords") && j.at("haar_coords").is_boolean()
                      ? j.at("haar_coords").get<bool>()
                      : false};
  try {
    p.validate();
  } catch (const Error& e) {
    parse_fail(std::string("invalid pair: ") + e.what());
  }
  return p;
}

Json gmatrix_to_json(const GMatrix& m) {
  const bool complex_entries = !m.is_real();
  Json entries = Json::array();
  for (size_t i = 0; i < m.entries.rows(); ++i) {
    Json row = Json::array();
    for (size_t jx = 0; jx < m.entries.cols(); ++jx)
      row.push_back(scalar_to_json(m.entries(i, jx), complex_entries));
    entries.push_back(row);
  }
  return Json{{"side", m.side}, {"entries", entries}, {"origin_vertex", m.origin_vertex}};
}

GMatrix gmatrix_from_json(const Json& j) {
  GMatrix m;
  m.side = int_member(j, "side");
  const Json& entries = member(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(m.side))
    parse_fail("'entries' must be a side x side array");
  m.entries = ComplexMatrix(static_cast<size_t>(m.side), static_cast<size_t>(m.side));
  for (size_t i = 0; i < entries.size(); ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != static_cast<size_t>(m.side))
      parse_fail("'entries' must be a side x side array");
    for (size_t jx = 0; jx < row.size(); ++jx) m.entries(i, jx) = scalar_from_json(row[jx]);
  }
  if (!m.entries.is_symmetric()) parse_fail("g-matrix entries must be symmetric");
  return m;
}

Json verdict_to_json(const GGRVerdict& v) {
  Json j{{"verdict", verdict_name(v.verdict)},
         {"d", v.d},
         {"s", v.s.has_value() ? Json(*v.s) : Json(nullptr)},
         {"field", field_name(v.field)},
         {"space", v.space},
         {"ranks", v.ranks},
         {"seeds", v.seeds},
         {"transfer_derived", v.transfer_derived}};
  if (v.witness_stress.has_value()) {
    Json w = Json::array();
    for (const auto& c : *v.witness_stress)
      w.push_back(scalar_to_json(c, v.field == Field::Complex));
    j["witness_stress"] = w;
  } else {
    j["witness_stress"] = nullptr;
  }
  return j;
}

Json hyperbolic_framework_to_json(const HyperbolicFramework& f) {
  bool canonical = true;
  for (const auto& p : f.points) canonical = canonical && p.self_inner() == -1;
  Json j = graph_to_json(f.graph);
  j["space"] = Json{{"kind", "hyperbolic"}, {"d", f.d}, {"s", 1}};
  j["ball_model"] = canonical;
  Json config = Json::array();
  for (const auto& p : f.points) {
    Json row = Json::array();
    if (canonical) {
      for (const auto& c : ball_from_hyperbolic_point(p)) row.push_back(rational_to_json(c));
    } else {
      for (const auto& c : p.ray) row.push_back(rational_to_json(c));
    }
    config.push_back(row);
  }
  j["config"] = config;
  return j;
}

HyperbolicFramework hyperbolic_framework_from_json(const Json& j) {
  HyperbolicFramework f;
  f.graph = graph_from_json(j);
  const Json& space = member(j, "space");
  if (space_kind_from_name(member(space, "kind").get<std::string>()) != SpaceKind::Hyperbolic)
    parse_fail("expected a hyperbolic framework");
  f.d = int_member(space, "d");
  const bool ball = j.contains("ball_model") && j.at("ball_model").is_boolean() &&
                    j.at("ball_model").get<bool>();
  const Json& config = member(j, "config");
  if (!config.is_array()) parse_fail("'config' must be an array");
  for (const Json& row : config) {
    if (!row.is_array()) parse_fail("each configuration row must be an array");
    std::vector<Rational> coords;
    for (const Json& c : row) coords.push_back(rational_from_json(c));
    if (ball) {
      if (static_cast<int>(coords.size()) != f.d) parse_fail("ball parameters need d coordinates");
      f.points.push_back(hyperbolic_point_from_ball(coords));
    } else {
      if (static_cast<int>(coords.size()) != f.d + 1) parse_fail("rays need d+1 coordinates");
      HyperbolicPoint p{std::move(coords)};
      try {
        p.validate();
      } catch (const Error& e) {
        parse_fail(std::string("invalid hyperbolic point: ") + e.what());
      }
      f.points.push_back(std::move(p));
    }
  }
  try {
    f.validate();
  } catch (const Error& e) {
    parse_fail(std::string("invalid hyperbolic framework: ") + e.what());
  }
  return f;
}

Json hyperbolic_pair_to_json(const HyperbolicPair& p) {
  return Json{{"first", hyperbolic_framework_to_json(p.first)},
              {"second", hyperbolic_framework_to_json(p.second)}};
}

Json parity_to_json(const ParityReport& r) {
  return Json{{"classes", r.classes},
              {"parity", r.even ? "even" : "odd"},
              {"exactness", r.exactness == Exactness::Exact ? "exact" : "heuristic"},
              {"residual_max", r.exactness == Exactness::Exact ? Json(nullptr) : Json(r.residual_max)},
              {"theorem_applies", r.theorem_applies},
              {"consistent_with_theory", r.consistent_with_theory},
              {"detail", r.detail}};
}

Json realization_set_to_json(const RealizationSet& rs) {
  Json reps = Json::array();
  const SpaceDescriptor space = SpaceDescriptor::euclidean(rs.d);
  for (const Configuration& cfg : rs.representatives) {
    Json rows = Json::array();
    for (const Point& pt : cfg.points) {
      Json row = Json::array();
      if (rs.exactness == Exactness::Exact) {
        for (const auto& c : pt) row.push_back(scalar_to_json(c, false));
      } else {
        for (const auto& c : pt) row.push_back(to_double(c.re));
      }
      rows.push_back(row);
    }
    reps.push_back(rows);
  }
  Json measurements;
  if (rs.exactness == Exactness::Exact) {
    measurements = Json::array();
    for (const auto& m : rs.exact_measurements) measurements.push_back(rational_to_json(m));
  } else {
    measurements = rs.measurements;
  }
  (void)space;
  return Json{{"d", rs.d},
              {"exactness", rs.exactness == Exactness::Exact ? "exact" : "heuristic"},
              {"classes", rs.classes()},
              {"measurements", measurements},
              {"representatives", reps},
              {"residual_max", rs.residual_max}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) parse_fail("malformed JSON in '" + path + "'");
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(Errc::Internal, "cannot write '" + path + "'");
  out << dump_canonical(j);
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rigiditylab
