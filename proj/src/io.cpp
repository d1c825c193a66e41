#include "qtbraid/io.hpp"

#include <fstream>
#include <sstream>

#include "qtbraid/error.hpp"
#include "qtbraid/sphere.hpp"

namespace qtb::io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, "malformed JSON: " + what);
}

template <class T>
T get_as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    malformed(what);
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T optional_field(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return get_as<T>(j.at(key), key);
}

double positive_field(const Json& j, const char* key, double fallback) {
  const double v = optional_field(j, key, fallback);
  if (!(v > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be positive");
  }
  return v;
}

}  // namespace

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) malformed("complex number must be [re, im]");
  return {get_as<double>(j[0], "re"), get_as<double>(j[1], "im")};
}

Json triangulation_to_json(const IdealTriangulation& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges()) edges.push_back({e.tail + 1, e.head + 1});
  Json faces = Json::array();
  for (const auto& f : t.faces()) {
    Json face = Json::array();
    for (const auto& s : f) face.push_back({s.edge + 1, s.reversed ? 1 : 0});
    faces.push_back(face);
  }
  return {{"r", t.punctures()}, {"edges", edges}, {"faces", faces}};
}

IdealTriangulation triangulation_from_json(const Json& j) {
  const int r = get_as<int>(require(j, "r"), "r");
  std::vector<EdgeEnds> edges;
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 2) malformed("edge must be [u, v]");
    const int u = get_as<int>(e[0], "edge end") - 1;
    const int v = get_as<int>(e[1], "edge end") - 1;
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::vector<Face> faces;
  for (const auto& f : require(j, "faces")) {
    if (!f.is_array() || f.size() != 3) malformed("face must list three sides");
    Face face;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& s = f[k];
      if (!s.is_array() || s.size() != 2) malformed("side must be [edge, flag]");
      const int flag = get_as<int>(s[1], "side flag");
      if (flag != 0 && flag != 1) malformed("side flag must be 0 or 1");
      face[k] = {get_as<int>(s[0], "side edge") - 1, flag == 1};
    }
    faces.push_back(face);
  }
  return IdealTriangulation(r, std::move(edges), std::move(faces));
}

Json sigma_to_json(const SigmaMatrix& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < s.size(); ++k) row.push_back(s(i, k));
    rows.push_back(row);
  }
  return rows;
}

SigmaMatrix sigma_from_json(const Json& j) {
  if (!j.is_array()) malformed("sigma must be an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) malformed("sigma must be square");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = get_as<std::int64_t>(row[static_cast<std::size_t>(k)], "sigma entry");
  }
  return SigmaMatrix(std::move(m));
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) malformed("matrix row must be an array");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) malformed("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json classifying_data_to_json(const ClassifyingData& d) {
  Json x = Json::object();
  for (std::size_t i = 0; i < d.x.size(); ++i) x[std::to_string(i + 1)] = complex_to_json(d.x[i]);
  return {{"x", x}, {"n", d.n}, {"h_sign", d.h_sign}};
}

ClassifyingData classifying_data_from_json(const Json& j) {
  ClassifyingData d;
  const auto& x = require(j, "x");
  if (!x.is_object()) malformed("x must map labels to [re, im]");
  d.x.resize(x.size());
  std::vector<bool> seen(x.size(), false);
  for (const auto& [key, value] : x.items()) {
    std::size_t label = 0;
    try {
      std::size_t used = 0;
      label = std::stoul(key, &used);
      if (used != key.size()) label = 0;
    } catch (const std::exception&) {
      label = 0;
    }
    if (label < 1 || label > x.size() || seen[label - 1]) malformed("bad edge label \"" + key + "\"");
    seen[label - 1] = true;
    d.x[label - 1] = complex_from_json(value);
  }
  d.n = optional_field(j, "n", std::vector<int>{});
  d.h_sign = optional_field(j, "h_sign", 0);
  if (d.h_sign < -1 || d.h_sign > 1) malformed("h_sign must be -1, 0 or 1");
  return d;
}

Json params_to_json(const RootOfUnityParams& p) { return {{"N", p.order()}, {"s", p.s()}}; }

RootOfUnityParams params_from_json(const Json& j) {
  return RootOfUnityParams(get_as<int>(require(j, "N"), "N"), optional_field(j, "s", 1));
}

Json central_values_to_json(const CentralValues& v) {
  Json x = Json::array();
  for (const auto& z : v.x) x.push_back(complex_to_json(z));
  Json p = Json::array();
  for (const auto& z : v.p) p.push_back(complex_to_json(z));
  return {{"x", x}, {"p", p}, {"h", complex_to_json(v.h)}};
}

Json flip_log_to_json(const std::vector<FlipLogEntry>& log) {
  Json out = Json::array();
  for (const auto& e : log) {
    std::vector<int> flips;
    for (int f : e.flips) flips.push_back(f + 1);
    std::vector<int> punctures;
    for (int p : e.punctures) punctures.push_back(p + 1);
    out.push_back({{"letter", e.letter + 1},
                   {"t", e.t},
                   {"flips", flips},
                   {"punctures", punctures},
                   {"values", central_values_to_json(e.values)}});
  }
  return out;
}

Json homomorphism_report_to_json(const HomomorphismReport& report) {
  Json pairs = Json::array();
  for (const auto& e : report.pairs) {
    Json entry = {{"w1", e.w1},
                  {"w2", e.w2},
                  {"distance", e.distance},
                  {"scalar", complex_to_json(e.scalar)}};
    if (!e.error.empty()) entry["error"] = e.error;
    pairs.push_back(std::move(entry));
  }
  return {{"pairs", pairs}, {"pass", report.pass}};
}

std::vector<Eigen::Vector3d> points_from_json(const Json& j) {
  if (!j.is_array()) malformed("points must be an array");
  std::vector<Eigen::Vector3d> out;
  for (const auto& p : j) {
    if (p.is_string()) {
      if (p.get<std::string>() != "inf") malformed("point string must be \"inf\"");
      out.push_back(from_chart(ExtendedComplex::infinity()));
    } else if (p.is_array() && p.size() == 2) {
      out.push_back(from_chart(ExtendedComplex{complex_from_json(p), false}));
    } else if (p.is_array() && p.size() == 3) {
      const Eigen::Vector3d v(get_as<double>(p[0], "x"), get_as<double>(p[1], "y"),
                              get_as<double>(p[2], "z"));
      if (!(v.norm() > 0.0)) throw Error(ErrorCode::InvalidArgument, "zero point vector");
      out.push_back(v.normalized());
    } else {
      malformed("point must be [x,y,z], [re,im] or \"inf\"");
    }
  }
  return out;
}

Json points_to_json(const std::vector<Eigen::Vector3d>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back({p.x(), p.y(), p.z()});
  return out;
}

RunConfig run_config_from_json(const Json& j) {
  if (!j.is_object()) malformed("config must be an object");
  RunConfig c;
  c.points = points_from_json(require(j, "points"));
  c.N = optional_field(j, "N", c.N);
  c.s = optional_field(j, "s", c.s);
  RootOfUnityParams(c.N, c.s);
  c.n = optional_field(j, "n", c.n);
  if (!c.n.empty() && c.n.size() != c.points.size()) {
    throw Error(ErrorCode::InvalidArgument, "n must list one exponent per point");
  }
  c.h_sign = optional_field(j, "h_sign", c.h_sign);
  if (c.h_sign < -1 || c.h_sign > 1) malformed("h_sign must be -1, 0 or 1");
  c.relation_tolerance = positive_field(j, "relation_tolerance", c.relation_tolerance);
  c.projective_tolerance = positive_field(j, "projective_tolerance", c.projective_tolerance);
  c.time_tolerance = positive_field(j, "time_tolerance", c.time_tolerance);
  c.step = positive_field(j, "step", c.step);
  c.epsilon = positive_field(j, "epsilon", c.epsilon);
  c.seed = optional_field(j, "seed", c.seed);
  c.orders = optional_field(j, "orders", c.orders);
  for (int order : c.orders) RootOfUnityParams(order, 1);
  c.pairs = optional_field(j, "pairs", c.pairs);
  c.word_length = optional_field(j, "word_length", c.word_length);
  if (c.pairs < 0 || c.word_length < 0) {
    throw Error(ErrorCode::InvalidArgument, "pairs and word_length must be non-negative");
  }
  if (j.contains("out")) c.out = get_as<std::string>(j.at("out"), "out");
  return c;
}

Json run_config_to_json(const RunConfig& c) {
  Json j = {{"points", points_to_json(c.points)},
            {"N", c.N},
            {"s", c.s},
            {"n", c.n},
            {"h_sign", c.h_sign},
            {"relation_tolerance", c.relation_tolerance},
            {"projective_tolerance", c.projective_tolerance},
            {"time_tolerance", c.time_tolerance},
            {"step", c.step},
            {"epsilon", c.epsilon},
            {"seed", c.seed},
            {"orders", c.orders},
            {"pairs", c.pairs},
            {"word_length", c.word_length}};
  if (c.out) j["out"] = *c.out;
  return j;
}

RepresentationContext make_context(const RunConfig& c) {
  RepresentationContext ctx;
  ctx.points = c.points;
  ctx.params = RootOfUnityParams(c.N, c.s);
  ctx.n = c.n;
  ctx.h_sign = c.h_sign;
  ctx.loop.margin = c.epsilon;
  ctx.tracking.step = c.step;
  ctx.tracking.time_tolerance = c.time_tolerance;
  return ctx;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << dump(j);
}

}  // namespace qtb::io
