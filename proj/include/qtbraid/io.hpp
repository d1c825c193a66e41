#pragma once

// JSON forms of every artifact.  Puncture and edge labels are 1-based here,
// matrices are arrays of rows of [re, im] pairs.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "qtbraid/quantum_torus.hpp"
#include "qtbraid/representation.hpp"
#include "qtbraid/root_of_unity.hpp"
#include "qtbraid/triangulation.hpp"

namespace qtb::io {

using Json = nlohmann::json;

Json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const Json& j);

/// { "r": int, "edges": [[u,v],...], "faces": [[[edge, side],...3],...] }
/// with side 1 when the face walks the edge head to tail.
Json triangulation_to_json(const IdealTriangulation& t);
IdealTriangulation triangulation_from_json(const Json& j);

Json sigma_to_json(const SigmaMatrix& s);
SigmaMatrix sigma_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

/// { "x": {"1": [re,im], ...}, "n": [...], "h_sign": +-1 or 0 }
Json classifying_data_to_json(const ClassifyingData& d);
ClassifyingData classifying_data_from_json(const Json& j);

/// { "N": int, "s": int }
Json params_to_json(const RootOfUnityParams& p);
RootOfUnityParams params_from_json(const Json& j);

Json central_values_to_json(const CentralValues& v);

/// Array of { "letter", "t", "flips", "punctures", "values" }.
Json flip_log_to_json(const std::vector<FlipLogEntry>& log);

/// { "pairs": [{"w1", "w2", "distance", "scalar"}], "pass": bool }
Json homomorphism_report_to_json(const HomomorphismReport& report);

/// Points given as unit vectors [x,y,z], chart values [re,im] or "inf".
std::vector<Eigen::Vector3d> points_from_json(const Json& j);
Json points_to_json(const std::vector<Eigen::Vector3d>& points);

struct RunConfig {
  std::vector<Eigen::Vector3d> points;
  int N = 3;
  int s = 1;
  std::vector<int> n;
  int h_sign = 0;
  double relation_tolerance = 1e-9;
  double projective_tolerance = 1e-6;
  double time_tolerance = 1e-10;
  double step = 1e-3;
  /// Clearance between a moving puncture and the others.
  double epsilon = 1e-2;
  std::uint64_t seed = 0;
  /// Orders used by trace-scan.
  std::vector<int> orders{3, 5, 7};
  /// Random word pairs and their length for the braid suite.
  int pairs = 5;
  int word_length = 3;
  std::optional<std::string> out;
};

/// Every field but "points" is optional.  Throws InvalidArgument on
/// malformed fields, non-positive tolerances or |n| != r, and
/// UnsupportedParameters on bad (N, s).
RunConfig run_config_from_json(const Json& j);
Json run_config_to_json(const RunConfig& c);

RepresentationContext make_context(const RunConfig& c);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace qtb::io
