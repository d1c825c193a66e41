#pragma once

// Labeled ideal triangulations of the r-punctured sphere.
//
// Punctures and edge labels are 0-based inside the library; the JSON layer
// shifts both to 1-based.  Every face lists its three sides in
// counterclockwise order for the orientation of the sphere (outward normal).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace qtb {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Endpoints of an edge.  Stored with tail <= head.
struct EdgeEnds {
  int tail = 0;
  int head = 0;

  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// One side of a face: the edge it runs along and whether the face walks it
/// from head to tail.
struct Side {
  int edge = 0;
  bool reversed = false;

  friend bool operator==(const Side&, const Side&) = default;
};

using Face = std::array<Side, 3>;

struct SideRef {
  int face = 0;
  int slot = 0;
};

class IdealTriangulation {
 public:
  /// Validates every structural invariant; throws Error(InvalidTriangulation).
  IdealTriangulation(int punctures, std::vector<EdgeEnds> edges, std::vector<Face> faces);

  /// Builds a triangulation without multiple edges from counterclockwise
  /// vertex triples.  Edges are labeled in lexicographic order of their
  /// endpoint pairs and faces are sorted.
  static IdealTriangulation from_vertex_faces(int punctures,
                                              const std::vector<std::array<int, 3>>& faces);

  int punctures() const noexcept { return punctures_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  const EdgeEnds& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  const std::vector<EdgeEnds>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  int side_tail(const Side& s) const;
  int side_head(const Side& s) const;
  const Side& side(const SideRef& ref) const;

  /// [0] is the side walking the edge tail -> head, [1] the opposite one.
  const std::array<SideRef, 2>& sides_of(int e) const;

  /// Vertex at the start of each side of face f.
  std::array<int, 3> face_vertices(int f) const;

 private:
  void validate();

  int punctures_;
  std::vector<EdgeEnds> edges_;
  std::vector<Face> faces_;
  std::vector<std::array<SideRef, 2>> incidence_;
};

/// Integer skew form sigma_ij = a_ij - a_ji of a triangulation.
class SigmaMatrix {
 public:
  explicit SigmaMatrix(IntMatrix entries);

  int size() const noexcept { return static_cast<int>(entries_.rows()); }
  std::int64_t operator()(int i, int j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }

  friend bool operator==(const SigmaMatrix& a, const SigmaMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  IntMatrix entries_;
};

/// Positions of the edges around a diagonal exchange, recorded before the flip.  With
/// the diagonal oriented v_minus -> v_plus, `top` joins v_left and v_plus,
/// `right` joins v_plus and v_right, `bottom` joins v_right and v_minus and
/// `left` joins v_minus and v_left.
struct FlipRoleMap {
  int diagonal = 0;
  int top = 0;
  int right = 0;
  int bottom = 0;
  int left = 0;
  int v_minus = 0;
  int v_plus = 0;
  int v_left = 0;
  int v_right = 0;

  friend bool operator==(const FlipRoleMap&, const FlipRoleMap&) = default;
};

struct FlipResult {
  IdealTriangulation triangulation;
  FlipRoleMap roles;
};

SigmaMatrix sigma_matrix(const IdealTriangulation& t);

bool is_flip_embedded(const IdealTriangulation& t, int e);

/// Replaces diagonal e by the opposite diagonal of its square; e keeps its
/// label.  Throws NotAnEdge / NotEmbedded.
FlipResult flip(const IdealTriangulation& t, int e);

bool is_simple(const IdealTriangulation& t);

/// Edge labels around puncture j in counterclockwise order, one entry per
/// edge end.
std::vector<int> puncture_star(const IdealTriangulation& t, int j);

/// Multiplicity of each edge label in puncture_star(t, j).
IntVector star_exponents(const IdealTriangulation& t, int j);

/// Same edge endpoints and the same faces up to face order and rotation.
bool triangulations_labelled_equal(const IdealTriangulation& a, const IdealTriangulation& b);

/// Edge with label l in t gets label permutation[l].
IdealTriangulation relabel(const IdealTriangulation& t, const std::vector<int>& permutation);

/// Label permutation p with relabel(t, p) labelled-equal to reference, found
/// through endpoint pairs.  Requires reference to have no multiple edges.
std::optional<std::vector<int>> match_labels(const IdealTriangulation& t,
                                             const IdealTriangulation& reference);

}  // namespace qtb
