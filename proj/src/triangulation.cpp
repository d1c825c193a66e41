#include "qtbraid/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "qtbraid/error.hpp"

namespace qtb {

namespace {

int next_slot(int k) { return (k + 1) % 3; }
int prev_slot(int k) { return (k + 2) % 3; }

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidTriangulation, what);
}

// Rotation of a face starting with its lexicographically smallest side.
Face canonical_rotation(const Face& f) {
  auto key = [](const Side& s) { return std::pair{s.edge, s.reversed}; };
  int best = 0;
  for (int k = 1; k < 3; ++k) {
    if (key(f[k]) < key(f[best])) best = k;
  }
  return {f[best], f[next_slot(best)], f[prev_slot(best)]};
}

std::vector<std::array<std::pair<int, bool>, 3>> face_signature(const IdealTriangulation& t) {
  std::vector<std::array<std::pair<int, bool>, 3>> out;
  out.reserve(t.faces().size());
  for (const auto& f : t.faces()) {
    const Face c = canonical_rotation(f);
    out.push_back({std::pair{c[0].edge, c[0].reversed}, std::pair{c[1].edge, c[1].reversed},
                   std::pair{c[2].edge, c[2].reversed}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IdealTriangulation::IdealTriangulation(int punctures, std::vector<EdgeEnds> edges,
                                       std::vector<Face> faces)
    : punctures_(punctures), edges_(std::move(edges)), faces_(std::move(faces)) {
  // Normalize orientation so that tail <= head; the sides walking an edge
  // swap their direction flag along with it.
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].tail > edges_[e].head) {
      std::swap(edges_[e].tail, edges_[e].head);
      for (auto& f : faces_) {
        for (auto& s : f) {
          if (s.edge == static_cast<int>(e)) s.reversed = !s.reversed;
        }
      }
    }
  }
  validate();
}

void IdealTriangulation::validate() {
  const int r = punctures_;
  if (r < 3) invalid("need at least 3 punctures");
  const auto n = static_cast<std::size_t>(3 * r - 6);
  if (edges_.size() != n) invalid("expected 3r-6 = " + std::to_string(n) + " edges");
  if (faces_.size() != static_cast<std::size_t>(2 * r - 4)) invalid("expected 2r-4 faces");
  for (const auto& e : edges_) {
    if (e.tail < 0 || e.head >= r) invalid("edge endpoint out of range");
  }

  incidence_.assign(n, {SideRef{-1, -1}, SideRef{-1, -1}});
  for (int f = 0; f < face_count(); ++f) {
    for (int k = 0; k < 3; ++k) {
      const Side& s = faces_[static_cast<std::size_t>(f)][static_cast<std::size_t>(k)];
      if (s.edge < 0 || static_cast<std::size_t>(s.edge) >= n) invalid("side label out of range");
      auto& slot = incidence_[static_cast<std::size_t>(s.edge)][s.reversed ? 1 : 0];
      if (slot.face != -1) {
        invalid("edge " + std::to_string(s.edge + 1) + " walked twice in the same direction");
      }
      slot = SideRef{f, k};
    }
    for (int k = 0; k < 3; ++k) {
      const Face& face = faces_[static_cast<std::size_t>(f)];
      if (side_head(face[static_cast<std::size_t>(k)]) !=
          side_tail(face[static_cast<std::size_t>(next_slot(k))])) {
        invalid("face " + std::to_string(f + 1) + " sides do not chain");
      }
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (incidence_[e][0].face == -1 || incidence_[e][1].face == -1) {
      invalid("edge " + std::to_string(e + 1) + " does not border two face sides");
    }
  }

  // The corners at each puncture must form one cycle.
  std::vector<int> corner_count(static_cast<std::size_t>(r), 0);
  for (const auto& f : faces_) {
    for (const auto& s : f) ++corner_count[static_cast<std::size_t>(side_tail(s))];
  }
  for (int j = 0; j < r; ++j) {
    if (corner_count[static_cast<std::size_t>(j)] == 0) {
      invalid("puncture " + std::to_string(j + 1) + " has no corners");
    }
    const auto star = puncture_star(*this, j);
    if (static_cast<int>(star.size()) != corner_count[static_cast<std::size_t>(j)]) {
      invalid("corners around puncture " + std::to_string(j + 1) + " do not form one cycle");
    }
  }
}

IdealTriangulation IdealTriangulation::from_vertex_faces(
    int punctures, const std::vector<std::array<int, 3>>& faces) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[static_cast<std::size_t>(k)];
      const int b = f[static_cast<std::size_t>(next_slot(k))];
      pairs.insert({std::min(a, b), std::max(a, b)});
    }
  }
  std::vector<EdgeEnds> edges;
  std::map<std::pair<int, int>, int> label;
  for (const auto& [a, b] : pairs) {
    label[{a, b}] = static_cast<int>(edges.size());
    edges.push_back({a, b});
  }
  auto sorted = faces;
  for (auto& f : sorted) {
    const auto m = std::min_element(f.begin(), f.end()) - f.begin();
    std::rotate(f.begin(), f.begin() + m, f.end());
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<Face> out;
  for (const auto& f : sorted) {
    Face face;
    for (int k = 0; k < 3; ++k) {
      const int a = f[static_cast<std::size_t>(k)];
      const int b = f[static_cast<std::size_t>(next_slot(k))];
      face[static_cast<std::size_t>(k)] = Side{label.at({std::min(a, b), std::max(a, b)}), a > b};
    }
    out.push_back(face);
  }
  return IdealTriangulation(punctures, std::move(edges), std::move(out));
}

int IdealTriangulation::side_tail(const Side& s) const {
  const auto& e = edges_.at(static_cast<std::size_t>(s.edge));
  return s.reversed ? e.head : e.tail;
}

int IdealTriangulation::side_head(const Side& s) const {
  const auto& e = edges_.at(static_cast<std::size_t>(s.edge));
  return s.reversed ? e.tail : e.head;
}

const Side& IdealTriangulation::side(const SideRef& ref) const {
  return faces_.at(static_cast<std::size_t>(ref.face)).at(static_cast<std::size_t>(ref.slot));
}

const std::array<SideRef, 2>& IdealTriangulation::sides_of(int e) const {
  if (e < 0 || e >= edge_count()) {
    throw Error(ErrorCode::NotAnEdge, "label " + std::to_string(e + 1) + " out of range");
  }
  return incidence_[static_cast<std::size_t>(e)];
}

std::array<int, 3> IdealTriangulation::face_vertices(int f) const {
  const Face& face = this->face(f);
  return {side_tail(face[0]), side_tail(face[1]), side_tail(face[2])};
}

SigmaMatrix::SigmaMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_ != -entries_.transpose()) {
    throw Error(ErrorCode::InvalidArgument, "sigma must be antisymmetric");
  }
  if (entries_.size() > 0 && entries_.cwiseAbs().maxCoeff() > 2) {
    throw Error(ErrorCode::InvalidArgument, "sigma entries must lie in {0, +-1, +-2}");
  }
}

SigmaMatrix sigma_matrix(const IdealTriangulation& t) {
  const int n = t.edge_count();
  IntMatrix s = IntMatrix::Zero(n, n);
  // At the corner where side k ends and side k+1 starts, the outgoing side
  // k+1 comes first counterclockwise.
  for (const auto& f : t.faces()) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[static_cast<std::size_t>(k)].edge;
      const int b = f[static_cast<std::size_t>(next_slot(k))].edge;
      s(b, a) += 1;
      s(a, b) -= 1;
    }
  }
  return SigmaMatrix(std::move(s));
}

bool is_flip_embedded(const IdealTriangulation& t, int e) {
  const auto& refs = t.sides_of(e);
  if (refs[0].face == refs[1].face) return false;
  std::set<int> labels;
  for (const auto& ref : refs) {
    const Face& f = t.face(ref.face);
    labels.insert(f[static_cast<std::size_t>(next_slot(ref.slot))].edge);
    labels.insert(f[static_cast<std::size_t>(prev_slot(ref.slot))].edge);
  }
  return labels.size() == 4;
}

FlipResult flip(const IdealTriangulation& t, int e) {
  if (!is_flip_embedded(t, e)) {
    throw Error(ErrorCode::NotEmbedded,
                "square around edge " + std::to_string(e + 1) + " has repeated sides");
  }
  const auto& refs = t.sides_of(e);
  const Face& left_face = t.face(refs[0].face);
  const Face& right_face = t.face(refs[1].face);
  const Side top = left_face[static_cast<std::size_t>(next_slot(refs[0].slot))];
  const Side left = left_face[static_cast<std::size_t>(prev_slot(refs[0].slot))];
  const Side bottom = right_face[static_cast<std::size_t>(next_slot(refs[1].slot))];
  const Side right = right_face[static_cast<std::size_t>(prev_slot(refs[1].slot))];

  FlipRoleMap roles;
  roles.diagonal = e;
  roles.top = top.edge;
  roles.right = right.edge;
  roles.bottom = bottom.edge;
  roles.left = left.edge;
  roles.v_minus = t.edge(e).tail;
  roles.v_plus = t.edge(e).head;
  roles.v_left = t.side_head(top);
  roles.v_right = t.side_head(bottom);

  auto edges = t.edges();
  auto faces = t.faces();
  const int lo = std::min(roles.v_left, roles.v_right);
  const int hi = std::max(roles.v_left, roles.v_right);
  edges[static_cast<std::size_t>(e)] = EdgeEnds{lo, hi};
  // The old right face now walks the new diagonal v_right -> v_left; a loop
  // is walked forward there.
  const bool reversed = roles.v_right > roles.v_left;
  faces[static_cast<std::size_t>(refs[1].face)] = Face{left, bottom, Side{e, reversed}};
  faces[static_cast<std::size_t>(refs[0].face)] = Face{right, top, Side{e, !reversed}};
  return FlipResult{IdealTriangulation(t.punctures(), std::move(edges), std::move(faces)), roles};
}

bool is_simple(const IdealTriangulation& t) {
  return std::none_of(t.edges().begin(), t.edges().end(),
                      [](const EdgeEnds& e) { return e.tail == e.head; });
}

std::vector<int> puncture_star(const IdealTriangulation& t, int j) {
  if (j < 0 || j >= t.punctures()) {
    throw Error(ErrorCode::IndexOutOfRange, "puncture " + std::to_string(j + 1));
  }
  SideRef start{-1, -1};
  for (int f = 0; f < t.face_count() && start.face < 0; ++f) {
    for (int k = 0; k < 3; ++k) {
      if (t.side_tail(t.face(f)[static_cast<std::size_t>(k)]) == j) {
        start = {f, k};
        break;
      }
    }
  }
  std::vector<int> star;
  if (start.face < 0) return star;
  // Counterclockwise around j inside a face goes from the outgoing side to
  // the incoming one; crossing the incoming side lands on the next corner.
  SideRef cur = start;
  const std::size_t limit = 6 * t.edges().size() + 6;
  do {
    star.push_back(t.side(cur).edge);
    const Side& incoming = t.face(cur.face)[static_cast<std::size_t>(prev_slot(cur.slot))];
    const auto& refs = t.sides_of(incoming.edge);
    cur = refs[incoming.reversed ? 0 : 1];
    if (star.size() > limit) break;
  } while (cur.face != start.face || cur.slot != start.slot);
  return star;
}

IntVector star_exponents(const IdealTriangulation& t, int j) {
  IntVector k = IntVector::Zero(t.edge_count());
  for (int e : puncture_star(t, j)) k(e) += 1;
  return k;
}

bool triangulations_labelled_equal(const IdealTriangulation& a, const IdealTriangulation& b) {
  return a.punctures() == b.punctures() && a.edges() == b.edges() &&
         face_signature(a) == face_signature(b);
}

IdealTriangulation relabel(const IdealTriangulation& t, const std::vector<int>& permutation) {
  const auto n = static_cast<std::size_t>(t.edge_count());
  if (permutation.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  }
  std::vector<EdgeEnds> edges(n);
  std::vector<bool> seen(n, false);
  for (std::size_t l = 0; l < n; ++l) {
    const int p = permutation[l];
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)]) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
    edges[static_cast<std::size_t>(p)] = t.edge(static_cast<int>(l));
  }
  auto faces = t.faces();
  for (auto& f : faces) {
    for (auto& s : f) s.edge = permutation[static_cast<std::size_t>(s.edge)];
  }
  return IdealTriangulation(t.punctures(), std::move(edges), std::move(faces));
}

std::optional<std::vector<int>> match_labels(const IdealTriangulation& t,
                                             const IdealTriangulation& reference) {
  if (t.punctures() != reference.punctures()) return std::nullopt;
  std::map<std::pair<int, int>, int> by_ends;
  for (int l = 0; l < reference.edge_count(); ++l) {
    const auto& e = reference.edge(l);
    if (!by_ends.emplace(std::pair{e.tail, e.head}, l).second) return std::nullopt;
  }
  std::vector<int> perm(static_cast<std::size_t>(t.edge_count()));
  std::vector<bool> used(perm.size(), false);
  for (int l = 0; l < t.edge_count(); ++l) {
    const auto it = by_ends.find({t.edge(l).tail, t.edge(l).head});
    if (it == by_ends.end() || used[static_cast<std::size_t>(it->second)]) return std::nullopt;
    used[static_cast<std::size_t>(it->second)] = true;
    perm[static_cast<std::size_t>(l)] = it->second;
  }
  if (!triangulations_labelled_equal(relabel(t, perm), reference)) return std::nullopt;
  return perm;
}

}  // namespace qtb
