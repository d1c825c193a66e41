#include "qtbraid/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/delaunay.hpp"
#include "qtbraid/error.hpp"
#include "qtbraid/flip_pushforward.hpp"
#include "qtbraid/motion.hpp"
#include "qtbraid/projective.hpp"
#include "qtbraid/quantum_torus.hpp"
#include "qtbraid/tracking.hpp"

namespace qtb {

using Eigen::MatrixXcd;
using Eigen::Vector3d;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CheckResult start(const std::string& name, double threshold) {
  CheckResult c;
  c.name = name;
  c.threshold = threshold;
  return c;
}

void note(CheckResult& c, const std::string& what) {
  if (c.detail.empty()) c.detail = what;
}

// Runs one case; library failures are recorded and make the check fail.
void run_case(CheckResult& c, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    c.value = kInf;
    note(c, e.what());
  }
  ++c.cases;
}

CheckResult finish(CheckResult c) {
  c.pass = c.cases > 0 && c.value < c.threshold;
  if (c.cases == 0) note(c, "no cases evaluated");
  return c;
}

double rel_gap(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1.0);
}

double weights_gap(const CrossRatioWeights& a, const CrossRatioWeights& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, rel_gap(a[i], b[i]));
  return worst;
}

struct Fixture {
  IdealTriangulation t;
  ClassifyingData data;
  QuantumTorusRep rep;
};

Fixture make_fixture(const PointSet& pts, int big_n, std::mt19937_64& rng) {
  IdealTriangulation t = delaunay(pts);
  ClassifyingData data{cross_ratio_weights(t, pts), random_exponents(rng, t.punctures(), big_n), 0};
  QuantumTorusRep rep = build_irrep(t, data, RootOfUnityParams(big_n, 1));
  return {std::move(t), std::move(data), std::move(rep)};
}

bool corners_distinct(const FlipRoleMap& r) {
  const std::array<int, 4> v{r.v_minus, r.v_plus, r.v_left, r.v_right};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      if (v[a] == v[b]) return false;
  return true;
}

double matrix_gap(const MatrixXcd& a, const MatrixXcd& b) { return (a - b).norm() / b.norm(); }

// Exchanged labels along a pure word; pure loops return every puncture home.
std::vector<int> exchange_sequence(const BraidWord& w, const PointSet& pts, const LoopOptions& loop,
                                   const TrackingOptions& tracking) {
  std::vector<int> seq;
  IdealTriangulation t = delaunay(pts);
  for (const auto& g : w.letters) {
    const TrackingResult res = track_flips(pure_braid_motion(g.i, g.j, g.inverse, pts, loop), t, tracking);
    for (const auto& ev : res.events) seq.insert(seq.end(), ev.flips.begin(), ev.flips.end());
    t = res.final_triangulation;
  }
  return seq;
}

}  // namespace

std::vector<int> random_exponents(std::mt19937_64& rng, int r, int big_n) {
  std::uniform_int_distribution<int> pick(0, big_n - 1);
  std::vector<int> n(static_cast<std::size_t>(r));
  for (int& v : n) v = pick(rng);
  return n;
}

CheckResult check_relations(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                            std::mt19937_64& rng, double tolerance) {
  CheckResult c = start("relations", tolerance);
  for (const auto& pts : configs) {
    for (int big_n : orders) {
      run_case(c, [&] { c.value = std::max(c.value, relation_residual(make_fixture(pts, big_n, rng).rep)); });
    }
  }
  return finish(c);
}

CheckResult check_classification(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                                 std::mt19937_64& rng, double tolerance) {
  CheckResult c = start("classification round-trip", tolerance);
  for (const auto& pts : configs) {
    for (int big_n : orders) {
      run_case(c, [&] {
        const Fixture f = make_fixture(pts, big_n, rng);
        const RootOfUnityParams params(big_n, 1);
        const CentralValues v = central_values(f.rep, tolerance);
        double gap = std::max(v.max_deviation, weights_gap(v.x, f.data.x));
        const auto p = puncture_weights(f.data, params);
        for (std::size_t j = 0; j < p.size(); ++j) gap = std::max(gap, rel_gap(v.p[j], p[j]));
        gap = std::max(gap, rel_gap(v.h, charge(f.data, params)));
        const ClassifyingData back = classify(v, params);
        if (back.n != f.data.n || back.h_sign != forced_charge_sign(f.data.x)) {
          gap = kInf;
          note(c, "classify did not recover n and the charge sign");
        }
        c.value = std::max(c.value, gap);
      });
    }
  }
  return finish(c);
}

CheckResult check_puncture_products(const std::vector<PointSet>& configs, double tolerance) {
  CheckResult c = start("puncture products", tolerance);
  for (const auto& pts : configs) {
    run_case(c, [&] {
      const auto t = delaunay(pts);
      for (const auto& p : puncture_products(t, cross_ratio_weights(t, pts)))
        c.value = std::max(c.value, std::abs(p - 1.0));
    });
  }
  return finish(c);
}

CheckResult check_flip_coherence(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                                 int flips, std::mt19937_64& rng, double tolerance) {
  CheckResult c = start("flip coherence", tolerance);
  if (configs.empty() || orders.empty()) return finish(c);
  PushforwardOptions raw;
  raw.verify = false;
  int attempts = 0;
  for (std::size_t k = 0; c.cases < flips && attempts < 10 * flips + 100; ++k, ++attempts) {
    const PointSet& pts = configs[k % configs.size()];
    const int big_n = orders[k % orders.size()];
    try {
      Fixture f = make_fixture(pts, big_n, rng);
      QuantumTorusRep rep = f.rep;
      CentralValues values = central_values(rep);
      const auto p0 = values.p;
      const auto h0 = values.h;
      std::uniform_int_distribution<int> pick(0, f.t.edge_count() - 1);
      // Short random walk; each step is one case.
      for (int step = 0, tries = 0; step < 3 && tries < 50 && c.cases < flips; ++tries) {
        const int e = pick(rng);
        if (!is_flip_embedded(rep.triangulation(), e)) continue;
        const FlipResult res = flip(rep.triangulation(), e);
        if (!corners_distinct(res.roles) || !is_simple(res.triangulation)) continue;
        ++c.cases;
        const auto x1 = values.x[static_cast<std::size_t>(e)];
        if (std::min(std::abs(x1), std::abs(x1 + 1.0)) < 1e-12) {
          c.value = kInf;
          note(c, "diagonal weight at 0 or -1");
        }
        const CentralValues predicted = predicted_flip_values(values, res.roles);
        rep = quantum_flip_pushforward(rep, res.roles, raw);
        const CentralValues pushed = central_values(rep);
        const CrossRatioWeights geometric = cross_ratio_weights(rep.triangulation(), pts);
        double gap = std::max(central_distance(pushed, predicted), weights_gap(pushed.x, geometric));
        for (std::size_t j = 0; j < p0.size(); ++j) gap = std::max(gap, rel_gap(pushed.p[j], p0[j]));
        gap = std::max(gap, rel_gap(pushed.h, h0));
        c.value = std::max(c.value, gap);
        values = pushed;
        ++step;
      }
    } catch (const Error& e) {
      c.value = kInf;
      note(c, e.what());
    }
  }
  if (c.cases < flips) note(c, "fewer embedded flips than requested");
  CheckResult out = finish(c);
  out.pass = out.pass && c.cases >= flips;
  return out;
}

CheckResult check_flip_involution(const std::vector<PointSet>& configs, int big_n, std::mt19937_64& rng,
                                  double tolerance) {
  CheckResult c = start("flip involution", tolerance);
  for (const auto& pts : configs) {
    run_case(c, [&] {
      const Fixture f = make_fixture(pts, big_n, rng);
      for (int e = 0; e < f.t.edge_count(); ++e) {
        if (!is_flip_embedded(f.t, e)) continue;
        const QuantumTorusRep once = quantum_flip_pushforward(f.rep, e);
        const QuantumTorusRep twice = quantum_flip_pushforward(once, e);
        if (!triangulations_labelled_equal(twice.triangulation(), f.t)) {
          c.value = kInf;
          note(c, "flip back did not restore the triangulation");
        }
        for (int i = 0; i < f.t.edge_count(); ++i)
          c.value = std::max(c.value, matrix_gap(twice.generator(i), f.rep.generator(i)));
      }
    });
  }
  return finish(c);
}

namespace {

// Gap for the exchange sequence a, b, a, b, a, or nothing when it is not a
// pentagon of this triangulation.
std::optional<double> pentagon_gap(const QuantumTorusRep& rep, int a, int b) {
  const IdealTriangulation& t = rep.triangulation();
  const int m = t.edge_count();
  const std::vector<int> seq{a, b, a, b, a};
  IdealTriangulation cur = t;
  for (int e : seq) {
    if (!is_flip_embedded(cur, e)) return std::nullopt;
    cur = flip(cur, e).triangulation;
  }
  std::vector<int> swap(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) swap[static_cast<std::size_t>(i)] = i;
  std::swap(swap[static_cast<std::size_t>(a)], swap[static_cast<std::size_t>(b)]);
  if (!triangulations_labelled_equal(cur, relabel(t, swap))) return std::nullopt;
  const QuantumTorusRep pushed = compose_flip_sequence(rep, seq);
  // One scalar for all generators: compare the stacked matrices.
  const int d = rep.dimension();
  MatrixXcd lhs(d, d * m);
  MatrixXcd rhs(d, d * m);
  for (int i = 0; i < m; ++i) {
    lhs.middleCols(i * d, d) = pushed.generator(i);
    rhs.middleCols(i * d, d) = rep.generator(swap[static_cast<std::size_t>(i)]);
  }
  return projective_distance(lhs, rhs).distance;
}

}  // namespace

CheckResult check_pentagon(const std::vector<PointSet>& configs, int big_n, std::mt19937_64& rng,
                           double tolerance) {
  CheckResult c = start("pentagon", tolerance);
  for (const auto& pts : configs) {
    run_case(c, [&] {
      const Fixture f = make_fixture(pts, big_n, rng);
      for (const auto& face : f.t.faces()) {
        for (std::size_t u = 0; u < 3; ++u) {
          for (std::size_t v = 0; v < 3; ++v) {
            if (u == v || face[u].edge == face[v].edge) continue;
            if (const auto gap = pentagon_gap(f.rep, face[u].edge, face[v].edge)) {
              c.value = std::max(c.value, *gap);
              return;
            }
          }
        }
      }
      c.value = kInf;
      note(c, "no pentagon found");
    });
  }
  return finish(c);
}

CheckResult check_schur(const SchurStats& stats, double null_tolerance, double gap_tolerance) {
  CheckResult c = start("Schur gap", null_tolerance);
  c.cases = stats.solves;
  c.value = stats.max_null;
  c.detail = "smallest " + format_number(stats.max_null) + ", second " + format_number(stats.min_gap);
  c.pass = stats.solves > 0 && stats.max_null < null_tolerance && stats.min_gap > gap_tolerance;
  return c;
}

CheckResult check_homomorphism(const HomomorphismReport& report, double tolerance) {
  CheckResult c = start("homomorphism", tolerance);
  for (const auto& e : report.pairs) {
    c.value = std::max(c.value, e.distance);
    if (!e.error.empty()) note(c, e.error);
    ++c.cases;
  }
  return finish(c);
}

IsotopyReport loop_variants_report(const BraidWord& w, const RepresentationContext& ctx, double tolerance) {
  LoopOptions automatic = ctx.loop;
  LoopOptions smaller = automatic;
  // Offsets to either side whose swept triangles stay clear of the other
  // punctures; prefer one that changes the exchange sequence.
  const std::vector<int> reference = exchange_sequence(w, ctx.points, automatic, ctx.tracking);
  std::optional<LoopOptions> bent;
  for (double bulge : {0.3, -0.3, 0.15, -0.15, 0.05, -0.05, 0.02, -0.02}) {
    LoopOptions candidate = automatic;
    candidate.bulge = bulge;
    std::vector<int> seq;
    try {
      seq = exchange_sequence(w, ctx.points, candidate, ctx.tracking);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSafePath) throw;
      continue;
    }
    if (!bent) bent = candidate;
    if (seq != reference) {
      bent = candidate;
      break;
    }
  }
  if (!bent) throw Error(ErrorCode::NoSafePath, "no clear offset for the connecting arc");
  return isotopy_invariance_check(w, ctx, {automatic, smaller, *bent}, tolerance);
}

CheckResult check_isotopy(const IsotopyReport& report, double tolerance) {
  CheckResult c = start("isotopy invariance", tolerance);
  c.value = report.worst;
  c.cases = static_cast<int>(report.distances.size());
  c.detail = std::to_string(report.distinct_sequences) + " distinct exchange sequence(s)";
  return finish(c);
}

CheckResult check_flattening() {
  CheckResult c = start("double exchange", 0.5);
  run_case(c, [&] {
    const double th = 0.3;
    const MotionPath motion({{Vector3d(1, 0, 0)},
                             {Vector3d(0, 1, 0)},
                             {Vector3d(-1, 0, 0)},
                             {Vector3d(0, -std::cos(th), std::sin(th)), Vector3d(0, -std::cos(th), -std::sin(th))}});
    const IdealTriangulation t0 = delaunay(motion.start());
    const TrackingResult res = track_flips(motion, t0);
    const bool one = res.events.size() == 1 && res.events.front().flips.size() == 2;
    const bool hull = triangulations_labelled_equal(res.final_triangulation, apply_events(t0, res.events)) &&
                      is_delaunay(res.final_triangulation, motion.end());
    const IdealTriangulation recomputed = delaunay(motion.end());
    const bool same = match_labels(res.final_triangulation, recomputed).has_value();
    c.value = (one && hull && same) ? 0.0 : 1.0;
    c.detail = std::to_string(res.events.size()) + " event(s)";
    if (!res.events.empty()) c.detail += ", " + std::to_string(res.events.front().flips.size()) + " exchange(s)";
  });
  return finish(c);
}

CheckResult check_trivial(const std::vector<PointSet>& configs, const std::vector<int>& orders,
                          std::mt19937_64& rng, double tolerance) {
  CheckResult c = start("trivial cases", tolerance);
  for (const auto& pts : configs) {
    const int r = static_cast<int>(pts.size());
    for (int big_n : orders) {
      run_case(c, [&] {
        RepresentationContext ctx;
        ctx.points = pts;
        ctx.params = RootOfUnityParams(big_n, 1);
        ctx.n = random_exponents(rng, r, big_n);
        const ProjectiveMatrix id = representation(BraidWord{r, {}}, ctx);
        c.value = std::max(c.value, projective_distance(id, ProjectiveMatrix::identity(id.dimension())).distance);
        if (r == 3) {
          const std::vector<std::pair<BraidWord, BraidWord>> words = random_word_pairs(3, 1, 3, rng);
          const ProjectiveMatrix m = representation(words.front().first, ctx);
          if (m.dimension() != 1) {
            c.value = kInf;
            note(c, "dimension at r = 3 is not 1");
          }
          c.value = std::max(c.value, projective_distance(m, ProjectiveMatrix::identity(1)).distance);
        }
      });
    }
  }
  return finish(c);
}

std::vector<std::pair<BraidWord, BraidWord>> random_word_pairs(int strands, int count, int length,
                                                               std::mt19937_64& rng) {
  std::vector<std::pair<BraidWord, BraidWord>> out;
  for (int i = 0; i < count; ++i) {
    BraidWord a = random_pure_word(strands, length, rng);
    BraidWord b = random_pure_word(strands, length, rng);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace qtb
