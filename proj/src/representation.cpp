#include "qtbraid/representation.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "qtbraid/cross_ratio.hpp"
#include "qtbraid/delaunay.hpp"
#include "qtbraid/error.hpp"

namespace qtb {

using Eigen::MatrixXcd;
using Eigen::Vector3d;

namespace {

ClassifyingData base_data(const IdealTriangulation& t, const RepresentationContext& ctx) {
  ClassifyingData data;
  data.x = cross_ratio_weights(t, ctx.points);
  data.n = ctx.n.empty() ? std::vector<int>(ctx.points.size(), 0) : ctx.n;
  data.h_sign = ctx.h_sign;
  return data;
}

double relative_gap(const std::complex<double>& a, const std::complex<double>& b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// Representation on t whose generator perm[l] is rep's generator l.
QuantumTorusRep relabeled(const QuantumTorusRep& rep, const std::vector<int>& perm,
                          const IdealTriangulation& target) {
  std::vector<MatrixXcd> gens(rep.generators().size());
  std::vector<MatrixXcd> invs(rep.inverses().size());
  for (std::size_t l = 0; l < perm.size(); ++l) {
    gens[static_cast<std::size_t>(perm[l])] = rep.generator(static_cast<int>(l));
    invs[static_cast<std::size_t>(perm[l])] = rep.inverse(static_cast<int>(l));
  }
  return QuantumTorusRep(target, rep.params(), std::move(gens), std::move(invs));
}

}  // namespace

QuantumTorusRep base_representation(const RepresentationContext& ctx) {
  const IdealTriangulation t = delaunay(ctx.points);
  return build_irrep(t, base_data(t, ctx), ctx.params);
}

BraidRepResult braid_representation(const BraidWord& w, const RepresentationContext& ctx) {
  const int r = static_cast<int>(ctx.points.size());
  if (w.strands != r) {
    throw Error(ErrorCode::InvalidArgument, "word has " + std::to_string(w.strands) +
                                                " strands but the configuration has " + std::to_string(r) +
                                                " points");
  }
  const auto perm_slots = induced_permutation(w);
  for (int s = 0; s < r; ++s) {
    if (perm_slots[static_cast<std::size_t>(s)] != s) {
      throw Error(ErrorCode::NotPure, "word '" + w.text() + "' is not a pure braid");
    }
  }
  const IdealTriangulation lambda = delaunay(ctx.points);
  const ClassifyingData data = base_data(lambda, ctx);
  const QuantumTorusRep rho = build_irrep(lambda, data, ctx.params);
  const CentralValues start = central_values(rho);

  FlipPusher pusher(rho, ctx.flips);
  std::vector<Vector3d> pts = ctx.points;
  std::vector<int> slot(static_cast<std::size_t>(r));
  std::iota(slot.begin(), slot.end(), 0);
  std::vector<FlipLogEntry> log;
  for (std::size_t letter = 0; letter < w.letters.size(); ++letter) {
    const auto& g = w.letters[letter];
    const int a = slot[static_cast<std::size_t>(g.i)];
    const int b = slot[static_cast<std::size_t>(g.j)];
    const MotionPath motion = g.kind == BraidGenerator::Kind::Pure
                                  ? pure_braid_motion(a, b, g.inverse, pts, ctx.loop)
                                  : half_twist_motion(a, b, g.inverse, pts, ctx.loop);
    const TrackingResult tracked = track_flips(motion, pusher.triangulation(), ctx.tracking);
    for (const auto& ev : tracked.events) {
      for (int e : ev.flips) pusher.push(e);
      FlipLogEntry entry;
      entry.letter = static_cast<int>(letter);
      entry.t = ev.t;
      entry.flips = ev.flips;
      entry.punctures = ev.punctures;
      entry.values = pusher.expected();
      log.push_back(std::move(entry));
    }
    pts = motion.end();
    if (g.kind == BraidGenerator::Kind::HalfTwist) {
      std::swap(slot[static_cast<std::size_t>(g.i)], slot[static_cast<std::size_t>(g.j)]);
    }
  }

  const auto perm = match_labels(pusher.triangulation(), lambda);
  if (!perm) {
    throw Error(ErrorCode::TrackingMismatch, "end triangulation does not match the start");
  }
  BraidRepResult out{ProjectiveMatrix::identity(rho.dimension()), lambda, std::move(log), {}, 0.0, 0.0,
                     0.0,  0.0, pusher.flips()};

  // Same geometric edge, same weight: the isomorphism criterion.
  const auto end_x = cross_ratio_weights(pusher.triangulation(), pts);
  const CentralValues& expected = pusher.expected();
  for (std::size_t l = 0; l < perm->size(); ++l) {
    const auto& x0 = start.x[static_cast<std::size_t>((*perm)[l])];
    out.weight_mismatch = std::max(out.weight_mismatch, relative_gap(end_x[l], x0));
    out.data_mismatch = std::max(out.data_mismatch, relative_gap(expected.x[l], x0));
  }
  for (std::size_t j = 0; j < start.p.size(); ++j) {
    out.data_mismatch = std::max(out.data_mismatch, relative_gap(expected.p[j], start.p[j]));
  }
  out.data_mismatch = std::max(out.data_mismatch, relative_gap(expected.h, start.h));
  if (out.data_mismatch > ctx.data_tolerance) {
    throw Error(ErrorCode::InternalCheckFailed,
                "end-of-word central data differs from the start by " + format_number(out.data_mismatch));
  }

  // pushed = G rep G^{-1}; rep_m L0 = L0 A_m gives pushed_m (G L0) = (G L0) A_m.
  const QuantumTorusRep end_rep = relabeled(pusher.representative(), *perm, lambda);
  out.solve = intertwiner(end_rep, rho, ctx.intertwiner);
  out.min_schur_gap = std::min(pusher.min_schur_gap(), out.solve.second_singular);
  out.max_null_singular = std::max(pusher.max_null_singular(), out.solve.smallest_singular);
  out.matrix = ProjectiveMatrix(pusher.frame() * out.solve.matrix);
  return out;
}

ProjectiveMatrix representation(const BraidWord& w, const RepresentationContext& ctx) {
  return braid_representation(w, ctx).matrix;
}

void SchurStats::add(const BraidRepResult& r) {
  min_gap = std::min(min_gap, r.min_schur_gap);
  max_null = std::max(max_null, r.max_null_singular);
  ++solves;
}

void SchurStats::merge(const SchurStats& other) {
  min_gap = std::min(min_gap, other.min_gap);
  max_null = std::max(max_null, other.max_null);
  solves += other.solves;
}

HomomorphismReport verify_homomorphism(const std::vector<std::pair<BraidWord, BraidWord>>& pairs,
                                       const RepresentationContext& ctx, double tolerance) {
  HomomorphismReport report;
  for (const auto& [w1, w2] : pairs) {
    HomomorphismEntry entry{w1.text(), w2.text(), std::numeric_limits<double>::infinity(), {0.0, 0.0}, {}};
    try {
      const BraidRepResult joint = braid_representation(w1 * w2, ctx);
      const BraidRepResult first = braid_representation(w1, ctx);
      const BraidRepResult second = braid_representation(w2, ctx);
      for (const auto* r : {&joint, &first, &second}) report.schur.add(*r);
      const ProjectiveDistance d = projective_distance(joint.matrix, first.matrix * second.matrix);
      entry.distance = d.distance;
      entry.scalar = d.scalar;
    } catch (const Error& e) {
      entry.error = e.what();
    }
    report.worst = std::max(report.worst, entry.distance);
    if (!(entry.distance < tolerance)) report.pass = false;
    report.pairs.push_back(std::move(entry));
  }
  return report;
}

IsotopyReport isotopy_invariance_check(const BraidWord& w, const RepresentationContext& ctx,
                                       const std::vector<LoopOptions>& variants, double tolerance) {
  IsotopyReport report;
  std::set<std::vector<int>> sequences;
  for (const auto& loop : variants) {
    RepresentationContext c = ctx;
    c.loop = loop;
    const BraidRepResult r = braid_representation(w, c);
    report.schur.add(r);
    report.matrices.push_back(r.matrix);
    std::vector<int> seq;
    for (const auto& e : r.log) seq.insert(seq.end(), e.flips.begin(), e.flips.end());
    sequences.insert(std::move(seq));
  }
  report.distinct_sequences = static_cast<int>(sequences.size());
  for (std::size_t i = 0; i < report.matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < report.matrices.size(); ++j) {
      const double d = projective_distance(report.matrices[i], report.matrices[j]).distance;
      report.distances.push_back(d);
      report.worst = std::max(report.worst, d);
      if (!(d < tolerance)) report.pass = false;
    }
  }
  return report;
}

std::vector<TraceScanRow> trace_scan(const BraidWord& w, const RepresentationContext& ctx,
                                     const std::vector<int>& orders, int s) {
  std::vector<TraceScanRow> rows;
  for (int big_n : orders) {
    RepresentationContext c = ctx;
    c.params = RootOfUnityParams(big_n, s);
    for (int& nj : c.n) nj = ((nj % big_n) + big_n) % big_n;
    const ProjectiveMatrix m = representation(w, c);
    rows.push_back({big_n, m.dimension(), std::abs(m.det_normalized().trace())});
  }
  return rows;
}

}  // namespace qtb
