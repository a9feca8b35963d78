#include "fiedler/admissibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "fiedler/errors.hpp"
#include "fiedler/hitting.hpp"

namespace fiedler {

namespace {

AdmissibilityReport evaluate(const Graph& g, const PathDecomposition& decomposition) {
  AdmissibilityReport report;
  report.path = decomposition.path;
  report.diameter = decomposition.diameter();
  const int d = report.diameter;
  bool admissible = true;
  for (int k = 0; k <= d; ++k) {
    for (const auto& comp : decomposition.attachments[k]) {
      AttachmentRow row;
      row.anchor_position = comp.anchor_position;
      row.size = comp.size();
      row.size_bound = d / 32.0;
      const double reach = std::min(k, d - k);
      row.hit_bound = reach * reach / 50.0;
      row.isolated = comp.isolated;
      row.size_ok = 32 * row.size <= d;
      if (comp.isolated) {
        row.hit = attachment_hit(decomposition, comp, g);
        row.hit_ok = *row.hit <= row.hit_bound + 1e-9 * std::max(1.0, row.hit_bound);
        report.hit_max = std::max(report.hit_max, *row.hit);
      }
      admissible = admissible && row.isolated && row.size_ok && row.hit_ok;
      report.rows.push_back(row);
    }
  }
  report.admissible = admissible;

  if (g.vertex_count() >= 2) {
    report.lambda2 = fiedler_pair(g).lambda;
    report.lambda_hit_margin = report.lambda2 * report.hit_max;
    report.path_hit = static_cast<double>(d) * d;
    report.path_margin = report.lambda2 * report.path_hit / 2.0;
  }
  return report;
}

}  // namespace

AdmissibilityReport check_theorem2(const Graph& g) {
  const auto path = longest_path(g);
  return evaluate(g, decompose_along_path(g, path));
}

AdmissibilityReport check_theorem2(const Graph& g, std::span<const Vertex> path) {
  require_connected(g);
  const auto decomposition = decompose_along_path(g, path);
  if (!certifies_longest_path(g, decomposition)) {
    throw UnsupportedInputError("check_theorem2: supplied path is not certified longest");
  }
  return evaluate(g, decomposition);
}

void CaterpillarSpec::validate() const {
  if (spine_length < 0) throw std::invalid_argument("caterpillar: negative spine length");
  const auto positions = static_cast<std::size_t>(spine_length) + 1;
  if (leg_length.size() != positions) throw std::invalid_argument("caterpillar: leg_length size");
  if (!leg_count.empty() && leg_count.size() != positions) {
    throw std::invalid_argument("caterpillar: leg_count size");
  }
  if (std::any_of(leg_length.begin(), leg_length.end(), [](int f) { return f < 0; }) ||
      std::any_of(leg_count.begin(), leg_count.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("caterpillar: negative entry");
  }
}

bool check_corollary2(const CaterpillarSpec& spec) {
  spec.validate();
  const int n = spec.spine_length;
  for (int k = 0; k <= n; ++k) {
    if (spec.legs_at(k) > 0 && 20 * spec.leg_length[k] > std::min(k, n - k)) return false;
  }
  return true;
}

ExtremaVerdict extrema_verdict(const Graph& g, const EigenPair& pair) {
  ExtremaVerdict verdict;
  verdict.degenerate = pair.degenerate;
  const auto& phi = pair.phi;
  const double hi = *std::max_element(phi.begin(), phi.end());
  const double lo = *std::min_element(phi.begin(), phi.end());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (phi[v] >= hi - kExtremaTolerance) verdict.argmax.push_back(v);
    if (phi[v] <= lo + kExtremaTolerance) verdict.argmin.push_back(v);
  }
  auto info = diameter_and_diametral_pairs(g);
  verdict.diameter = info.diameter;
  verdict.diametral_pairs = std::move(info.pairs);

  auto in = [](const std::vector<Vertex>& set, Vertex v) {
    return std::binary_search(set.begin(), set.end(), v);
  };
  for (auto [u, v] : verdict.diametral_pairs) {
    if ((in(verdict.argmax, u) && in(verdict.argmin, v)) ||
        (in(verdict.argmax, v) && in(verdict.argmin, u))) {
      verdict.relaxed = true;
      break;
    }
  }
  verdict.strict = verdict.relaxed && verdict.argmax.size() == 1 && verdict.argmin.size() == 1;
  return verdict;
}

int distance_between_extrema(const Graph& g, const ExtremaVerdict& verdict) {
  if (verdict.degenerate) {
    throw UnsupportedInputError("distance_between_extrema: Fiedler value is degenerate");
  }
  const auto dist = multi_source_distances(g, verdict.argmax);
  int best = -1;
  for (Vertex v : verdict.argmin) {
    if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
  }
  if (best < 0) throw DisconnectedGraphError();
  return best;
}

}  // namespace fiedler
