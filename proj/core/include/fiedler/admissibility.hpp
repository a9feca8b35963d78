#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

/// Extrema ties are resolved at this absolute tolerance on a unit vector.
inline constexpr double kExtremaTolerance = 1e-9;

struct AttachmentRow {
  int anchor_position = 0;
  int size = 0;
  double size_bound = 0.0;    // D / 32
  std::optional<double> hit;  // absent for non-isolated components
  double hit_bound = 0.0;     // min{k, D-k}^2 / 50
  bool isolated = true;
  bool size_ok = false;
  bool hit_ok = false;
};

struct AdmissibilityReport {
  int diameter = 0;
  std::vector<Vertex> path;
  std::vector<AttachmentRow> rows;
  bool admissible = false;

  double lambda2 = 0.0;
  double hit_max = 0.0;           // max attachment hit (0 without attachments)
  double lambda_hit_margin = 0.0; // lambda2 * hit_max, at most 1/2 when admissible
  double path_hit = 0.0;          // hit of the diametral path from one end: D^2
  double path_margin = 0.0;       // lambda2 * path_hit / 2, at most 5
};

/// Decomposes along the longest path of a tree and evaluates both size and
/// hitting-time conditions for every attached component.
AdmissibilityReport check_theorem2(const Graph& g);

/// Same, along a caller-supplied path (graphs with cycles). The path must be
/// certified longest by certifies_longest_path; otherwise
/// UnsupportedInputError is thrown.
AdmissibilityReport check_theorem2(const Graph& g, std::span<const Vertex> path);

/// Spine with `spine_length` edges (positions 0..spine_length); at position k
/// hang leg_count[k] pendant paths of leg_length[k] edges each.
struct CaterpillarSpec {
  int spine_length = 0;
  std::vector<int> leg_length;  // size spine_length + 1
  std::vector<int> leg_count;   // size spine_length + 1; empty means one leg where length > 0

  int legs_at(int k) const {
    if (leg_length[k] == 0) return 0;
    return leg_count.empty() ? 1 : leg_count[k];
  }
  /// Throws std::invalid_argument on negative or mis-sized entries.
  void validate() const;
};

/// Every leg obeys 20 f(k) <= min{k, n-k}.
bool check_corollary2(const CaterpillarSpec& spec);

struct ExtremaVerdict {
  std::vector<Vertex> argmax;
  std::vector<Vertex> argmin;
  int diameter = 0;
  std::vector<Edge> diametral_pairs;
  bool strict = false;   // unique max and min, forming a diametral pair
  bool relaxed = false;  // some diametral pair joins the argmax and argmin sets
  bool degenerate = false;
};

ExtremaVerdict extrema_verdict(const Graph& g, const EigenPair& pair);

/// Smallest distance between an argmax and an argmin vertex. Throws
/// UnsupportedInputError for degenerate verdicts.
int distance_between_extrema(const Graph& g, const ExtremaVerdict& verdict);

}  // namespace fiedler
