#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

inline constexpr int kMaxEnumerationOrder = 22;

/// Free trees on n vertices, one per isomorphism class. Each tree is given
/// by its canonical level sequence (preorder depths, rooted at the centre).
/// Sequences come out in strictly decreasing lexicographic order.
class FreeTreeEnumerator {
 public:
  /// Throws SizeLimitError for n > kMaxEnumerationOrder, invalid_argument for n < 1.
  explicit FreeTreeEnumerator(int n);

  /// Advances to the next tree; false once exhausted. Call before the first access.
  bool next();
  const std::vector<int>& level_sequence() const { return current_; }
  Graph graph() const;
  int order() const { return n_; }

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
  std::vector<int> pending_;
};

std::vector<Graph> enumerate_free_trees(int n);
/// Number of trees visited.
std::uint64_t for_each_free_tree(int n, const std::function<void(std::span<const int>)>& visit);

/// Vertex i is the i-th entry of the sequence; its parent is the nearest
/// earlier vertex one level up.
Graph tree_from_level_sequence(std::span<const int> levels);
/// One base-36 digit per vertex.
std::string level_code(std::span<const int> levels);
std::vector<int> parse_level_code(std::string_view code);

/// Free-tree counts for 1 <= n <= kMaxEnumerationOrder.
std::optional<std::uint64_t> known_free_tree_count(int n);

struct SurveyRecord {
  int n = 0;
  std::string code;
  double lambda2 = 0.0;
  bool degenerate = false;
  bool strict = false;
  bool relaxed = false;
  int diametral_pairs = 0;
  std::vector<Vertex> argmax;
  std::vector<Vertex> argmin;
};

SurveyRecord analyse_tree(std::span<const int> levels);

struct SurveyAggregate {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t strict_failures = 0;   // among counted trees
  std::uint64_t relaxed_failures = 0;  // among counted trees
  std::uint64_t degenerate_strict_failures = 0;
  std::uint64_t degenerate_relaxed_failures = 0;
  bool include_degenerate = false;
  std::uint64_t counted = 0;  // denominator of the fractions
  double strict_failure_fraction = 0.0;
  double relaxed_failure_fraction = 0.0;
  bool census_ok = false;  // total equals the known count

  void add(const SurveyRecord& record);
  void finish();
  bool operator==(const SurveyAggregate&) const = default;
};

struct SurveyOptions {
  int n = 0;
  int parallelism = 1;
  bool include_degenerate = false;
  std::optional<std::filesystem::path> csv_path;
  /// Written every checkpoint_interval trees; resume picks up from it.
  std::optional<std::filesystem::path> checkpoint_path;
  std::uint64_t checkpoint_interval = 100000;
  bool resume = false;
  std::function<void(const SurveyRecord&)> on_record;
};

/// Records are produced in enumeration order regardless of parallelism.
/// I/O failures throw Error; the checkpoint left behind allows resuming.
SurveyAggregate run_survey(const SurveyOptions& options);

std::string survey_csv_header();
std::string survey_csv_row(const SurveyRecord& record);

}  // namespace fiedler
