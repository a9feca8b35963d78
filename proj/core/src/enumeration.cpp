#include "fiedler/enumeration.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

using Levels = std::vector<int>;

// Next rooted tree in decreasing level-sequence order, changing position p
// onwards (default: the last non-leaf-of-root position).
std::optional<Levels> next_rooted_tree(const Levels& pred, std::optional<int> from = {}) {
  int p;
  if (from) {
    p = *from;
  } else {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Levels result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits at the second child of the root: the first subtree (levels shifted
// up by one) and the root with everything else.
std::pair<Levels, Levels> split_tree(const Levels& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  Levels left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Levels rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {std::move(left), std::move(rest)};
}

bool is_canonical_free(const Levels& candidate) {
  const auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  if (rest_height != left_height) return rest_height > left_height;
  if (left.size() != rest.size()) return left.size() < rest.size();
  return !(left > rest);
}

// First canonical sequence at or after `candidate`.
std::optional<Levels> next_free_tree(Levels candidate) {
  while (!is_canonical_free(candidate)) {
    const int p = static_cast<int>(split_tree(candidate).first.size());
    auto jumped = next_rooted_tree(candidate, p);
    if (!jumped) return std::nullopt;
    if (candidate[p] > 2) {
      const auto [left, rest] = split_tree(*jumped);
      const int left_height = *std::max_element(left.begin(), left.end());
      const std::size_t len = static_cast<std::size_t>(left_height) + 1;
      for (std::size_t i = 0; i < len; ++i) (*jumped)[jumped->size() - len + i] = static_cast<int>(i) + 1;
    }
    candidate = std::move(*jumped);
  }
  return candidate;
}

Levels initial_layout(int n) {
  Levels layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  return layout;
}

}  // namespace

FreeTreeEnumerator::FreeTreeEnumerator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("free tree enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw SizeLimitError("free tree enumeration is capped at n = " + std::to_string(kMaxEnumerationOrder));
  }
}

bool FreeTreeEnumerator::next() {
  if (done_) return false;
  if (n_ <= 2) {
    if (started_) {
      done_ = true;
      return false;
    }
    started_ = true;
    current_ = n_ == 1 ? Levels{0} : Levels{0, 1};
    return true;
  }
  std::optional<Levels> candidate;
  if (!started_) {
    started_ = true;
    candidate = initial_layout(n_);
  } else {
    candidate = next_rooted_tree(current_);
  }
  if (candidate) candidate = next_free_tree(std::move(*candidate));
  if (!candidate) {
    done_ = true;
    return false;
  }
  current_ = std::move(*candidate);
  return true;
}

Graph FreeTreeEnumerator::graph() const { return tree_from_level_sequence(current_); }

std::vector<Graph> enumerate_free_trees(int n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](std::span<const int> levels) { out.push_back(tree_from_level_sequence(levels)); });
  return out;
}

std::uint64_t for_each_free_tree(int n, const std::function<void(std::span<const int>)>& visit) {
  FreeTreeEnumerator it(n);
  std::uint64_t count = 0;
  while (it.next()) {
    visit(it.level_sequence());
    ++count;
  }
  return count;
}

Graph tree_from_level_sequence(std::span<const int> levels) {
  const int n = static_cast<int>(levels.size());
  if (n == 0 || levels[0] != 0) throw ParseError(0, "level sequence must start with a 0 root");
  std::vector<Vertex> last_at_level{0};
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int level = levels[i];
    if (level < 1 || level > static_cast<int>(last_at_level.size())) {
      throw ParseError(0, "invalid level " + std::to_string(level) + " at position " + std::to_string(i));
    }
    edges.emplace_back(last_at_level[level - 1], i);
    last_at_level.resize(level);
    last_at_level.push_back(i);
  }
  return Graph::from_edges(n, edges);
}

std::string level_code(std::span<const int> levels) {
  static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string code;
  code.reserve(levels.size());
  for (int level : levels) {
    if (level < 0 || level >= 36) throw std::invalid_argument("level out of base-36 range");
    code.push_back(digits[level]);
  }
  return code;
}

std::vector<int> parse_level_code(std::string_view code) {
  std::vector<int> levels;
  levels.reserve(code.size());
  for (char c : code) {
    if (c >= '0' && c <= '9') {
      levels.push_back(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      levels.push_back(c - 'a' + 10);
    } else {
      throw ParseError(0, std::string("bad level code character '") + c + "'");
    }
  }
  return levels;
}

std::optional<std::uint64_t> known_free_tree_count(int n) {
  static constexpr std::array<std::uint64_t, kMaxEnumerationOrder> counts{
      1,     1,     1,      2,      3,      6,      11,      23,      47,      106,     235,
      551,   1301,  3159,   7741,   19320,  48629,  123867,  317955,  823065,  2144505, 5623756};
  if (n < 1 || n > kMaxEnumerationOrder) return std::nullopt;
  return counts[n - 1];
}

}  // namespace fiedler
