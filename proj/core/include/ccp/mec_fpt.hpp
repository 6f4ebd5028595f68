#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccp/graph.hpp"
#include "ccp/partition.hpp"
#include "ccp/tree.hpp"

namespace ccp {

/// Label bitmasks are dense tables of 2^h entries.
inline constexpr std::size_t kMaxLabels = 12;
/// Color subsets of the color-set variant are 64-bit masks.
inline constexpr std::size_t kMaxColorBits = 64;
/// Exhaustive mode refuses to enumerate more labelings than this.
inline constexpr std::uint64_t kMaxExhaustiveLabelings = std::uint64_t{1} << 22;

inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
inline constexpr std::uint32_t kUnlabeled = std::numeric_limits<std::uint32_t>::max();

/// Vertex labels in 0..h-1, or kUnlabeled. Vertices of interesting
/// components must carry pairwise distinct labels.
struct LabelAssignment {
  std::size_t h = 0;
  std::vector<std::uint32_t> label;
};

/// Per-component-root recoloring: colors[w][c] is f_w(c) in 0..width-1 for
/// every dense color index c.
struct Recoloring {
  std::size_t width = 0;
  std::vector<std::vector<std::uint32_t>> colors;
};

/// Maximum matching of the subtree rooted at v.
std::int64_t tree_match(const RootedTree& t, Vertex v);

/// Key of a T-table cell: the partial component's color (or recolored) set,
/// the labels used so far and, for the recoloring variant, the depth of the
/// component's root.
struct TKey {
  std::uint64_t colors = 0;
  std::uint32_t labels = 0;
  std::uint32_t slot = 0;
  friend bool operator==(const TKey&, const TKey&) = default;
};

struct TKeyHash {
  std::size_t operator()(const TKey& k) const noexcept {
    std::uint64_t x = k.colors * 0x9E3779B97F4A7C15ull;
    x ^= (std::uint64_t{k.labels} << 20) ^ k.slot;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

using TTable = std::unordered_map<TKey, std::int64_t, TKeyHash>;

/// Color-coding dynamic program over a rooted tree.
///
/// For vertex v with children x_1..x_z and prefix j (the subtrees of
/// x_1..x_j plus v):
///   I[v][j][L] v is a singleton so far,
///   E[v][j][L] v is matched to one of x_1..x_j,
///   T[v][j][key] v lies in a partial labeled component,
///   S[v][L] best over the whole subtree.
/// L is exactly the set of labels used by interesting components.
class ColorCodingDp {
 public:
  /// `g` must be a normalized tree and `t` a rooting of it. Colors are used
  /// directly as bit positions unless a recoloring is supplied.
  ColorCodingDp(const ColoredGraph& g, const RootedTree& t, LabelAssignment labels,
                std::optional<Recoloring> recoloring = std::nullopt);

  std::size_t h() const { return labels_.h; }
  std::uint32_t full_labels() const { return static_cast<std::uint32_t>((std::uint64_t{1} << h()) - 1); }

  std::int64_t S(Vertex v, std::uint32_t labels) const { return s_[v][labels]; }
  std::int64_t I(Vertex v, std::size_t j, std::uint32_t labels) const { return i_[v][j][labels]; }
  std::int64_t E(Vertex v, std::size_t j, std::uint32_t labels) const { return e_[v][j][labels]; }
  /// b = 1 is the finalized view: only components with at least 3 vertices.
  std::int64_t T(Vertex v, std::size_t j, std::uint32_t labels, std::uint64_t colors, int b,
                 std::uint32_t slot = 0) const;
  const TTable& t_table(Vertex v, std::size_t j) const { return t_[v][j]; }

  /// S[root][L] for the full label set.
  std::int64_t root_value() const { return S(tree_.root, full_labels()); }
  /// Max over L' of S[root][L'], with the smallest maximizing L'.
  std::int64_t best_value() const;
  std::uint32_t best_labels() const;

  /// Kept edges of a solution realizing S[root][labels].
  std::vector<EdgeId> witness(std::uint32_t labels) const;

 private:
  std::uint64_t color_bit(Vertex v, std::uint32_t slot) const;
  std::uint32_t finalize_slot(Vertex v) const;
  void compute(Vertex v);
  void recon_s(Vertex v, std::uint32_t labels, std::vector<EdgeId>& kept) const;
  void recon_i(Vertex v, std::size_t j, std::uint32_t labels, std::vector<EdgeId>& kept) const;
  void recon_e(Vertex v, std::size_t j, std::uint32_t labels, std::vector<EdgeId>& kept) const;
  void recon_t(Vertex v, std::size_t j, TKey key, std::vector<EdgeId>& kept) const;

  const ColoredGraph& g_;
  RootedTree tree_;
  LabelAssignment labels_;
  std::optional<Recoloring> recoloring_;
  std::vector<std::uint32_t> dense_color_;
  /// ancestors_[v][d] is the ancestor of v at depth d (recoloring only).
  std::vector<std::vector<Vertex>> ancestors_;
  std::vector<std::vector<std::int64_t>> s_;
  std::vector<std::vector<std::vector<std::int64_t>>> i_;
  std::vector<std::vector<std::vector<std::int64_t>>> e_;
  std::vector<std::vector<TTable>> t_;
};

/// S[root][L] for the full label set L = {0..h-1}.
std::int64_t mec_tree_dp(const RootedTree& t, const ColoredGraph& g, const LabelAssignment& labeling);

enum class LabelMode { exhaustive, randomized };

std::string to_string(LabelMode m);

/// Number of randomized trials giving failure probability <= delta at h:
/// ceil(e^h ln(1/delta)).
std::size_t default_trials(std::size_t h, double delta = 0.01);

struct ColorCodingOptions {
  /// Defaults to min(n, kMaxLabels).
  std::optional<std::size_t> h_max;
  LabelMode mode = LabelMode::exhaustive;
  /// Randomized trials per h; 0 selects default_trials(h).
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool recolor = false;
};

/// Best MEC solution over labelings with h labels. Exhaustive mode labels
/// every h-subset of each component's vertices by rank; randomized mode draws
/// `trials` uniform labelings. Throws CapacityError past the bitmask limits.
SolveResult mec_tree_fpt(const ColoredGraph& g, std::size_t h, LabelMode mode, std::size_t trials,
                         std::uint64_t seed, std::size_t threads = 1);

/// Recoloring variant: component colors are tracked through random per-root
/// maps into h symbols, so the number of colors is not limited.
SolveResult mec_tree_fpt_recolor(const ColoredGraph& g, std::size_t h, std::size_t trials, std::uint64_t seed,
                                 LabelMode mode = LabelMode::randomized, std::size_t threads = 1);

/// Max over h = 0..h_max of the single-h solver.
SolveResult mec_tree_colorcoding(const ColoredGraph& g, const ColorCodingOptions& options = {});

}  // namespace ccp
