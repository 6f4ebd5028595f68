#include "ccp/mec_fpt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "ccp/errors.hpp"

namespace ccp {
namespace {

void relax(std::int64_t& slot, std::int64_t value) { slot = std::max(slot, value); }

void relax(TTable& table, const TKey& key, std::int64_t value) {
  auto [it, inserted] = table.try_emplace(key, value);
  if (!inserted) it->second = std::max(it->second, value);
}

std::vector<std::pair<std::uint32_t, std::int64_t>> finite_entries(const std::vector<std::int64_t>& table) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask] != kNegInf) out.emplace_back(mask, table[mask]);
  }
  return out;
}

std::int64_t lookup(const TTable& table, const TKey& key) {
  const auto it = table.find(key);
  return it == table.end() ? kNegInf : it->second;
}

std::int64_t popcount(std::uint64_t x) { return std::popcount(x); }

/// Rank of every vertex color among the distinct colors present.
std::vector<std::uint32_t> dense_colors(const ColoredGraph& g, std::size_t& distinct) {
  std::map<Color, std::uint32_t> index;
  for (Color c : g.colors()) index.emplace(c, 0);
  std::uint32_t next = 0;
  for (auto& [_, i] : index) i = next++;
  distinct = index.size();
  std::vector<std::uint32_t> out;
  out.reserve(g.vertex_count());
  for (Color c : g.colors()) out.push_back(index.at(c));
  return out;
}

}  // namespace

std::int64_t tree_match(const RootedTree& t, Vertex v) {
  std::vector<Vertex> order{v};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex c : t.children[order[i]]) order.push_back(c);
  }
  // free_[u]: best with u unmatched; best_[u]: best overall.
  std::vector<std::int64_t> free_(t.size(), 0);
  std::vector<std::int64_t> best_(t.size(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    std::int64_t sum = 0;
    for (Vertex c : t.children[u]) sum += best_[c];
    free_[u] = sum;
    best_[u] = sum;
    for (Vertex c : t.children[u]) best_[u] = std::max(best_[u], sum - best_[c] + free_[c] + 1);
  }
  return best_[v];
}

ColorCodingDp::ColorCodingDp(const ColoredGraph& g, const RootedTree& t, LabelAssignment labels,
                             std::optional<Recoloring> recoloring)
    : g_(g), tree_(t), labels_(std::move(labels)), recoloring_(std::move(recoloring)) {
  const std::size_t n = g.vertex_count();
  if (labels_.h > kMaxLabels) {
    throw CapacityError("h = " + std::to_string(labels_.h) + " exceeds the label width " + std::to_string(kMaxLabels));
  }
  if (labels_.label.size() != n) throw InputError("labeling size does not match the vertex count");
  for (std::uint32_t l : labels_.label) {
    if (l != kUnlabeled && l >= labels_.h) throw InputError("label out of range");
  }
  std::size_t distinct = 0;
  dense_color_ = dense_colors(g, distinct);
  if (recoloring_) {
    if (recoloring_->width > kMaxColorBits) throw CapacityError("recoloring width exceeds 64");
    if (recoloring_->colors.size() != n) throw InputError("recoloring must cover every vertex");
    ancestors_.assign(n, {});
    for (Vertex v : tree_.preorder) {
      if (v != tree_.root) ancestors_[v] = ancestors_[tree_.parent[v]];
      ancestors_[v].push_back(v);
    }
  } else if (distinct > kMaxColorBits) {
    throw CapacityError(std::to_string(distinct) + " colors exceed the color-set width " +
                        std::to_string(kMaxColorBits));
  }

  s_.assign(n, {});
  i_.assign(n, {});
  e_.assign(n, {});
  t_.assign(n, {});
  for (auto it = tree_.preorder.rbegin(); it != tree_.preorder.rend(); ++it) compute(*it);
}

std::uint64_t ColorCodingDp::color_bit(Vertex v, std::uint32_t slot) const {
  if (!recoloring_) return std::uint64_t{1} << dense_color_[v];
  return std::uint64_t{1} << recoloring_->colors[ancestors_[v][slot]][dense_color_[v]];
}

std::uint32_t ColorCodingDp::finalize_slot(Vertex v) const { return recoloring_ ? tree_.depth[v] : 0; }

void ColorCodingDp::compute(Vertex v) {
  const std::size_t size = std::size_t{1} << h();
  const auto& kids = tree_.children[v];
  const std::size_t z = kids.size();
  i_[v].assign(z + 1, std::vector<std::int64_t>(size, kNegInf));
  e_[v].assign(z + 1, std::vector<std::int64_t>(size, kNegInf));
  t_[v].assign(z + 1, TTable{});

  i_[v][0][0] = 0;
  const std::uint32_t lv = labels_.label[v];
  if (lv != kUnlabeled) {
    const std::uint32_t slots = recoloring_ ? tree_.depth[v] + 1 : 1;
    for (std::uint32_t slot = 0; slot < slots; ++slot) {
      t_[v][0][TKey{color_bit(v, slot), std::uint32_t{1} << lv, slot}] = 0;
    }
  }

  for (std::size_t j = 1; j <= z; ++j) {
    const Vertex x = kids[j - 1];
    const std::size_t zx = tree_.children[x].size();
    const auto s_x = finite_entries(s_[x]);
    const auto i_x = finite_entries(i_[x][zx]);
    const auto i_prev = finite_entries(i_[v][j - 1]);
    const auto e_prev = finite_entries(e_[v][j - 1]);
    auto& i_cur = i_[v][j];
    auto& e_cur = e_[v][j];

    for (const auto& [a, va] : i_prev) {
      for (const auto& [b, vb] : s_x) {
        if (!(a & b)) relax(i_cur[a | b], va + vb);
      }
      for (const auto& [b, vb] : i_x) {
        if (!(a & b)) relax(e_cur[a | b], va + vb + 1);
      }
    }
    for (const auto& [a, va] : e_prev) {
      for (const auto& [b, vb] : s_x) {
        if (!(a & b)) relax(e_cur[a | b], va + vb);
      }
    }

    const TTable& t_prev = t_[v][j - 1];
    const TTable& t_x = t_[x][zx];
    TTable& t_cur = t_[v][j];
    for (const auto& [k1, v1] : t_prev) {
      for (const auto& [b, vb] : s_x) {
        if (!(k1.labels & b)) relax(t_cur, TKey{k1.colors, k1.labels | b, k1.slot}, v1 + vb);
      }
      for (const auto& [k2, v2] : t_x) {
        if (k1.slot != k2.slot || (k1.colors & k2.colors) || (k1.labels & k2.labels)) continue;
        relax(t_cur, TKey{k1.colors | k2.colors, k1.labels | k2.labels, k1.slot},
              v1 + v2 + popcount(k1.colors) * popcount(k2.colors));
      }
    }
  }

  auto& s = s_[v];
  s.assign(size, kNegInf);
  for (std::size_t mask = 0; mask < size; ++mask) s[mask] = std::max(i_[v][z][mask], e_[v][z][mask]);
  const std::uint32_t fin = finalize_slot(v);
  for (const auto& [key, value] : t_[v][z]) {
    if (key.slot == fin && popcount(key.colors) >= 3) relax(s[key.labels], value);
  }
  if (z == 0 && lv != kUnlabeled) relax(s[std::uint32_t{1} << lv], 0);
}

std::int64_t ColorCodingDp::T(Vertex v, std::size_t j, std::uint32_t labels, std::uint64_t colors, int b,
                              std::uint32_t slot) const {
  if (b == 1 && popcount(colors) < 3) return kNegInf;
  return lookup(t_[v][j], TKey{colors, labels, slot});
}

std::int64_t ColorCodingDp::best_value() const { return S(tree_.root, best_labels()); }

std::uint32_t ColorCodingDp::best_labels() const {
  const auto& s = s_[tree_.root];
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < s.size(); ++mask) {
    if (s[mask] > s[best]) best = mask;
  }
  return best;
}

std::vector<EdgeId> ColorCodingDp::witness(std::uint32_t labels) const {
  if (S(tree_.root, labels) == kNegInf) throw std::logic_error("no solution uses exactly these labels");
  std::vector<EdgeId> kept;
  recon_s(tree_.root, labels, kept);
  std::sort(kept.begin(), kept.end());
  return kept;
}

void ColorCodingDp::recon_s(Vertex v, std::uint32_t labels, std::vector<EdgeId>& kept) const {
  const std::int64_t target = s_[v][labels];
  const std::size_t z = tree_.children[v].size();
  if (i_[v][z][labels] == target) return recon_i(v, z, labels, kept);
  if (e_[v][z][labels] == target) return recon_e(v, z, labels, kept);
  const std::uint32_t fin = finalize_slot(v);
  for (const auto& [key, value] : t_[v][z]) {
    if (key.slot == fin && key.labels == labels && popcount(key.colors) >= 3 && value == target) {
      return recon_t(v, z, key, kept);
    }
  }
  if (z == 0 && target == 0 && labels == (std::uint32_t{1} << labels_.label[v])) return;
  throw std::logic_error("color-coding backtrack failed at S");
}

void ColorCodingDp::recon_i(Vertex v, std::size_t j, std::uint32_t labels, std::vector<EdgeId>& kept) const {
  for (; j > 0; --j) {
    const Vertex x = tree_.children[v][j - 1];
    const std::int64_t target = i_[v][j][labels];
    bool found = false;
    for (std::uint32_t a = labels;; a = (a - 1) & labels) {
      const std::uint32_t b = labels ^ a;
      if (i_[v][j - 1][a] != kNegInf && s_[x][b] != kNegInf && i_[v][j - 1][a] + s_[x][b] == target) {
        recon_s(x, b, kept);
        labels = a;
        found = true;
        break;
      }
      if (a == 0) break;
    }
    if (!found) throw std::logic_error("color-coding backtrack failed at I");
  }
}

void ColorCodingDp::recon_e(Vertex v, std::size_t j, std::uint32_t labels, std::vector<EdgeId>& kept) const {
  for (; j > 0; --j) {
    const Vertex x = tree_.children[v][j - 1];
    const std::size_t zx = tree_.children[x].size();
    const std::int64_t target = e_[v][j][labels];
    for (std::uint32_t a = labels;; a = (a - 1) & labels) {
      const std::uint32_t b = labels ^ a;
      const std::int64_t ia = i_[v][j - 1][a];
      const std::int64_t ib = i_[x][zx][b];
      if (ia != kNegInf && ib != kNegInf && ia + ib + 1 == target) {
        kept.push_back(tree_.parent_edge[x]);
        recon_i(x, zx, b, kept);
        return recon_i(v, j - 1, a, kept);
      }
      if (a == 0) break;
    }
    bool found = false;
    for (std::uint32_t a = labels;; a = (a - 1) & labels) {
      const std::uint32_t b = labels ^ a;
      const std::int64_t ea = e_[v][j - 1][a];
      if (ea != kNegInf && s_[x][b] != kNegInf && ea + s_[x][b] == target) {
        recon_s(x, b, kept);
        labels = a;
        found = true;
        break;
      }
      if (a == 0) break;
    }
    if (!found) throw std::logic_error("color-coding backtrack failed at E");
  }
  throw std::logic_error("color-coding backtrack reached an unmatched E base");
}

void ColorCodingDp::recon_t(Vertex v, std::size_t j, TKey key, std::vector<EdgeId>& kept) const {
  for (; j > 0; --j) {
    const Vertex x = tree_.children[v][j - 1];
    const std::size_t zx = tree_.children[x].size();
    const std::int64_t target = lookup(t_[v][j], key);
    const TTable& t_prev = t_[v][j - 1];
    bool found = false;
    for (std::uint32_t b = key.labels;; b = (b - 1) & key.labels) {
      const std::int64_t prev = lookup(t_prev, TKey{key.colors, key.labels ^ b, key.slot});
      if (prev != kNegInf && s_[x][b] != kNegInf && prev + s_[x][b] == target) {
        recon_s(x, b, kept);
        key.labels ^= b;
        found = true;
        break;
      }
      if (b == 0) break;
    }
    if (found) continue;
    for (const auto& [k2, v2] : t_[x][zx]) {
      if (k2.slot != key.slot || (k2.colors & ~key.colors) || (k2.labels & ~key.labels) || k2.colors == key.colors) {
        continue;
      }
      const TKey rest{key.colors ^ k2.colors, key.labels ^ k2.labels, key.slot};
      const std::int64_t prev = lookup(t_prev, rest);
      if (prev != kNegInf && prev + v2 + popcount(rest.colors) * popcount(k2.colors) == target) {
        kept.push_back(tree_.parent_edge[x]);
        recon_t(x, zx, k2, kept);
        key = rest;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("color-coding backtrack failed at T");
  }
}

std::int64_t mec_tree_dp(const RootedTree& t, const ColoredGraph& g, const LabelAssignment& labeling) {
  return ColorCodingDp(g, t, labeling).root_value();
}

std::string to_string(LabelMode m) { return m == LabelMode::exhaustive ? "exhaustive" : "randomized"; }

std::size_t default_trials(std::size_t h, double delta) {
  return static_cast<std::size_t>(std::ceil(std::exp(static_cast<double>(h)) * std::log(1.0 / delta)));
}

namespace {

struct RunConfig {
  std::size_t h = 0;
  LabelMode mode = LabelMode::exhaustive;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool recolor = false;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMaxExhaustiveLabelings) return r;
  }
  return r;
}

std::mt19937_64 trial_rng(const RunConfig& cfg, std::uint64_t component, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(cfg.h), static_cast<std::uint32_t>(component),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Recoloring draw_recoloring(std::size_t n, std::size_t q, std::size_t width, std::mt19937_64& rng) {
  Recoloring r{width, std::vector<std::vector<std::uint32_t>>(n)};
  std::vector<std::uint32_t> symbols(width);
  std::iota(symbols.begin(), symbols.end(), 0u);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(width - 1));
  for (auto& f : r.colors) {
    if (q <= width) {
      std::shuffle(symbols.begin(), symbols.end(), rng);
      f.assign(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(q));
    } else {
      f.resize(q);
      for (auto& c : f) c = pick(rng);
    }
  }
  return r;
}

/// The labeling (and recoloring) evaluated at a given index of the run.
class LabelingSource {
 public:
  LabelingSource(const ColoredGraph& g, const RunConfig& cfg, std::uint64_t component)
      : cfg_(cfg), component_(component), n_(g.vertex_count()) {
    dense_colors(g, distinct_);
    if (cfg.mode == LabelMode::exhaustive) {
      hc_ = std::min(cfg.h, n_);
      count_ = binomial(n_, hc_);
      if (count_ > kMaxExhaustiveLabelings) {
        throw CapacityError("exhaustive labeling family too large; use randomized mode");
      }
    } else {
      count_ = cfg.h == 0 ? 1 : (cfg.trials == 0 ? default_trials(cfg.h) : cfg.trials);
    }
  }

  std::uint64_t count() const { return count_; }

  /// Sequential iteration state for exhaustive subsets.
  struct Cursor {
    std::vector<std::uint32_t> subset;
    std::uint64_t index = 0;
  };

  Cursor begin() const {
    Cursor c;
    c.subset.resize(hc_);
    std::iota(c.subset.begin(), c.subset.end(), 0u);
    return c;
  }

  void advance(Cursor& c) const {
    ++c.index;
    if (cfg_.mode != LabelMode::exhaustive || hc_ == 0) return;
    std::size_t i = hc_;
    while (i > 0 && c.subset[i - 1] == n_ - hc_ + i - 1) --i;
    if (i == 0) return;
    ++c.subset[i - 1];
    for (std::size_t k = i; k < hc_; ++k) c.subset[k] = c.subset[k - 1] + 1;
  }

  std::pair<LabelAssignment, std::optional<Recoloring>> make(const Cursor& c) const {
    LabelAssignment labels{cfg_.mode == LabelMode::exhaustive ? hc_ : cfg_.h,
                           std::vector<std::uint32_t>(n_, kUnlabeled)};
    std::mt19937_64 rng = trial_rng(cfg_, component_, c.index);
    if (cfg_.mode == LabelMode::exhaustive) {
      for (std::size_t r = 0; r < hc_; ++r) labels.label[c.subset[r]] = static_cast<std::uint32_t>(r);
    } else if (cfg_.h > 0) {
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(cfg_.h - 1));
      for (auto& l : labels.label) l = pick(rng);
    }
    std::optional<Recoloring> recoloring;
    if (cfg_.recolor) recoloring = draw_recoloring(n_, distinct_, std::max<std::size_t>(labels.h, 1), rng);
    return {std::move(labels), std::move(recoloring)};
  }

 private:
  RunConfig cfg_;
  std::uint64_t component_;
  std::size_t n_;
  std::size_t distinct_ = 0;
  std::size_t hc_ = 0;
  std::uint64_t count_ = 0;
};

struct Best {
  std::int64_t value = kNegInf;
  std::uint64_t index = 0;
};

SolveResult solve_component(const ColoredGraph& comp, const RunConfig& cfg, std::uint64_t component) {
  const RootedTree tree = root_tree(comp, 0);
  const LabelingSource source(comp, cfg, component);
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::uint64_t>(cfg.threads, source.count()));

  std::vector<Best> best(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](std::size_t tid) {
    try {
      for (auto c = source.begin(); c.index < source.count(); source.advance(c)) {
        if (c.index % threads != tid) continue;
        auto [labels, recoloring] = source.make(c);
        const std::int64_t value = ColorCodingDp(comp, tree, std::move(labels), std::move(recoloring)).best_value();
        if (value > best[tid].value) best[tid] = {value, c.index};
      }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Best overall;
  for (const Best& b : best) {
    if (b.value > overall.value || (b.value == overall.value && b.index < overall.index)) overall = b;
  }

  auto c = source.begin();
  while (c.index < overall.index) source.advance(c);
  auto [labels, recoloring] = source.make(c);
  const ColorCodingDp dp(comp, tree, std::move(labels), std::move(recoloring));
  SolveResult r;
  r.partition = Partition::from_kept(comp, dp.witness(dp.best_labels()));
  r.objective_value = mec_value(r.partition);
  if (r.objective_value != overall.value) throw std::logic_error("color-coding witness value mismatch");
  return r;
}

SolveResult run(const ColoredGraph& g, const RunConfig& cfg) {
  if (!is_forest(g)) throw ShapeError("color-coding solver requires a forest");
  if (cfg.h > kMaxLabels) {
    throw CapacityError("h = " + std::to_string(cfg.h) + " exceeds the label width " + std::to_string(kMaxLabels));
  }
  const ColoredGraph forest = normalize(g);
  std::uint64_t component = 0;
  SolveResult r = solve_per_component(forest, Problem::mec, [&](const ColoredGraph& comp) {
    return solve_component(comp, cfg, component++);
  });
  r.partition = lift_normalized(g, forest, r.partition);
  r.objective_value = mec_value(r.partition);
  r.algorithm_tag = cfg.recolor ? "colorcoding-recolor" : "colorcoding-" + to_string(cfg.mode);
  certify(g, Problem::mec, r);
  return r;
}

}  // namespace

SolveResult mec_tree_fpt(const ColoredGraph& g, std::size_t h, LabelMode mode, std::size_t trials,
                         std::uint64_t seed, std::size_t threads) {
  return run(g, RunConfig{h, mode, trials, seed, threads, false});
}

SolveResult mec_tree_fpt_recolor(const ColoredGraph& g, std::size_t h, std::size_t trials, std::uint64_t seed,
                                 LabelMode mode, std::size_t threads) {
  return run(g, RunConfig{h, mode, trials, seed, threads, true});
}

SolveResult mec_tree_colorcoding(const ColoredGraph& g, const ColorCodingOptions& options) {
  const std::size_t h_max = options.h_max.value_or(std::min(g.vertex_count(), kMaxLabels));
  std::optional<SolveResult> best;
  for (std::size_t h = 0; h <= h_max; ++h) {
    SolveResult r = run(g, RunConfig{h, options.mode, options.trials, options.seed, options.threads, options.recolor});
    if (!best || r.objective_value > best->objective_value) best = std::move(r);
  }
  return *best;
}

}  // namespace ccp
