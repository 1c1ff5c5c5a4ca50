#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace diffgraph {

// Canonicalization is exact and exhaustive, so it is limited to small orders.
inline constexpr int kMaxCanonicalOrder = 16;

// Canonical form: the lexicographically minimal upper-triangle adjacency
// bit string over all admissible vertex orderings. Pairs are enumerated
// column-major — (0,1),(0,2),(1,2),(0,3),... — and bit k of that sequence is
// stored at bit (63 - k%64) of words[k/64], so comparing word arrays as
// unsigned integers is exactly lexicographic comparison of the bit sequence.
struct CanonicalForm {
  int order = 0;
  std::array<std::uint64_t, 2> words{};

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  // Big-endian hex of the ceil(P/8) bytes holding the P = order*(order-1)/2
  // pair bits; empty for orders 0 and 1.
  std::string hex() const {
    const int pair_bits = order * (order - 1) / 2;
    const int bytes = (pair_bits + 7) / 8;
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes);
    for (int k = 0; k < bytes; ++k) {
      unsigned byte = (words[k / 8] >> (56 - 8 * (k % 8))) & 0xFF;
      out.push_back(digits[byte >> 4]);
      out.push_back(digits[byte & 0xF]);
    }
    return out;
  }
};

// Adjacency as one 16-bit row mask per vertex; the working representation
// for canonicalization and search inner loops.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxCanonicalOrder> rows{};

  void add_edge(int u, int v) {
    rows[u] = (std::uint16_t)(rows[u] | (1u << v));
    rows[v] = (std::uint16_t)(rows[v] | (1u << u));
  }
  bool has_edge(int u, int v) const { return (rows[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(rows[v]); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n; ++v) twice += (std::size_t)degree(v);
    return twice / 2;
  }
};

inline SmallGraph to_small_graph(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw UnsupportedOrderError("graph order " + std::to_string(g.order()) +
                                " exceeds canonicalization limit " +
                                std::to_string(kMaxCanonicalOrder));
  SmallGraph s;
  s.n = g.order();
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (g.has_edge(u, v)) s.add_edge(u, v);
  return s;
}

struct CanonicalLabeling {
  CanonicalForm form;
  // position_of[v] = position of vertex v in the canonical ordering.
  std::array<std::uint8_t, kMaxCanonicalOrder> position_of{};
};

namespace detail {

// Color refinement: start from degree ranks, repeatedly split classes by the
// multiset of neighbor colors until stable. Color ids are rank ordinals of
// sorted keys, so they are isomorphism-invariant.
inline std::array<int, kMaxCanonicalOrder> refine_colors(const SmallGraph& g) {
  const int n = g.n;
  std::array<int, kMaxCanonicalOrder> color{};
  {
    std::vector<int> degs;
    degs.reserve(n);
    for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
    std::vector<int> uniq = degs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = (int)(std::lower_bound(uniq.begin(), uniq.end(), degs[v]) - uniq.begin());
  }
  int classes = 0;
  for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);

  using Key = std::pair<int, std::vector<int>>;
  for (int round = 0; round < n; ++round) {
    std::vector<Key> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (g.has_edge(v, u)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      keys[v] = {color[v], std::move(nb)};
    }
    std::vector<Key> uniq = keys;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if ((int)uniq.size() == classes) break;
    classes = (int)uniq.size();
    for (int v = 0; v < n; ++v)
      color[v] = (int)(std::lower_bound(uniq.begin(), uniq.end(), keys[v]) - uniq.begin());
  }
  return color;
}

// True iff swapping u and v is an automorphism: identical adjacency to every
// other vertex (the u–v edge itself is symmetric either way).
inline bool twins(const SmallGraph& g, int u, int v) {
  std::uint16_t drop = (std::uint16_t)((1u << u) | (1u << v));
  return (std::uint16_t)(g.rows[u] & ~drop) == (std::uint16_t)(g.rows[v] & ~drop);
}

struct CanonicalSearch {
  const SmallGraph& g;
  std::array<int, kMaxCanonicalOrder> color;
  std::array<std::uint16_t, kMaxCanonicalOrder> cell_mask{};  // by color id
  std::array<int, kMaxCanonicalOrder> position_color{};

  std::array<int, kMaxCanonicalOrder> placed{};  // position -> vertex
  std::uint16_t placed_mask = 0;
  std::array<std::uint64_t, 2> cur{};

  bool have_best = false;
  std::array<std::uint64_t, 2> best{};
  std::array<int, kMaxCanonicalOrder> best_placed{};

  explicit CanonicalSearch(const SmallGraph& graph) : g(graph), color(refine_colors(graph)) {
    for (int v = 0; v < g.n; ++v)
      cell_mask[color[v]] = (std::uint16_t)(cell_mask[color[v]] | (1u << v));
    int pos = 0;
    for (int c = 0; c < g.n; ++c) {
      std::uint16_t m = cell_mask[c];
      while (m) {
        position_color[pos++] = c;
        m = (std::uint16_t)(m & (m - 1));
      }
    }
  }

  static void set_bit(std::array<std::uint64_t, 2>& w, int k) {
    w[k >> 6] |= (1ull << (63 - (k & 63)));
  }

  // cur, restricted to its first len determined bits, is strictly greater
  // than the same prefix of best. Bits past len are zero in cur by
  // construction; best is masked down to len.
  bool prefix_greater(int len) const {
    std::uint64_t m0 = len >= 64 ? ~0ull : (len == 0 ? 0ull : ~0ull << (64 - len));
    std::uint64_t b0 = best[0] & m0;
    if (cur[0] != b0) return cur[0] > b0;
    if (len <= 64) return false;
    std::uint64_t m1 = ~0ull << (128 - len);
    return cur[1] > (best[1] & m1);
  }

  void dfs(int p) {
    const int n = g.n;
    if (p == n) {
      if (!have_best || cur < best) {
        have_best = true;
        best = cur;
        best_placed = placed;
      }
      return;
    }
    std::uint16_t cands = (std::uint16_t)(cell_mask[position_color[p]] & ~placed_mask);
    int tried[kMaxCanonicalOrder];
    int tried_count = 0;
    const int base = p * (p - 1) / 2;
    for (std::uint16_t m = cands; m; m = (std::uint16_t)(m & (m - 1))) {
      int v = std::countr_zero(m);
      bool dup = false;
      for (int t = 0; t < tried_count && !dup; ++t) dup = twins(g, tried[t], v);
      if (dup) continue;
      tried[tried_count++] = v;

      auto saved = cur;
      for (int q = 0; q < p; ++q)
        if (g.has_edge(v, placed[q])) set_bit(cur, base + q);
      if (have_best && prefix_greater(base + p)) {
        cur = saved;
        continue;
      }
      placed[p] = v;
      placed_mask = (std::uint16_t)(placed_mask | (1u << v));
      dfs(p + 1);
      placed_mask = (std::uint16_t)(placed_mask & ~(1u << v));
      cur = saved;
    }
  }
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  CanonicalLabeling out;
  out.form.order = g.n;
  if (g.n == 0) return out;
  detail::CanonicalSearch search(g);
  search.dfs(0);
  out.form.words = search.best;
  for (int pos = 0; pos < g.n; ++pos)
    out.position_of[search.best_placed[pos]] = (std::uint8_t)pos;
  return out;
}

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  return canonical_labeling(to_small_graph(g));
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  SmallGraph sa = to_small_graph(a);
  SmallGraph sb = to_small_graph(b);
  if (sa.n != sb.n) return false;
  if (sa.edge_count() != sb.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_labeling(sa).form == canonical_labeling(sb).form;
}

}  // namespace diffgraph
