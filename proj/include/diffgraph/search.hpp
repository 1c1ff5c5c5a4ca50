#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"

namespace diffgraph {

enum class SearchMode { first, all };

struct SearchConfig {
  Label max_label = 0;
  SearchMode mode = SearchMode::all;
  bool primitive_only = false;
  bool prune_min_max_form = true;
  bool prune_edge_count = true;
  bool prune_degree_sequence = true;
  int jobs = 1;
};

struct PruneCounts {
  std::uint64_t primitive = 0;
  std::uint64_t min_max_form = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t degree_sequence = 0;

  std::uint64_t total() const {
    return primitive + min_max_form + edge_count + degree_sequence;
  }
};

// A signature realizing the target, with the explicit assignment
// labels[v] = label of target vertex v.
struct Witness {
  Signature signature;
  std::vector<Label> labels;
};

struct SearchReport {
  std::vector<Witness> witnesses;
  std::uint64_t total_enumerated = 0;
  std::uint64_t candidates_examined = 0;  // candidates surviving every prune
  PruneCounts pruned;
  bool exhausted = false;
};

namespace detail {

inline constexpr Label kMaxSearchLabel = 1ull << 62;

struct SearchContext {
  int n = 0;
  std::size_t target_edges = 0;
  std::array<int, kMaxCanonicalOrder> target_degseq{};
  CanonicalLabeling target_canon;
  int target_min_degree = 0;
  SearchConfig cfg;
};

struct ChunkStats {
  std::vector<Witness> witnesses;
  std::uint64_t total = 0;
  std::uint64_t examined = 0;
  PruneCounts pruned;
};

inline SearchContext make_context(const Graph& target, const SearchConfig& cfg) {
  SearchContext ctx;
  ctx.n = target.order();
  ctx.target_edges = target.edge_count();
  auto seq = degree_sequence(target);
  std::copy(seq.begin(), seq.end(), ctx.target_degseq.begin());
  ctx.target_canon = canonical_labeling(target);
  ctx.target_min_degree = seq.empty() ? 0 : seq.back();
  ctx.cfg = cfg;
  return ctx;
}

inline bool member(const std::array<Label, kMaxCanonicalOrder>& vals, int n, Label x) {
  for (int i = 0; i < n; ++i) {
    if (vals[i] == x) return true;
    if (vals[i] > x) return false;
  }
  return false;
}

// vals holds the candidate signature sorted ascending. Returns false when the
// first-witness mode should stop the whole scan.
inline bool process_candidate(const SearchContext& ctx,
                              const std::array<Label, kMaxCanonicalOrder>& vals,
                              ChunkStats& out) {
  const int n = ctx.n;
  ++out.total;
  if (ctx.cfg.primitive_only) {
    Label g = vals[0];
    for (int i = 1; i < n && g != 1; ++i) g = std::gcd(g, vals[i]);
    if (g != 1) {
      ++out.pruned.primitive;
      return true;
    }
  }
  // In any difference graph without isolated vertices, max(S) is a sum of
  // two members or the double of one (some x with max-x in S), and min(S)
  // is a difference of members or half of one (some b with min+b in S).
  // Only sound when the target demands a neighbor for every vertex.
  if (ctx.cfg.prune_min_max_form && ctx.target_min_degree >= 1) {
    Label mx = vals[n - 1], mn = vals[0];
    bool ok = false;
    for (int i = 0; i < n && !ok; ++i) ok = member(vals, n, mx - vals[i]);
    if (!ok) {
      ++out.pruned.min_max_form;
      return true;
    }
    ok = false;
    for (int i = 0; i < n && !ok; ++i) {
      if (vals[i] > mx - mn) break;
      ok = member(vals, n, mn + vals[i]);
    }
    if (!ok) {
      ++out.pruned.min_max_form;
      return true;
    }
  }

  SmallGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (member(vals, n, vals[j] - vals[i])) g.add_edge(i, j);

  std::size_t edges = g.edge_count();
  if (ctx.cfg.prune_edge_count && edges != ctx.target_edges) {
    ++out.pruned.edge_count;
    return true;
  }
  std::array<int, kMaxCanonicalOrder> degs{};
  for (int i = 0; i < n; ++i) degs[i] = g.degree(i);
  std::sort(degs.begin(), degs.begin() + n, std::greater<int>());
  bool degs_match = std::equal(degs.begin(), degs.begin() + n, ctx.target_degseq.begin());
  if (ctx.cfg.prune_degree_sequence && !degs_match) {
    ++out.pruned.degree_sequence;
    return true;
  }

  ++out.examined;
  // The isomorphism test proper; when a prune above is disabled these cheap
  // rejects still apply here, as part of the test rather than as a filter.
  if (edges != ctx.target_edges || !degs_match) return true;
  CanonicalLabeling canon = canonical_labeling(g);
  if (canon.form != ctx.target_canon.form) return true;

  // Both graphs map onto the same canonical adjacency, so matching canonical
  // positions gives an isomorphism target -> G(S).
  std::array<int, kMaxCanonicalOrder> vertex_at{};
  for (int u = 0; u < n; ++u) vertex_at[canon.position_of[u]] = u;
  std::vector<Label> assignment(n);
  for (int v = 0; v < n; ++v)
    assignment[v] = vals[vertex_at[ctx.target_canon.position_of[v]]];
  out.witnesses.push_back(
      {Signature(std::vector<Label>(vals.begin(), vals.begin() + n)), std::move(assignment)});
  return ctx.cfg.mode != SearchMode::first;
}

// Scans every candidate whose smallest element is `first`, in lexicographic
// order. Returns false when the scan was stopped early.
inline bool scan_chunk(const SearchContext& ctx, Label first, ChunkStats& out) {
  const int n = ctx.n;
  std::array<Label, kMaxCanonicalOrder> vals{};
  vals[0] = first;
  if (n == 1) return process_candidate(ctx, vals, out);
  auto rec = [&](auto&& self, int pos, Label from) -> bool {
    if (pos == n) return process_candidate(ctx, vals, out);
    for (Label x = from; x + (Label)(n - 1 - pos) <= ctx.cfg.max_label; ++x) {
      vals[pos] = x;
      if (!self(self, pos + 1, x + 1)) return false;
    }
    return true;
  };
  return rec(rec, 1, first + 1);
}

inline void merge_chunk(SearchReport& report, ChunkStats&& chunk) {
  report.total_enumerated += chunk.total;
  report.candidates_examined += chunk.examined;
  report.pruned.primitive += chunk.pruned.primitive;
  report.pruned.min_max_form += chunk.pruned.min_max_form;
  report.pruned.edge_count += chunk.pruned.edge_count;
  report.pruned.degree_sequence += chunk.pruned.degree_sequence;
  for (auto& w : chunk.witnesses) report.witnesses.push_back(std::move(w));
}

// Splits the first elements 1..last_first into contiguous ranges. Results
// merged in range order are identical to a sequential scan no matter how the
// boundaries fall, so chunk count only affects scheduling.
struct FirstRange {
  Label lo, hi;  // half-open
};

inline std::vector<FirstRange> chunk_ranges(Label last_first) {
  const std::uint64_t count = std::min<std::uint64_t>(last_first, 1024);
  std::vector<FirstRange> ranges;
  ranges.reserve(count);
  Label lo = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    Label hi = 1 + (Label)(((unsigned __int128)last_first * (i + 1)) / count);
    if (hi > lo) ranges.push_back({lo, hi});
    lo = hi;
  }
  return ranges;
}

inline SearchReport run_search(const Graph& target, SearchConfig cfg) {
  if (cfg.max_label > kMaxSearchLabel)
    throw std::invalid_argument("max_label exceeds the supported bound");
  cfg.jobs = std::clamp(cfg.jobs, 1, 256);
  SearchContext ctx = make_context(target, cfg);
  const int n = ctx.n;

  SearchReport report;
  if (cfg.max_label < (Label)n) {
    report.exhausted = true;  // no n-subsets of {1..M} exist
    return report;
  }
  const Label last_first = cfg.max_label - (Label)n + 1;

  if (cfg.mode == SearchMode::first || cfg.jobs == 1 || last_first == 1) {
    // The first-witness mode must stop at the lexicographically first hit
    // with an exact candidates_examined count, so it always runs
    // sequentially; the parallelism setting is a hint, not a contract.
    bool completed = true;
    ChunkStats stats;
    for (Label f = 1; f <= last_first && completed; ++f)
      completed = scan_chunk(ctx, f, stats);
    if (!completed && !stats.witnesses.empty()) {
      // Stopped at a witness; the space still counts as covered when that
      // witness was the very last candidate.
      const auto& sig = stats.witnesses.back().signature.values();
      completed = true;
      for (int i = 0; i < n; ++i)
        if (sig[i] != last_first + (Label)i) completed = false;
    }
    merge_chunk(report, std::move(stats));
    report.exhausted = completed;
    return report;
  }

  const std::vector<FirstRange> ranges = chunk_ranges(last_first);
  std::vector<ChunkStats> results(ranges.size());
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= ranges.size()) return;
      for (Label f = ranges[i].lo; f < ranges[i].hi; ++f) scan_chunk(ctx, f, results[i]);
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t thread_count = std::min<std::uint64_t>(
      {(std::uint64_t)cfg.jobs, (std::uint64_t)hw, (std::uint64_t)ranges.size()});
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& chunk : results) merge_chunk(report, std::move(chunk));
  report.exhausted = true;
  return report;
}

}  // namespace detail

inline SearchReport find_signatures(const Graph& target, const SearchConfig& cfg) {
  if (target.order() < 1)
    throw std::invalid_argument("search target must have at least one vertex");
  if (cfg.max_label < (Label)target.order())
    throw std::invalid_argument("max_label must be at least the target order");
  return detail::run_search(target, cfg);
}

// Bounded non-existence certificate: exhaustive scan with every sound prune.
// exhausted=true with empty witnesses means no signature with labels <= M
// realizes the target. A bound small enough to admit no candidates at all is
// vacuously exhausted.
inline SearchReport prove_absent_up_to(const Graph& target, Label max_label, int jobs = 1) {
  if (target.order() < 1)
    throw std::invalid_argument("search target must have at least one vertex");
  SearchConfig cfg;
  cfg.max_label = max_label;
  cfg.mode = SearchMode::all;
  cfg.jobs = jobs;
  return detail::run_search(target, cfg);
}

struct K3UniquenessReport {
  bool unique_form = true;  // every witness is {a, 2a, 3a}
  std::vector<Witness> witnesses;
  std::vector<Signature> offenders;
};

inline K3UniquenessReport check_k3_uniqueness(Label max_label, int jobs = 1) {
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(0, 2);
  triangle.add_edge(1, 2);
  SearchConfig cfg;
  cfg.max_label = max_label;
  cfg.mode = SearchMode::all;
  cfg.jobs = jobs;
  SearchReport report = detail::run_search(triangle, cfg);
  K3UniquenessReport out;
  for (auto& w : report.witnesses) {
    const auto& v = w.signature.values();
    if (!(v[1] == 2 * v[0] && v[2] == 3 * v[0])) {
      out.unique_form = false;
      out.offenders.push_back(w.signature);
    }
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

// Signature values divided by their gcd.
inline std::vector<Label> primitive_values(const Signature& s) {
  Label g = 0;
  for (Label v : s.values()) g = std::gcd(g, v);
  std::vector<Label> out;
  out.reserve(s.size());
  for (Label v : s.values()) out.push_back(v / g);
  return out;
}

enum class StarShape { variant_a, variant_b, unclassified };

struct StarWitness {
  Witness witness;
  bool max_on_center = false;
  bool max_double_of_member = false;  // max label = 2a for a member a
  StarShape shape = StarShape::unclassified;
};

struct StarClassificationReport {
  std::uint64_t leaf_count = 0;
  Label max_label = 0;
  std::vector<StarWitness> entries;
  SearchReport search;
};

// Finds every signature realizing the star with n leaves up to M and reports
// which structural facts hold for each: where the maximum label sits, whether
// it doubles another member, and whether the signature is a scaled copy of
// constructor variant A or B.
inline StarClassificationReport classify_star_signatures(std::uint64_t n, Label max_label,
                                                         int jobs = 1) {
  if (n < 2) throw std::invalid_argument("star classification needs at least 2 leaves");
  StarClassificationReport out;
  out.leaf_count = n;
  out.max_label = max_label;
  if (n + 1 > kMaxCanonicalOrder)
    throw UnsupportedOrderError("star order exceeds canonicalization limit");

  Graph target((int)(n + 1));  // vertex 0 is the center
  for (int leaf = 1; leaf <= (int)n; ++leaf) target.add_edge(0, leaf);
  SearchConfig cfg;
  cfg.max_label = max_label;
  cfg.mode = SearchMode::all;
  cfg.jobs = jobs;
  out.search = detail::run_search(target, cfg);

  std::vector<Label> shape_a = primitive_values(star(n, StarVariant::a).labeling.signature());
  std::vector<Label> shape_b;
  if (n % 2 == 0) shape_b = primitive_values(star(n, StarVariant::b).labeling.signature());

  for (const auto& w : out.search.witnesses) {
    Label mx = w.signature.max();
    StarShape shape = StarShape::unclassified;
    std::vector<Label> prim = primitive_values(w.signature);
    if (prim == shape_a)
      shape = StarShape::variant_a;
    else if (!shape_b.empty() && prim == shape_b)
      shape = StarShape::variant_b;
    out.entries.push_back({w, w.labels[0] == mx,
                           mx % 2 == 0 && w.signature.contains(mx / 2), shape});
  }
  return out;
}

struct CatalogEntry {
  int order = 0;
  CanonicalForm form;
  Signature witness;  // lexicographically least signature realizing the class
  std::size_t edge_count = 0;
};

// Buckets G(S) over all n-subsets of {1..M} by canonical form; one entry per
// isomorphism class, sorted by (edge count, canonical form).
inline std::vector<CatalogEntry> enumerate_difference_graphs(int order, Label max_label,
                                                             int jobs = 1) {
  if (order < 1) throw std::invalid_argument("catalog order must be at least 1");
  if (order > kMaxCanonicalOrder)
    throw UnsupportedOrderError("catalog order " + std::to_string(order) +
                                " exceeds canonicalization limit " +
                                std::to_string(kMaxCanonicalOrder));
  if (max_label > detail::kMaxSearchLabel)
    throw std::invalid_argument("max_label exceeds the supported bound");
  jobs = std::clamp(jobs, 1, 256);

  using Bucket = std::map<CanonicalForm, CatalogEntry>;
  const int n = order;
  auto scan_bucket = [n, max_label](Label first, Bucket& bucket) {
    std::array<Label, kMaxCanonicalOrder> vals{};
    vals[0] = first;
    auto visit = [&]() {
      SmallGraph g;
      g.n = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (detail::member(vals, n, vals[j] - vals[i])) g.add_edge(i, j);
      CanonicalForm form = canonical_labeling(g).form;
      if (bucket.find(form) != bucket.end()) return;  // first witness is lex-least
      bucket.emplace(form,
                     CatalogEntry{n, form,
                                  Signature(std::vector<Label>(vals.begin(), vals.begin() + n)),
                                  g.edge_count()});
    };
    if (n == 1) {
      visit();
      return;
    }
    auto rec = [&](auto&& self, int pos, Label from) -> void {
      if (pos == n) {
        visit();
        return;
      }
      for (Label x = from; x + (Label)(n - 1 - pos) <= max_label; ++x) {
        vals[pos] = x;
        self(self, pos + 1, x + 1);
      }
    };
    rec(rec, 1, first + 1);
  };

  std::vector<CatalogEntry> out;
  if (max_label < (Label)n) return out;
  const Label last_first = max_label - (Label)n + 1;
  Bucket merged;
  if (jobs == 1 || last_first == 1) {
    for (Label f = 1; f <= last_first; ++f) {
      Bucket bucket;
      scan_bucket(f, bucket);
      for (auto& [form, entry] : bucket) merged.emplace(form, std::move(entry));
    }
  } else {
    const std::vector<detail::FirstRange> ranges = detail::chunk_ranges(last_first);
    std::vector<Bucket> results(ranges.size());
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::uint64_t i = next.fetch_add(1);
        if (i >= ranges.size()) return;
        for (Label f = ranges[i].lo; f < ranges[i].hi; ++f) scan_bucket(f, results[i]);
      }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t thread_count = std::min<std::uint64_t>(
        {(std::uint64_t)jobs, (std::uint64_t)hw, (std::uint64_t)ranges.size()});
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& bucket : results)
      for (auto& [form, entry] : bucket) merged.emplace(form, std::move(entry));
  }
  out.reserve(merged.size());
  for (auto& [form, entry] : merged) out.push_back(std::move(entry));
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.edge_count != b.edge_count) return a.edge_count < b.edge_count;
    return a.form < b.form;
  });
  return out;
}

}  // namespace diffgraph
