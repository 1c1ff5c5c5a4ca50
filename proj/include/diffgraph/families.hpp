#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace diffgraph {

namespace detail {

// Collects (name, label) vertices and index edges, then assembles a
// LabeledGraph. Label distinctness is validated on build so a constructor
// arithmetic slip fails fast instead of producing a bogus instance.
struct FamilyBuilder {
  std::vector<std::string> names;
  std::vector<Label> labels;
  std::vector<std::pair<int, int>> edges;

  int add(std::string name, Label value) {
    names.push_back(std::move(name));
    labels.push_back(value);
    return (int)names.size() - 1;
  }

  void connect(int u, int v) { edges.emplace_back(u, v); }

  LabeledGraph build() && {
    const int order = (int)names.size();
    Graph g(order, std::move(names));
    for (auto [u, v] : edges) g.add_edge(u, v);
    Labeling l(std::move(labels));
    l.validate();
    return LabeledGraph(std::move(g), std::move(l));
  }
};

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace detail

// Triangle labeled {a, 2a, 3a}.
inline LabeledGraph k3(Label a) {
  detail::require(a >= 1, "k3: a must be >= 1");
  detail::FamilyBuilder b;
  int u1 = b.add("u1", a);
  int u2 = b.add("u2", checked_mul(a, 2));
  int u3 = b.add("u3", checked_mul(a, 3));
  b.connect(u1, u2);
  b.connect(u1, u3);
  b.connect(u2, u3);
  return std::move(b).build();
}

enum class StarVariant { a, b };

// Star with n leaves.
// Variant A: center 2n, leaves the first n odd numbers.
// Variant B (even n, a = n-1): center 2a; leaves 4a, a, and the pairs
// (2j-1, 2a-(2j-1)) for j = 1..(n-2)/2.
inline LabeledGraph star(std::uint64_t n, StarVariant variant) {
  detail::require(n >= 2, "star: leaf count must be >= 2");
  detail::FamilyBuilder b;
  if (variant == StarVariant::a) {
    int center = b.add("u0", checked_mul(2, n));
    for (std::uint64_t i = 1; i <= n; ++i)
      b.connect(center, b.add("u" + std::to_string(i), 2 * i - 1));
  } else {
    detail::require(n % 2 == 0, "star: variant B requires an even leaf count");
    Label a = n - 1;
    int center = b.add("u0", checked_mul(2, a));
    b.connect(center, b.add("u1", checked_mul(4, a)));
    b.connect(center, b.add("u2", a));
    for (std::uint64_t j = 1; j <= (n - 2) / 2; ++j) {
      b.connect(center, b.add("u" + std::to_string(2 * j + 1), 2 * j - 1));
      b.connect(center, b.add("u" + std::to_string(2 * j + 2), 2 * a - (2 * j - 1)));
    }
  }
  return std::move(b).build();
}

// Two fans sharing the apex w0 (label 6): top path w1,u0..un labeled
// 2, 4+6i; bottom path v0..vm labeled 3+6j; the apex is adjacent to every
// other vertex. n and m are the last path indices.
inline LabeledGraph butterfly(std::uint64_t n, std::uint64_t m) {
  detail::FamilyBuilder b;
  int apex = b.add("w0", 6);
  int prev = b.add("w1", 2);
  b.connect(apex, prev);
  for (std::uint64_t i = 0; i <= n; ++i) {
    int u = b.add("u" + std::to_string(i), checked_add(4, checked_mul(6, i)));
    b.connect(apex, u);
    b.connect(prev, u);
    prev = u;
  }
  prev = -1;
  for (std::uint64_t j = 0; j <= m; ++j) {
    int v = b.add("v" + std::to_string(j), checked_add(3, checked_mul(6, j)));
    b.connect(apex, v);
    if (prev >= 0) b.connect(prev, v);
    prev = v;
  }
  return std::move(b).build();
}

// Two star centers joined by an edge: u0 (label 2n) with n leaves 2i-1,
// v0 (label 4n+2m(n+1)) with m leaves 2n+j(2n+2).
inline LabeledGraph bistar(std::uint64_t n, std::uint64_t m) {
  detail::require(n >= 1 && m >= 1, "bistar: both leaf counts must be >= 1");
  detail::FamilyBuilder b;
  int u0 = b.add("u0", checked_mul(2, n));
  for (std::uint64_t i = 1; i <= n; ++i)
    b.connect(u0, b.add("u" + std::to_string(i), 2 * i - 1));
  int v0 = b.add("v0", checked_add(checked_mul(4, n), checked_mul(checked_mul(2, m), n + 1)));
  b.connect(u0, v0);
  for (std::uint64_t j = 1; j <= m; ++j)
    b.connect(v0, b.add("v" + std::to_string(j),
                        checked_add(checked_mul(2, n), checked_mul(j, checked_mul(2, n) + 2))));
  return std::move(b).build();
}

// Fan (hub u0 labeled 2 over the path u1..un labeled 2i-1) with a pendant
// path u0-v0-v1-..-vm, v0 = 4n+2 and v_j = 2^(j-1)*4n.
inline LabeledGraph umbrella(std::uint64_t n, std::uint64_t m) {
  detail::require(n >= 2, "umbrella: fan size must be >= 2");
  detail::require(m >= 1, "umbrella: tail length must be >= 1");
  detail::FamilyBuilder b;
  int hub = b.add("u0", 2);
  int prev = -1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    int u = b.add("u" + std::to_string(i), 2 * i - 1);
    b.connect(hub, u);
    if (prev >= 0) b.connect(prev, u);
    prev = u;
  }
  prev = b.add("v0", checked_add(checked_mul(4, n), 2));
  b.connect(hub, prev);
  for (std::uint64_t j = 1; j <= m; ++j) {
    int v = b.add("v" + std::to_string(j),
                  checked_mul(checked_pow(2, j - 1), checked_mul(4, n)));
    b.connect(prev, v);
    prev = v;
  }
  return std::move(b).build();
}

// Path u1..u_{t+1} with two apexes per path edge: v_i above and w_i below,
// each adjacent to u_i and u_{i+1}. Labels u_i = 3^(i-1)*2^(t-i+1),
// v_i = 5*3^(i-1)*2^(t-i), w_i = 3^(i-1)*2^(t-i).
inline LabeledGraph double_triangular_snake(std::uint64_t t) {
  detail::require(t >= 1, "double_triangular_snake: triangle count must be >= 1");
  detail::FamilyBuilder b;
  std::vector<int> u;
  for (std::uint64_t i = 1; i <= t + 1; ++i) {
    u.push_back(b.add("u" + std::to_string(i),
                      checked_mul(checked_pow(3, i - 1), checked_pow(2, t - i + 1))));
    if (i >= 2) b.connect(u[i - 2], u[i - 1]);
  }
  for (std::uint64_t i = 1; i <= t; ++i) {
    Label base = checked_mul(checked_pow(3, i - 1), checked_pow(2, t - i));
    int v = b.add("v" + std::to_string(i), checked_mul(5, base));
    b.connect(v, u[i - 1]);
    b.connect(v, u[i]);
    int w = b.add("w" + std::to_string(i), base);
    b.connect(w, u[i - 1]);
    b.connect(w, u[i]);
  }
  return std::move(b).build();
}

// Path u1..un (labels 2^i) with a middle row v_j = 5*2^j spanning u_j,u_{j+2}
// for odd j <= n-3, a second tier w_k = 25*2^k spanning v_k,v_{k+2} for odd
// k <= n-5, and a final apex w_{n-3} = 13*2^(n-3) spanning v_{n-3} and u_n.
inline LabeledGraph irregular_triangular_snake(std::uint64_t n) {
  detail::require(n >= 4, "irregular_triangular_snake: path length must be >= 4");
  detail::require(n % 2 == 0, "irregular_triangular_snake: path length must be even");
  detail::FamilyBuilder b;
  std::map<std::uint64_t, int> u, v;
  int prev = -1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    u[i] = b.add("u" + std::to_string(i), checked_pow(2, i));
    if (prev >= 0) b.connect(prev, u[i]);
    prev = u[i];
  }
  for (std::uint64_t j = 1; j + 3 <= n; j += 2) {
    v[j] = b.add("v" + std::to_string(j), checked_mul(5, checked_pow(2, j)));
    b.connect(v[j], u[j]);
    b.connect(v[j], u[j + 2]);
  }
  for (std::uint64_t k = 1; k + 5 <= n; k += 2) {
    int w = b.add("w" + std::to_string(k), checked_mul(25, checked_pow(2, k)));
    b.connect(w, v[k]);
    b.connect(w, v[k + 2]);
  }
  int w_last = b.add("w" + std::to_string(n - 3),
                     checked_mul(13, checked_pow(2, n - 3)));
  b.connect(w_last, v[n - 3]);
  b.connect(w_last, u[n]);
  return std::move(b).build();
}

// Chain of k n-cycles, consecutive cycles sharing one vertex. Vertices
// u_0..u_{k(n-1)}; labels 2^(i mod (n-1)) * (1+2^(n-2))^(i div (n-1)).
inline LabeledGraph cn_snake(std::uint64_t n, std::uint64_t k) {
  detail::require(n >= 3, "cn_snake: cycle size must be >= 3");
  detail::require(k >= 1, "cn_snake: block count must be >= 1");
  detail::FamilyBuilder b;
  Label c = checked_add(1, checked_pow(2, n - 2));
  std::uint64_t last = k * (n - 1);
  for (std::uint64_t i = 0; i <= last; ++i) {
    b.add("u" + std::to_string(i),
          checked_mul(checked_pow(2, i % (n - 1)), checked_pow(c, i / (n - 1))));
    if (i >= 1) b.connect((int)(i - 1), (int)i);
  }
  for (std::uint64_t blk = 0; blk < k; ++blk)
    b.connect((int)(blk * (n - 1)), (int)((blk + 1) * (n - 1)));
  return std::move(b).build();
}

// Path in which every alternate edge carries an n-cycle: u_0..u_{kn}, with a
// path edge into each cycle u_{bn+1}..u_{(b+1)n}. Labels
// 2^((i mod n) + (i div n)) * (1+2^(n-2))^(i div n).
inline LabeledGraph alternate_cn_snake(std::uint64_t n, std::uint64_t k) {
  detail::require(n >= 3, "alternate_cn_snake: cycle size must be >= 3");
  detail::require(k >= 1, "alternate_cn_snake: cycle count must be >= 1");
  detail::FamilyBuilder b;
  Label c = checked_add(1, checked_pow(2, n - 2));
  std::uint64_t last = k * n;
  for (std::uint64_t i = 0; i <= last; ++i) {
    b.add("u" + std::to_string(i),
          checked_mul(checked_pow(2, (i % n) + i / n), checked_pow(c, i / n)));
    if (i >= 1) b.connect((int)(i - 1), (int)i);
  }
  for (std::uint64_t blk = 0; blk < k; ++blk)
    b.connect((int)(blk * n + 1), (int)((blk + 1) * n));
  return std::move(b).build();
}

// Rooted tree whose i-th branch is a path of length i. Root labeled 3;
// branch 1 is the vertex 6; branch i starts at v_i = 3+10^e(i) and
// continues with v_{i,j} = 2^(j-1)*10^e(i). The branch exponents run
// 1,2,3,4 and then step by two: consecutive powers of ten differ by
// 8*10^e = 2^3*10^e and 2*10^e, which collide with branch-5 tails once
// branch 6 exists, while 10^d - 2^g has an odd factor other than 5 for
// every gap d >= 2, so spaced exponents keep all cross-branch
// differences out of the label set.
inline LabeledGraph olive_tree(std::uint64_t k) {
  detail::require(k >= 1, "olive_tree: branch count must be >= 1");
  detail::FamilyBuilder b;
  int root = b.add("r", 3);
  b.connect(root, b.add("v1", 6));
  for (std::uint64_t i = 2; i <= k; ++i) {
    Label power = checked_pow(10, i <= 5 ? i - 1 : 2 * i - 6);
    int prev = b.add("v" + std::to_string(i), checked_add(3, power));
    b.connect(root, prev);
    for (std::uint64_t j = 1; j < i; ++j) {
      int vij = b.add("v" + std::to_string(i) + "_" + std::to_string(j),
                      checked_mul(checked_pow(2, j - 1), power));
      b.connect(prev, vij);
      prev = vij;
    }
  }
  return std::move(b).build();
}

enum class Family {
  k3,
  star,
  butterfly,
  bistar,
  umbrella,
  double_triangular_snake,
  irregular_triangular_snake,
  cn_snake,
  alternate_cn_snake,
  olive_tree,
};

inline const std::vector<std::pair<std::string, Family>>& family_names() {
  static const std::vector<std::pair<std::string, Family>> names = {
      {"k3", Family::k3},
      {"star", Family::star},
      {"butterfly", Family::butterfly},
      {"bistar", Family::bistar},
      {"umbrella", Family::umbrella},
      {"double_triangular_snake", Family::double_triangular_snake},
      {"irregular_triangular_snake", Family::irregular_triangular_snake},
      {"cn_snake", Family::cn_snake},
      {"alternate_cn_snake", Family::alternate_cn_snake},
      {"olive_tree", Family::olive_tree},
  };
  return names;
}

inline Family family_from_name(const std::string& name) {
  for (const auto& [text, fam] : family_names())
    if (text == name) return fam;
  throw std::invalid_argument("unknown family '" + name + "'");
}

inline std::string family_name(Family f) {
  for (const auto& [text, fam] : family_names())
    if (fam == f) return text;
  throw std::invalid_argument("unknown family enum value");
}

// Dispatch wrapper: named integer parameters per family. star takes
// variant 0 (A) or 1 (B) under the key "variant".
struct FamilySpec {
  Family family;
  std::map<std::string, std::uint64_t> params;
};

inline LabeledGraph make_family(const FamilySpec& spec) {
  auto want = [&spec](std::initializer_list<const char*> keys) {
    std::map<std::string, std::uint64_t> got = spec.params;
    std::map<std::string, std::uint64_t> out;
    for (const char* key : keys) {
      auto it = got.find(key);
      if (it == got.end())
        throw std::invalid_argument("family " + family_name(spec.family) +
                                    " requires parameter --" + key);
      out[key] = it->second;
      got.erase(it);
    }
    if (!got.empty())
      throw std::invalid_argument("family " + family_name(spec.family) +
                                  " does not take parameter --" + got.begin()->first);
    return out;
  };
  switch (spec.family) {
    case Family::k3:
      return k3(want({"a"}).at("a"));
    case Family::star: {
      auto p = want({"n", "variant"});
      if (p.at("variant") > 1)
        throw std::invalid_argument("star: variant must be A (0) or B (1)");
      return star(p.at("n"), p.at("variant") == 0 ? StarVariant::a : StarVariant::b);
    }
    case Family::butterfly: {
      auto p = want({"n", "m"});
      return butterfly(p.at("n"), p.at("m"));
    }
    case Family::bistar: {
      auto p = want({"n", "m"});
      return bistar(p.at("n"), p.at("m"));
    }
    case Family::umbrella: {
      auto p = want({"n", "m"});
      return umbrella(p.at("n"), p.at("m"));
    }
    case Family::double_triangular_snake:
      return double_triangular_snake(want({"t"}).at("t"));
    case Family::irregular_triangular_snake:
      return irregular_triangular_snake(want({"n"}).at("n"));
    case Family::cn_snake: {
      auto p = want({"n", "k"});
      return cn_snake(p.at("n"), p.at("k"));
    }
    case Family::alternate_cn_snake: {
      auto p = want({"n", "k"});
      return alternate_cn_snake(p.at("n"), p.at("k"));
    }
    case Family::olive_tree:
      return olive_tree(want({"k"}).at("k"));
  }
  throw std::invalid_argument("unknown family enum value");
}

}  // namespace diffgraph
