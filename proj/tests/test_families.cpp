#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "test_helpers.hpp"

using namespace diffgraph;

namespace {

std::map<std::string, Label> labels_by_name(const LabeledGraph& lg) {
  std::map<std::string, Label> out;
  for (int v = 0; v < lg.graph.order(); ++v) out[lg.graph.vertex_name(v)] = lg.labeling[v];
  return out;
}

int vertex_named(const LabeledGraph& lg, const std::string& name) {
  for (int v = 0; v < lg.graph.order(); ++v)
    if (lg.graph.vertex_name(v) == name) return v;
  throw std::runtime_error("no vertex named " + name);
}

std::vector<Label> sorted_labels(const LabeledGraph& lg) {
  std::vector<Label> out = lg.labeling.values();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("k3 labels the triangle a, 2a, 3a") {
  LabeledGraph one = k3(1);
  CHECK(one.labeling.values() == std::vector<Label>{1, 2, 3});
  CHECK(one.graph.edge_count() == 3);
  CHECK(verify_valid(one));

  CHECK(k3(2).labeling.values() == std::vector<Label>{2, 4, 6});
  CHECK(verify_valid(k3(2)));
  CHECK(k3(5).labeling.values() == std::vector<Label>{5, 10, 15});
  CHECK(verify_valid(k3(5)));

  CHECK_THROWS_AS(k3(0), std::invalid_argument);
}

TEST_CASE("star variant A pairs center 2n with the first n odd numbers") {
  LabeledGraph s8 = star(8, StarVariant::a);
  CHECK(s8.labeling.values() ==
        std::vector<Label>{16, 1, 3, 5, 7, 9, 11, 13, 15});
  CHECK(s8.graph.degree(0) == 8);
  CHECK(s8.graph.edge_count() == 8);
  CHECK(verify_valid(s8));

  CHECK(star(2, StarVariant::a).labeling.values() == std::vector<Label>{4, 1, 3});
  CHECK(verify_valid(star(2, StarVariant::a)));

  CHECK_THROWS_AS(star(1, StarVariant::a), std::invalid_argument);
  CHECK_THROWS_AS(star(0, StarVariant::a), std::invalid_argument);
}

TEST_CASE("star variant B moves the maximum to a leaf") {
  LabeledGraph s8 = star(8, StarVariant::b);
  CHECK(s8.labeling[0] == 14);
  CHECK(sorted_labels(s8) == std::vector<Label>{1, 3, 5, 7, 9, 11, 13, 14, 28});
  CHECK(verify_valid(s8));

  LabeledGraph s2 = star(2, StarVariant::b);
  CHECK(s2.labeling.values() == std::vector<Label>{2, 4, 1});
  CHECK(verify_valid(s2));

  CHECK_THROWS_AS(star(3, StarVariant::b), std::invalid_argument);
  CHECK_THROWS_AS(star(1, StarVariant::b), std::invalid_argument);
}

TEST_CASE("star maxima sit on the center for A and on a doubled leaf for B") {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    LabeledGraph a = star(n, StarVariant::a);
    Label max_a = a.labeling.signature().max();
    CHECK(a.labeling[0] == max_a);

    if (n % 2 != 0) continue;
    LabeledGraph b = star(n, StarVariant::b);
    Label max_b = b.labeling.signature().max();
    int holder = -1;
    for (int v = 0; v < b.graph.order(); ++v)
      if (b.labeling[v] == max_b) holder = v;
    CHECK(holder != 0);
    CHECK(b.graph.degree(holder) == 1);
    CHECK(b.graph.has_edge(0, holder));
    CHECK(b.labeling[0] * 2 == max_b);
  }
}

TEST_CASE("butterfly reproduces the worked drawing at (3,4)") {
  LabeledGraph fig = butterfly(3, 4);
  CHECK(fig.graph.order() == 11);
  CHECK(fig.graph.edge_count() == 18);
  auto at = labels_by_name(fig);
  CHECK(at["w0"] == 6);
  CHECK(at["w1"] == 2);
  CHECK(at["u0"] == 4);
  CHECK(at["u1"] == 10);
  CHECK(at["u2"] == 16);
  CHECK(at["u3"] == 22);
  CHECK(at["v0"] == 3);
  CHECK(at["v1"] == 9);
  CHECK(at["v2"] == 15);
  CHECK(at["v3"] == 21);
  CHECK(at["v4"] == 27);
  CHECK(fig.graph.degree(vertex_named(fig, "w0")) == 10);
  CHECK(verify_valid(fig));
}

TEST_CASE("butterfly degenerate wings still verify") {
  LabeledGraph tiny = butterfly(0, 0);
  CHECK(sorted_labels(tiny) == std::vector<Label>{2, 3, 4, 6});
  CHECK(tiny.graph.edge_count() == 4);
  CHECK(verify_valid(tiny));

  LabeledGraph mid = butterfly(1, 2);
  CHECK(sorted_labels(mid) == std::vector<Label>{2, 3, 4, 6, 9, 10, 15});
  CHECK(verify_valid(mid));
}

TEST_CASE("bistar joins two star centers with arithmetic leaf spacing") {
  LabeledGraph fig = bistar(5, 5);
  auto at = labels_by_name(fig);
  CHECK(at["u0"] == 10);
  CHECK(at["v0"] == 80);
  for (Label i = 1; i <= 5; ++i) CHECK(at["u" + std::to_string(i)] == 2 * i - 1);
  CHECK(at["v1"] == 22);
  CHECK(at["v2"] == 34);
  CHECK(at["v3"] == 46);
  CHECK(at["v4"] == 58);
  CHECK(at["v5"] == 70);
  CHECK(fig.graph.order() == 12);
  CHECK(fig.graph.edge_count() == 11);
  CHECK(fig.graph.has_edge(vertex_named(fig, "u0"), vertex_named(fig, "v0")));
  CHECK(verify_valid(fig));

  auto small = labels_by_name(bistar(1, 1));
  CHECK(small["u0"] == 2);
  CHECK(small["u1"] == 1);
  CHECK(small["v0"] == 8);
  CHECK(small["v1"] == 6);
  CHECK(verify_valid(bistar(1, 1)));

  auto mid = labels_by_name(bistar(2, 3));
  CHECK(mid["u0"] == 4);
  CHECK(mid["v0"] == 26);
  CHECK(mid["v1"] == 10);
  CHECK(mid["v2"] == 16);
  CHECK(mid["v3"] == 22);
  CHECK(verify_valid(bistar(2, 3)));

  CHECK_THROWS_AS(bistar(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bistar(1, 0), std::invalid_argument);
}

TEST_CASE("umbrella hangs a doubling tail below the fan hub") {
  LabeledGraph fig = umbrella(5, 3);
  auto at = labels_by_name(fig);
  CHECK(at["u0"] == 2);
  for (Label i = 1; i <= 5; ++i) CHECK(at["u" + std::to_string(i)] == 2 * i - 1);
  CHECK(at["v0"] == 22);
  CHECK(at["v1"] == 20);
  CHECK(at["v2"] == 40);
  CHECK(at["v3"] == 80);
  CHECK(fig.graph.order() == 10);
  CHECK(fig.graph.edge_count() == 13);
  CHECK(verify_valid(fig));

  auto small = labels_by_name(umbrella(2, 1));
  CHECK(small["v0"] == 10);
  CHECK(small["v1"] == 8);
  CHECK(verify_valid(umbrella(2, 1)));

  auto mid = labels_by_name(umbrella(3, 2));
  CHECK(mid["v0"] == 14);
  CHECK(mid["v1"] == 12);
  CHECK(mid["v2"] == 24);
  CHECK(verify_valid(umbrella(3, 2)));

  CHECK_THROWS_AS(umbrella(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(umbrella(2, 0), std::invalid_argument);
}

TEST_CASE("double triangular snake at the smallest sizes") {
  LabeledGraph one = double_triangular_snake(1);
  auto at = labels_by_name(one);
  CHECK(at["u1"] == 2);
  CHECK(at["u2"] == 3);
  CHECK(at["v1"] == 5);
  CHECK(at["w1"] == 1);
  CHECK(one.graph.order() == 4);
  CHECK(one.graph.edge_count() == 5);
  CHECK(one.graph.has_edge(vertex_named(one, "v1"), vertex_named(one, "u1")));
  CHECK(one.graph.has_edge(vertex_named(one, "v1"), vertex_named(one, "u2")));
  CHECK(one.graph.has_edge(vertex_named(one, "w1"), vertex_named(one, "u1")));
  CHECK(one.graph.has_edge(vertex_named(one, "w1"), vertex_named(one, "u2")));
  CHECK(verify_valid(one));

  auto two = labels_by_name(double_triangular_snake(2));
  CHECK(two["u1"] == 4);
  CHECK(two["u2"] == 6);
  CHECK(two["u3"] == 9);
  CHECK(two["v1"] == 10);
  CHECK(two["v2"] == 15);
  CHECK(two["w1"] == 2);
  CHECK(two["w2"] == 3);
  CHECK(verify_valid(double_triangular_snake(2)));

  CHECK_THROWS_AS(double_triangular_snake(0), std::invalid_argument);
}

TEST_CASE("doubling the snake labels reproduces the drawn values") {
  LabeledGraph doubled = scale_labeling(double_triangular_snake(4), 2);
  auto at = labels_by_name(doubled);
  CHECK(at["u1"] == 32);
  CHECK(at["u2"] == 48);
  CHECK(at["u3"] == 72);
  CHECK(at["u4"] == 108);
  CHECK(at["u5"] == 162);
  CHECK(at["v1"] == 80);
  CHECK(at["v2"] == 120);
  CHECK(at["v3"] == 180);
  CHECK(at["v4"] == 270);
  CHECK(at["w1"] == 16);
  CHECK(at["w2"] == 24);
  CHECK(at["w3"] == 36);
  CHECK(at["w4"] == 54);
  CHECK(verify_valid(doubled));
}

TEST_CASE("irregular triangular snake reproduces the drawn values at n=8") {
  LabeledGraph fig = irregular_triangular_snake(8);
  auto at = labels_by_name(fig);
  for (Label i = 1; i <= 8; ++i)
    CHECK(at["u" + std::to_string(i)] == (Label(1) << i));
  CHECK(at["v1"] == 10);
  CHECK(at["v3"] == 40);
  CHECK(at["v5"] == 160);
  CHECK(at["w1"] == 50);
  CHECK(at["w3"] == 200);
  CHECK(at["w5"] == 416);
  CHECK(fig.graph.order() == 14);
  CHECK(fig.graph.has_edge(vertex_named(fig, "w5"), vertex_named(fig, "v5")));
  CHECK(fig.graph.has_edge(vertex_named(fig, "w5"), vertex_named(fig, "u8")));
  CHECK(verify_valid(fig));
}

TEST_CASE("irregular triangular snake handles the shortest paths") {
  auto four = labels_by_name(irregular_triangular_snake(4));
  CHECK(four["v1"] == 10);
  CHECK(four["w1"] == 26);
  CHECK(verify_valid(irregular_triangular_snake(4)));

  auto six = labels_by_name(irregular_triangular_snake(6));
  CHECK(six["v1"] == 10);
  CHECK(six["v3"] == 40);
  CHECK(six["w1"] == 50);
  CHECK(six["w3"] == 104);
  CHECK(verify_valid(irregular_triangular_snake(6)));

  CHECK_THROWS_AS(irregular_triangular_snake(2), std::invalid_argument);
  CHECK_THROWS_AS(irregular_triangular_snake(5), std::invalid_argument);
  CHECK_THROWS_AS(irregular_triangular_snake(7), std::invalid_argument);
}

TEST_CASE("cycle snake chains share one vertex between blocks") {
  LabeledGraph fig = cn_snake(6, 3);
  CHECK(fig.labeling.values() ==
        std::vector<Label>{1, 2, 4, 8, 16, 17, 34, 68, 136, 272, 289, 578, 1156,
                           2312, 4624, 4913});
  CHECK(fig.graph.order() == 16);
  CHECK(fig.graph.edge_count() == 18);
  CHECK(fig.graph.has_edge(0, 5));
  CHECK(fig.graph.has_edge(5, 10));
  CHECK(fig.graph.has_edge(10, 15));
  CHECK(verify_valid(fig));

  LabeledGraph tri = cn_snake(3, 1);
  CHECK(tri.labeling.values() == std::vector<Label>{1, 2, 3});
  CHECK(tri.graph.edge_count() == 3);
  CHECK(verify_valid(tri));

  LabeledGraph two = cn_snake(4, 2);
  CHECK(two.labeling.values() == std::vector<Label>{1, 2, 4, 5, 10, 20, 25});
  CHECK(verify_valid(two));

  CHECK_THROWS_AS(cn_snake(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(cn_snake(3, 0), std::invalid_argument);
}

TEST_CASE("alternate cycle snake attaches each cycle by a path edge") {
  LabeledGraph fig = alternate_cn_snake(5, 4);
  CHECK(fig.labeling.values() ==
        std::vector<Label>{1,     2,     4,     8,     16,    18,    36,
                           72,    144,   288,   324,   648,   1296,  2592,
                           5184,  5832,  11664, 23328, 46656, 93312, 104976});
  CHECK(fig.graph.order() == 21);
  CHECK(fig.graph.edge_count() == 24);
  CHECK(fig.graph.has_edge(1, 5));
  CHECK(fig.graph.has_edge(6, 10));
  CHECK(verify_valid(fig));

  LabeledGraph one = alternate_cn_snake(5, 1);
  CHECK(one.labeling.values() == std::vector<Label>{1, 2, 4, 8, 16, 18});
  CHECK(verify_valid(one));

  LabeledGraph two = alternate_cn_snake(3, 2);
  CHECK(two.labeling.values() == std::vector<Label>{1, 2, 4, 6, 12, 24, 36});
  CHECK(verify_valid(two));

  CHECK_THROWS_AS(alternate_cn_snake(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(alternate_cn_snake(3, 0), std::invalid_argument);
}

TEST_CASE("olive tree branches grow by powers of ten") {
  LabeledGraph fig = olive_tree(5);
  auto at = labels_by_name(fig);
  CHECK(at["r"] == 3);
  CHECK(at["v1"] == 6);
  CHECK(at["v2"] == 13);
  CHECK(at["v2_1"] == 10);
  CHECK(at["v3"] == 103);
  CHECK(at["v3_1"] == 100);
  CHECK(at["v3_2"] == 200);
  CHECK(at["v4"] == 1003);
  CHECK(at["v4_1"] == 1000);
  CHECK(at["v4_2"] == 2000);
  CHECK(at["v4_3"] == 4000);
  CHECK(at["v5"] == 10003);
  CHECK(at["v5_1"] == 10000);
  CHECK(at["v5_2"] == 20000);
  CHECK(at["v5_3"] == 40000);
  CHECK(at["v5_4"] == 80000);
  CHECK(fig.graph.order() == 16);
  CHECK(fig.graph.edge_count() == 15);
  CHECK(verify_valid(fig));

  LabeledGraph single = olive_tree(1);
  CHECK(single.labeling.values() == std::vector<Label>{3, 6});
  CHECK(single.graph.edge_count() == 1);
  CHECK(verify_valid(single));

  LabeledGraph two = olive_tree(2);
  CHECK(sorted_labels(two) == std::vector<Label>{3, 6, 10, 13});
  CHECK(verify_valid(two));

  CHECK_THROWS_AS(olive_tree(0), std::invalid_argument);
}

TEST_CASE("every documented parameter choice builds a valid labeling") {
  std::vector<LabeledGraph> instances;
  for (std::uint64_t n = 2; n <= 20; ++n) {
    instances.push_back(star(n, StarVariant::a));
    if (n % 2 == 0) instances.push_back(star(n, StarVariant::b));
  }
  for (std::uint64_t n = 0; n <= 10; ++n)
    for (std::uint64_t m = 0; m <= 10; ++m) instances.push_back(butterfly(n, m));
  for (std::uint64_t n = 1; n <= 10; ++n)
    for (std::uint64_t m = 1; m <= 10; ++m) instances.push_back(bistar(n, m));
  for (std::uint64_t n = 2; n <= 10; ++n)
    for (std::uint64_t m = 1; m <= 8; ++m) instances.push_back(umbrella(n, m));
  for (std::uint64_t t = 1; t <= 8; ++t) instances.push_back(double_triangular_snake(t));
  for (std::uint64_t n = 4; n <= 12; n += 2) instances.push_back(irregular_triangular_snake(n));
  for (std::uint64_t n = 3; n <= 8; ++n)
    for (std::uint64_t k = 1; k <= 4; ++k) instances.push_back(cn_snake(n, k));
  for (std::uint64_t n = 3; n <= 6; ++n)
    for (std::uint64_t k = 1; k <= 4; ++k) instances.push_back(alternate_cn_snake(n, k));
  for (std::uint64_t k = 1; k <= 8; ++k) instances.push_back(olive_tree(k));
  for (std::uint64_t a = 1; a <= 10; ++a) instances.push_back(k3(a));

  REQUIRE(instances.size() == 393);
  for (const auto& lg : instances) {
    REQUIRE(verify_valid(lg));
    CHECK((int)lg.labeling.signature().size() == lg.graph.order());
    FormDiagnostics d = label_form_diagnostics(lg);
    CHECK(d.min_form_ok);
    CHECK(d.max_form_ok);
    CHECK(d.every_member_has_form);
    CHECK(d.parity_consistent);
  }
}

TEST_CASE("family names round-trip") {
  for (const auto& [name, fam] : family_names()) {
    CHECK(family_from_name(name) == fam);
    CHECK(family_name(fam) == name);
  }
  CHECK_THROWS_AS(family_from_name("pentagram"), std::invalid_argument);
}

TEST_CASE("the dispatch wrapper validates its parameter set") {
  LabeledGraph via = make_family({Family::k3, {{"a", 5}}});
  CHECK(via.labeling.values() == k3(5).labeling.values());
  CHECK(via.graph == k3(5).graph);

  LabeledGraph snake = make_family({Family::cn_snake, {{"n", 4}, {"k", 2}}});
  CHECK(snake.labeling.values() == cn_snake(4, 2).labeling.values());

  LabeledGraph b = make_family({Family::star, {{"n", 8}, {"variant", 1}}});
  CHECK(b.labeling.values() == star(8, StarVariant::b).labeling.values());

  CHECK_THROWS_AS(make_family({Family::k3, {}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family({Family::k3, {{"a", 1}, {"n", 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family({Family::star, {{"n", 8}, {"variant", 2}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_family({Family::umbrella, {{"n", 5}}}), std::invalid_argument);
}
