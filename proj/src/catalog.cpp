#include "lienil/catalog.hpp"

#include <cctype>
#include <stdexcept>
#include <tuple>

namespace lienil {
namespace catalog {

namespace {

Vector basis_vec(std::size_t n, std::size_t k1) {
  // 1-based convenience for relation tables
  return unit_vector(n, k1 - 1);
}

LieAlgebra from_relations(
    std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& rels,
    std::string label) {
  std::vector<BracketRelation> brackets;
  for (auto [i, j, k] : rels) brackets.push_back({i, j, basis_vec(n, k)});
  return LieAlgebra::from_brackets(n, brackets, std::move(label));
}

LieAlgebra plus_abelian(const LieAlgebra& l, std::size_t k, std::string label) {
  return direct_sum(l, abelian(k)).relabeled(std::move(label));
}

}  // namespace

LieAlgebra heisenberg(std::size_t m) {
  if (m < 1) throw std::domain_error("heisenberg: m must be >= 1");
  const std::size_t n = 2 * m + 1;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> rels;
  for (std::size_t i = 1; i <= m; ++i) rels.push_back({2 * i - 1, 2 * i, n});
  return from_relations(n, rels, "H(" + std::to_string(m) + ")");
}

LieAlgebra abelian(std::size_t n) {
  return LieAlgebra::from_brackets(n, {}, "A(" + std::to_string(n) + ")");
}

LieAlgebra heisenberg_plus_abelian(std::size_t m, std::size_t k) {
  if (m == 0 && k == 0)
    throw std::domain_error("heisenberg_plus_abelian: (0,0) is empty");
  std::string label =
      "H(" + std::to_string(m) + ")+A(" + std::to_string(k) + ")";
  if (m == 0) return abelian(k);
  if (k == 0) return heisenberg(m);
  return plus_abelian(heisenberg(m), k, std::move(label));
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  using Rel = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::vector<CatalogEntry> cat;
  auto entry = [&cat](std::string name, LieAlgebra l,
                      std::optional<long> expected) {
    cat.push_back({name, std::move(l), expected});
  };

  entry("L3_1", abelian(3), 0);
  entry("L3_2", heisenberg(1), 1);

  entry("L4_1", abelian(4), 0);
  entry("L4_2", plus_abelian(heisenberg(1), 1, "L4_2"), 2);
  LieAlgebra l43 = from_relations(4, {Rel{1, 2, 3}, Rel{1, 3, 4}}, "L4_3");
  entry("L4_3", l43, 4);

  entry("L5_1", abelian(5), 0);
  entry("L5_2", plus_abelian(heisenberg(1), 2, "L5_2"), 3);
  entry("L5_3", plus_abelian(l43, 1, "L5_3"), std::nullopt);
  entry("L5_4", from_relations(5, {Rel{1, 2, 5}, Rel{3, 4, 5}}, "L5_4"), 5);
  entry("L5_5", from_relations(5, {Rel{1, 2, 3}, Rel{1, 3, 5}, Rel{2, 4, 5}}, "L5_5"), 6);
  entry("L5_6",
        from_relations(5, {Rel{1, 2, 3}, Rel{1, 3, 4}, Rel{1, 4, 5}, Rel{2, 3, 5}}, "L5_6"),
        std::nullopt);
  entry("L5_7",
        from_relations(5, {Rel{1, 2, 3}, Rel{1, 3, 4}, Rel{1, 4, 5}}, "L5_7"),
        std::nullopt);
  entry("L5_8", from_relations(5, {Rel{1, 2, 4}, Rel{1, 3, 5}}, "L5_8"), 4);
  entry("L5_9",
        from_relations(5, {Rel{1, 2, 3}, Rel{1, 3, 4}, Rel{2, 3, 5}}, "L5_9"),
        std::nullopt);

  // the unnamed 6-dimensional link of the corank chain: L5_2 + i
  entry("L6_2", plus_abelian(heisenberg(1), 3, "L6_2"), 4);
  entry("L7_2", plus_abelian(heisenberg(1), 4, "L7_2"), 5);
  entry("L8_2", plus_abelian(heisenberg(1), 5, "L8_2"), 6);
  return cat;
}

// parses "H(3)" / "A(5)" style aliases
std::optional<std::size_t> parse_parametric(const std::string& name, char head) {
  if (name.size() < 4 || name[0] != head || name[1] != '(' || name.back() != ')')
    return std::nullopt;
  std::size_t val = 0;
  for (std::size_t t = 2; t + 1 < name.size(); ++t) {
    if (!std::isdigit(static_cast<unsigned char>(name[t]))) return std::nullopt;
    val = val * 10 + (name[t] - '0');
  }
  return val;
}

}  // namespace

const std::vector<CatalogEntry>& list() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

CatalogEntry get(const std::string& name) {
  if (auto m = parse_parametric(name, 'H')) {
    std::optional<long> expected =
        *m == 1 ? 1 : static_cast<long>(2 * *m + 1);
    return {name, heisenberg(*m), expected};
  }
  if (auto n = parse_parametric(name, 'A')) return {name, abelian(*n), 0};
  for (const auto& e : list())
    if (e.name == name) return e;
  throw UnknownName(name);
}

std::string identify(const LieAlgebra& l) {
  static const std::vector<Fingerprint> prints = [] {
    std::vector<Fingerprint> fps;
    for (const auto& e : list()) fps.push_back(fingerprint(e.algebra));
    return fps;
  }();
  Fingerprint fp = fingerprint(l);
  for (std::size_t k = 0; k < list().size(); ++k)
    if (prints[k] == fp) return list()[k].name;
  return "unknown";
}

std::map<long, std::vector<CorankRow>> corank_table() {
  std::map<long, std::vector<CorankRow>> table;
  auto add = [&table](const std::string& name, const LieAlgebra& l, long expected) {
    long computed = corank(l);
    table[expected].push_back({name, expected, computed, computed != expected});
  };
  add("A(n)", abelian(4), 0);
  add("L3_2", get("L3_2").algebra, 1);
  add("L4_2", get("L4_2").algebra, 2);
  add("L5_2", get("L5_2").algebra, 3);
  add("L6_2", get("L6_2").algebra, 4);
  add("L4_3", get("L4_3").algebra, 4);
  add("L5_8", get("L5_8").algebra, 4);
  add("L7_2", get("L7_2").algebra, 5);
  add("L5_4", get("L5_4").algebra, 5);
  // the published t=6 row lists l_{4,2}+i, which contradicts the t=3
  // row of the same table; kept verbatim so the disagreement is visible
  add("L4_2+A(1)", plus_abelian(get("L4_2").algebra, 1, "L4_2+A(1)"), 6);
  add("L5_5", get("L5_5").algebra, 6);
  add("H(2)+A(1)", heisenberg_plus_abelian(2, 1), 6);
  add("L5_8+A(1)", plus_abelian(get("L5_8").algebra, 1, "L5_8+A(1)"), 6);
  add("L8_2", get("L8_2").algebra, 6);
  return table;
}

}  // namespace catalog
}  // namespace lienil
