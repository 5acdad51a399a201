#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "cogrowth/automaton.hpp"
#include "cogrowth/core.hpp"
#include "cogrowth/nielsen.hpp"
#include "cogrowth/series.hpp"
#include "support/corpus.hpp"

using namespace cogrowth;

namespace {

CoreGraph core(int rank, const std::vector<std::string>& texts) {
  std::vector<ReducedWord> gens;
  for (const auto& t : texts) gens.push_back(parse_reduced(t, rank));
  return core_of(rank, gens);
}

std::vector<std::string> basis_texts(const NielsenSystem& s) {
  std::vector<std::string> out;
  for (const auto& w : s.generators) out.push_back(to_text(w));
  return out;
}

NielsenSystem system_of(int rank, const std::vector<std::string>& texts) {
  NielsenSystem s;
  for (const auto& t : texts) s.generators.push_back(parse_reduced(t, rank));
  return s;
}

}  // namespace

TEST_CASE("geodesic spanning tree") {
  CoreGraph c = core(3, {"abA", "acA"});
  SpanningTree t = geodesic_spanning_tree(c);
  CHECK(t.parent[0] == SpanningTree::kNoParent);
  CHECK(t.depth[0] == 0);
  CHECK(t.parent[1] == 0);
  CHECK(t.entering[1] == Letter{1, 1});
  CHECK(t.depth[1] == 1);

  for (const auto& sub : corpus::random_corpus(30)) {
    CoreGraph cc = core_of(sub.rank, sub.generators);
    SpanningTree tt = geodesic_spanning_tree(cc);
    for (std::int32_t v = 0; v < cc.vertex_count(); ++v) {
      if (v == cc.root()) {
        CHECK(tt.parent[v] == SpanningTree::kNoParent);
        CHECK(tt.depth[v] == 0);
      } else {
        CHECK(tt.depth[v] == tt.depth[tt.parent[v]] + 1);
        CHECK(cc.step(tt.parent[v], tt.entering[v]) == v);  // tree edges exist
      }
    }
    // geodesic: no edge may shortcut more than one level
    for (std::int32_t v = 0; v < cc.vertex_count(); ++v) {
      for (int s = 0; s < 2 * cc.rank(); ++s) {
        std::int32_t u = cc.step(v, Letter::from_sigma_index(s));
        if (u != CoreGraph::kNone) CHECK(std::abs(tt.depth[u] - tt.depth[v]) <= 1);
      }
    }
  }
}

TEST_CASE("tree-complement basis") {
  CHECK(basis_texts(schreier_generators(core(3, {"abA", "acA"}))) ==
        std::vector<std::string>{"abA", "acA"});
  CHECK(basis_texts(schreier_generators(core(3, {"aa", "b", "c", "abA", "acA"}))) ==
        std::vector<std::string>{"b", "c", "aa", "abA", "acA"});
  CHECK(basis_texts(schreier_generators(core(1, {"a"}))) == std::vector<std::string>{"a"});
  CHECK(schreier_generators(core(2, {})).generators.empty());

  for (const auto& sub : corpus::random_corpus(40, corpus::default_seed() + 8)) {
    CoreGraph c = core_of(sub.rank, sub.generators);
    NielsenSystem s = schreier_generators(c);
    CHECK(static_cast<int>(s.generators.size()) == subgroup_rank(c));
    for (const auto& w : s.generators) {
      CHECK(!w.empty());
      CHECK(membership(c, w));
    }
    // the basis regenerates exactly the same subgroup
    CHECK(core_of(c.rank(), s.generators) == c);
    // geodesic bases always pass the cancellation conditions
    CHECK(check_nielsen(s.generators));
  }
}

TEST_CASE("cancellation conditions") {
  CHECK(check_nielsen({}));
  CHECK(check_nielsen({parse_reduced("a", 2)}));
  CHECK(check_nielsen({parse_reduced("aa", 2), parse_reduced("b", 2)}));
  CHECK(check_nielsen({parse_reduced("abA", 2)}));

  // first condition: b^-1 eats the whole of ab
  CHECK_FALSE(check_nielsen({parse_reduced("ab", 2), parse_reduced("B", 2)}));
  // second condition: the middle factor of (aB)(ba)(Ab) cancels away entirely
  CHECK_FALSE(check_nielsen(
      {parse_reduced("aB", 2), parse_reduced("ba", 2), parse_reduced("Ab", 2)}));

  CHECK_THROWS_AS(check_nielsen({ReducedWord{}}), DomainError);
}

TEST_CASE("counting system layout") {
  // generators in printed order: w1..w5 with unknowns (1,+),(1,-),(2,+),...
  NielsenSystem s = system_of(3, {"aa", "b", "c", "abA", "acA"});
  PolyMatrix b = nielsen_matrix(s);
  REQUIRE(b.size() == 10);

  IntPolynomial one(1);
  CHECK(b.at(0, 0) == one - IntPolynomial::monomial(1, 2));  // 1 - z^2
  CHECK(b.at(0, 1) == IntPolynomial());  // column holds (aa)^-1: exactly zero
  CHECK(b.at(0, 6) == IntPolynomial(-1));  // abA cancels two letters against aa
  CHECK(b.at(5, 4) == IntPolynomial());  // (3,-) row against its inverse column (3,+)
  CHECK(b.at(6, 1) == -IntPolynomial::monomial(1, 1));  // -z
  CHECK(b.at(6, 6) == one - IntPolynomial::monomial(1, 1));  // 1 - z
  CHECK(b.at(2, 2) == one - IntPolynomial::monomial(1, 1));  // plain letter: 1 - z

  std::vector<IntPolynomial> z = nielsen_rhs(s);
  REQUIRE(z.size() == 10);
  CHECK(z[0] == IntPolynomial::monomial(1, 2));
  CHECK(z[1] == IntPolynomial::monomial(1, 2));
  CHECK(z[2] == IntPolynomial::monomial(1, 1));
  CHECK(z[6] == IntPolynomial::monomial(1, 3));
  CHECK(z[9] == IntPolynomial::monomial(1, 3));

  CHECK_FALSE(det(b).is_zero());
}

TEST_CASE("inverse columns contribute exact zeros") {
  // A word can never follow its own inverse in a reduced product, so the
  // (w, w^-1) cells carry no z-power at all; anything else would make H(z)
  // disagree with the automaton count. Guard the exact entries.
  NielsenSystem s = system_of(2, {"aa"});
  PolyMatrix b = nielsen_matrix(s);
  REQUIRE(b.size() == 2);
  CHECK(b.at(0, 1) == IntPolynomial());
  CHECK(b.at(1, 0) == IntPolynomial());
  CHECK(b.at(0, 0) == IntPolynomial(1) - IntPolynomial::monomial(1, 2));
  CHECK(b.at(1, 1) == IntPolynomial(1) - IntPolynomial::monomial(1, 2));
}

TEST_CASE("cogrowth from the counting system") {
  CHECK(nielsen_cogrowth(system_of(1, {"a"})) == cogrowth_free_group(1));
  CHECK(nielsen_cogrowth(system_of(2, {"a", "b"})) == cogrowth_free_group(2));
  CHECK(nielsen_cogrowth(NielsenSystem{}) ==
        RationalFunction(IntPolynomial(1), IntPolynomial(1)));

  for (const auto& [rank, texts] :
       std::vector<std::pair<int, std::vector<std::string>>>{
           {3, {"aa", "b", "c", "abA", "acA"}},
           {2, {"aaa", "ab", "aB", "Aba"}},
           {3, {"abA", "acA"}},
           {2, {"bb", "baBA", "aaa"}}}) {
    CoreGraph c = core(rank, texts);
    RationalFunction via_system = nielsen_cogrowth(schreier_generators(c));
    RationalFunction via_transfer = transfer_cogrowth(build_D_H(c));
    CHECK(via_system == via_transfer);
  }

  for (const auto& sub : corpus::random_corpus(40, corpus::default_seed() + 9)) {
    CoreGraph c = core_of(sub.rank, sub.generators);
    CHECK(nielsen_cogrowth(schreier_generators(c)) == transfer_cogrowth(build_D_H(c)));
  }

  CHECK_THROWS_AS(nielsen_cogrowth(system_of(2, {"ab", "B"})), DomainError);
}
