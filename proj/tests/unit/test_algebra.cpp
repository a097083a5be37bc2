#include <doctest.h>

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "perioknot/algebra.hpp"
#include "perioknot/periods.hpp"
#include "perioknot/wirtinger.hpp"

using namespace perioknot;

namespace {

LaurentPoly alexander_of(const GaussCode& code) { return alexander_polynomial(presentation(code).presentation); }

std::int64_t gcd_count(const AbelianStructure& ab, std::int64_t m) {
  std::int64_t total = 1;
  for (int k = 0; k < ab.free_rank; ++k) total *= m;
  for (auto d : ab.torsion) total *= std::gcd(d, m);
  return total;
}

Presentation random_presentation(std::mt19937_64& rng, int gens, int rels, int max_len) {
  Presentation pres;
  for (int g = 0; g < gens; ++g) pres.generators.push_back("x" + std::to_string(g));
  std::uniform_int_distribution<int> gen(0, gens - 1), sign(0, 1), len(1, max_len);
  for (int r = 0; r < rels; ++r) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back({gen(rng), sign(rng) ? 1 : -1});
    pres.relators.push_back(w);
  }
  return pres;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly a({1, -1, 1});
  const LaurentPoly b({-1, 1}, -2);
  CHECK(a.to_string() == "1 - t + t^2");
  CHECK(b.to_string() == "-t^-2 + t^-1");
  CHECK((a * b).normalized() == LaurentPoly({1, -2, 2, -1}).normalized());
  CHECK((a + b - b) == a);
  CHECK((a - a).is_zero());
  CHECK(LaurentPoly({0, 0, 3, 0}, 1) == LaurentPoly::monomial(3, 3));
  CHECK(LaurentPoly({-1, 2, -1}, 5).normalized() == LaurentPoly({1, -2, 1}));
  CHECK(a.evaluate(2) == 3);
  CHECK_THROWS_AS(b.evaluate(2), std::domain_error);
  CHECK(gcd(LaurentPoly({-1, 0, 1}), LaurentPoly({1, 2, 1})) == LaurentPoly({1, 1}));
  CHECK(gcd(LaurentPoly{}, LaurentPoly({2, -3, 2}, 4)) == LaurentPoly({2, -3, 2}));
  CHECK(gcd(LaurentPoly({1, -1, 1}), LaurentPoly({1, 1})) == LaurentPoly({1}));
  CHECK(LaurentPoly{}.to_string() == "0");
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization(torus_presentation(2, 3)) == AbelianStructure{1, {}});
  CHECK(abelianization(Presentation{{"a"}, {Word::power(0, 5)}}) == AbelianStructure{0, {5}});
  CHECK(abelianization(Presentation{{"a"}, {}}) == AbelianStructure{1, {}});
  // Z/2 x Z/6 from a relation matrix needing row and column moves.
  const Presentation mixed{{"a", "b"},
                           {Word::power(0, 2) * Word::power(1, 4), Word::power(0, 2) * Word::power(1, -2)}};
  const AbelianStructure ab = abelianization(mixed);
  CHECK(ab.free_rank == 0);
  CHECK(ab.torsion == std::vector<std::int64_t>{2, 6});
}

TEST_CASE("Smith form agrees with counting homs to cyclic groups") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int gens = 1 + trial % 3;
    const int rels = trial % 4;
    const Presentation pres = random_presentation(rng, gens, rels, 8);
    const AbelianStructure ab = abelianization(pres);
    for (std::size_t k = 1; k < ab.torsion.size(); ++k) CHECK(ab.torsion[k] % ab.torsion[k - 1] == 0);
    for (int m = 2; m <= 7; ++m) CHECK(static_cast<std::int64_t>(testsupport::count_cyclic_homs(pres, m)) == gcd_count(ab, m));
  }
}

TEST_CASE("abelian exponents and knot-like checks") {
  CHECK(abelian_exponents(torus_presentation(2, 3)) == std::vector<std::int64_t>{3, 2});
  CHECK(abelian_exponents(presentation(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")).presentation) ==
        std::vector<std::int64_t>{1, 1, 1});
  CHECK_THROWS_AS(abelian_exponents(Presentation{{"a"}, {Word::power(0, 5)}}), NotKnotLikeError);
  CHECK_THROWS_AS(alexander_polynomial(Presentation{{"a", "b"}, {}}), NotKnotLikeError);
}

TEST_CASE("Fox derivatives") {
  // ∂(a b a^-1)/∂a = 1 - a b a^-1 -> 1 - t under a, b -> t
  const Word w{{0, 1}, {1, 1}, {0, -1}};
  CHECK(fox_derivative(w, 0, {1, 1}) == LaurentPoly({1, -1}));
  CHECK(fox_derivative(w, 1, {1, 1}) == LaurentPoly::monomial(1, 1));
  CHECK(fox_derivative(Word::power(0, 3), 0, {1}) == LaurentPoly({1, 1, 1}));
}

TEST_CASE("Alexander polynomials of known knots") {
  const LaurentPoly trefoil({1, -1, 1});
  CHECK(alexander_of(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")) == trefoil);
  CHECK(alexander_polynomial(periodic_presentation(*make_periodic(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"), 3))) ==
        trefoil);
  CHECK(alexander_polynomial(Presentation{{"a"}, {}}) == LaurentPoly({1}));
  CHECK(alexander_of(GaussCode{}) == LaurentPoly({1}));
  CHECK(alexander_of(parse_gauss("U1+ O2- O1+ U2- U3+ O4- O3+ U4-")) == LaurentPoly({1}));

  CHECK(alexander_of(testsupport::braid_closure(2, {1, 1, 1})) == trefoil);
  CHECK(alexander_of(testsupport::braid_closure(3, {1, -2, 1, -2})) == LaurentPoly({1, -3, 1}));
  CHECK(alexander_of(testsupport::braid_closure(2, {1, 1, 1, 1, 1})) == LaurentPoly({1, -1, 1, -1, 1}));
  CHECK(alexander_of(testsupport::braid_closure(3, {1, 1, 1, 2, -1, 2})) == LaurentPoly({2, -3, 2}));
  const LaurentPoly t34({1, -1, 0, 1, 0, -1, 1});
  CHECK(alexander_of(testsupport::braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2})) == t34);

  // Torus presentations exercise the branch where no generator maps to t.
  CHECK(alexander_polynomial(torus_presentation(2, 3)) == trefoil);
  CHECK(alexander_polynomial(torus_presentation(3, 4)) == t34);
  CHECK(alexander_polynomial(torus_presentation(2, 5)) == LaurentPoly({1, -1, 1, -1, 1}));
}

TEST_CASE("Alexander polynomial divides every numeric Fox minor") {
  const auto corpus = testsupport::random_voltage_corpus(60, 3, {2, 3}, 13);
  for (const VoltageGaussCode& q : corpus) {
    const Presentation pres = presentation(symmetrize(q).code()).presentation;
    const LaurentPoly delta = alexander_polynomial(pres);
    const auto e = abelian_exponents(pres);
    for (std::int64_t t : {2, 3, 5}) {
      const std::int64_t value = delta.evaluate(t);
      for (std::size_t row = 0; row < pres.relators.size(); ++row) {
        const __int128 minor = testsupport::numeric_fox_minor(pres, e, t, row, 0);
        if (value == 0) {
          CHECK(minor == 0);
        } else {
          CHECK(minor % value == 0);
        }
      }
    }
  }
}

TEST_CASE("Alexander polynomial ignores relabeling and basepoint") {
  const auto corpus = testsupport::random_voltage_corpus(40, 3, {2, 3, 4}, 17);
  std::uint64_t seed = 100;
  for (const VoltageGaussCode& q : corpus) {
    const GaussCode d = symmetrize(q).code();
    const LaurentPoly base = alexander_of(d);
    CHECK(alexander_of(testsupport::scramble(d, seed++)) == base);
    CHECK(alexander_polynomial(periodic_presentation(symmetrize(q))) == base);
  }
}
