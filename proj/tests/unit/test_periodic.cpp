#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "perioknot/periodic.hpp"

using namespace perioknot;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";

// Independent reading of the periodicity definition: try every cyclic shift
// of the pass sequence, build the forced relabeling, and accept when it is a
// fixed-point-free bijection of order p and the shift is 2n*k with k a unit.
bool brute_force_periodic(const GaussCode& code, int p) {
  const std::size_t len = code.size();
  if (len == 0 || code.crossing_count() % static_cast<std::size_t>(p) != 0) return false;
  const std::size_t n = code.crossing_count() / static_cast<std::size_t>(p);
  const auto passes = code.traversal();
  for (std::size_t s = 1; s < len; ++s) {
    if (s % (2 * n) != 0 || std::gcd(s / (2 * n), static_cast<std::size_t>(p)) != 1) continue;
    std::map<int, int> f;
    bool ok = true;
    for (std::size_t t = 0; t < len && ok; ++t) {
      const Pass& a = passes[t];
      const Pass& b = passes[(t + s) % len];
      if (a.strand != b.strand || a.sign != b.sign) ok = false;
      auto [it, fresh] = f.try_emplace(a.crossing, b.crossing);
      if (!fresh && it->second != b.crossing) ok = false;
    }
    if (!ok) continue;
    std::set<int> image;
    for (auto [x, y] : f) {
      if (x == y) ok = false;
      image.insert(y);
    }
    if (!ok || image.size() != f.size()) continue;
    for (auto [x, _] : f) {
      int y = x, steps = 0;
      do {
        y = f.at(y);
        ++steps;
      } while (y != x);
      if (steps != p) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("trefoil is 3-periodic with sigma (1 3 2)") {
  const GaussCode t = parse_gauss(kTrefoil);
  const auto ps = detect_periodicity(t, 3);
  REQUIRE(ps);
  CHECK(ps->p == 3);
  CHECK(ps->n == 1);
  CHECK(ps->shift == 2);
  CHECK(ps->sigma == std::map<int, int>{{1, 3}, {2, 1}, {3, 2}});
  CHECK_FALSE(detect_periodicity(t, 2));
  CHECK_FALSE(detect_periodicity(parse_gauss("O1+ U1+"), 2));
  CHECK_THROWS_AS(detect_periodicity(t, 1), std::invalid_argument);
  CHECK_FALSE(detect_periodicity(GaussCode{}, 2));
}

TEST_CASE("generator normalized to k = 1") {
  // 5 crossings, each domain "O U"; shifting by 2k for k = 1..4 all work.
  const GaussCode code = parse_gauss("O1+ U3+ O2+ U4+ O3+ U5+ O4+ U1+ O5+ U2+");
  const auto ps = detect_periodicity(code, 5);
  REQUIRE(ps);
  CHECK(ps->shift == 2);
  const auto passes = code.passes();
  for (std::size_t t = 0; t < passes.size(); ++t) {
    CHECK(ps->sigma.at(passes[t].crossing) == passes[(t + 2) % passes.size()].crossing);
  }
}

TEST_CASE("canonical labeling of the trefoil") {
  const GaussCode t = parse_gauss(kTrefoil);
  const PeriodicGaussCode pc = canonical_labeling(t, *detect_periodicity(t, 3));
  CHECK(pc.n() == 1);
  CHECK(pc.p() == 3);
  // Under passes of 1, 2, 3 occur 1st, 2nd, 3rd from the stored basepoint:
  // U2 at 1, U1 at 3, U3 at 5, so labels follow that order.
  CHECK(pc.crossing({1, 0}) == 2);
  CHECK(pc.crossing({1, 1}) == 1);
  CHECK(pc.crossing({1, 2}) == 3);
  // The traversal starts at the beginning of a_{1,0}, right after the Under
  // pass of c_{1,2}.
  CHECK(pc.code().at(pc.code().size() - 1).strand == Strand::Under);
  CHECK(pc.under_offset({1, 0}) == 1);
  CHECK(pc.over_offset({1, 0}) == 4);
  CHECK(pc.over_arc({1, 0}) == CrossingLabel{1, 2});
  CHECK(pc.sign(1) == 1);
}

TEST_CASE("quotient and symmetrize on small examples") {
  const GaussCode t = parse_gauss(kTrefoil);
  const VoltageGaussCode q = quotient(*make_periodic(t, 3));
  CHECK(render(q.base()) == "O1+ U1+");
  CHECK(q.voltage() == std::map<int, int>{{1, 2}});

  const VoltageGaussCode kink0(parse_gauss("O1+ U1+"), 2, {{1, 0}});
  CHECK(render(symmetrize(kink0).code()) == "O1+ U1+ O2+ U2+");

  const VoltageGaussCode kink2(parse_gauss("O1+ U1+"), 3, {{1, 2}});
  CHECK(equivalent_up_to_relabeling(symmetrize(kink2).code(), t));

  // Voltage 5 reduces to 2 mod 3.
  CHECK(VoltageGaussCode(parse_gauss("O1+ U1+"), 3, {{1, 5}}) == kink2);
}

TEST_CASE("voltage code normal form is enforced") {
  CHECK_THROWS_AS(VoltageGaussCode(parse_gauss("U1+ O1+"), 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(VoltageGaussCode(parse_gauss("O1+ U2+ O2+ U1+"), 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(VoltageGaussCode(parse_gauss("O1+ U1+"), 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(VoltageGaussCode(parse_gauss("O1+ U1+").rotated(1), 2, {}), std::invalid_argument);
  CHECK_NOTHROW(VoltageGaussCode(parse_gauss("O2+ U1+ O1+ U2+"), 2, {}));
}

TEST_CASE("all voltages zero when every crossing stays inside its domain") {
  const GaussCode code = parse_gauss("O1- U1- O2+ U2+ O3- U3- O4+ U4+ O5- U5- O6+ U6+");
  const auto pc = make_periodic(code, 3);
  REQUIRE(pc);
  CHECK(pc->n() == 2);
  const VoltageGaussCode q = quotient(*pc);
  for (const auto& [i, v] : q.voltage()) CHECK(v == 0);
  CHECK(q.base().crossing_count() == 2);
}

TEST_CASE("round trips on the exhaustive corpus") {
  const auto corpus = testsupport::exhaustive_voltage_corpus(2, {2, 3, 4, 5});
  CHECK(corpus.size() == 2 * (2 + 3 + 4 + 5) + 24 * (4 + 9 + 16 + 25));
  for (const VoltageGaussCode& q : corpus) {
    const PeriodicGaussCode pc = symmetrize(q);
    CHECK(pc.code().crossing_count() == q.base().crossing_count() * static_cast<std::size_t>(q.p()));
    const auto detected = make_periodic(pc.code(), q.p());
    REQUIRE(detected);
    CHECK(quotient(*detected) == q);
    CHECK(quotient(pc) == q);
  }
}

TEST_CASE("symmetrize of quotient recovers scrambled periodic codes") {
  const auto corpus = testsupport::random_voltage_corpus(150, 4, {2, 3, 4, 5}, 99);
  std::uint64_t seed = 1;
  for (const VoltageGaussCode& q : corpus) {
    const GaussCode d = testsupport::scramble(symmetrize(q).code(), seed++);
    const auto pc = make_periodic(d, q.p());
    REQUIRE(pc);
    CHECK(equivalent_up_to_relabeling(symmetrize(quotient(*pc)).code(), d));
  }
}

TEST_CASE("labeling invariants and equivariance") {
  const auto corpus = testsupport::random_voltage_corpus(200, 4, {2, 3, 4, 5}, 7);
  for (const VoltageGaussCode& q : corpus) {
    const auto pc = make_periodic(testsupport::scramble(symmetrize(q).code(), 3), q.p());
    REQUIRE(pc);
    const auto ps = detect_periodicity(pc->code(), q.p());
    REQUIRE(ps);
    const int n = pc->n();
    const int p = pc->p();
    // Under passes appear as c_{1,0}, ..., c_{n,0}, c_{1,1}, ...
    int rank = 0;
    for (std::size_t t = 0; t < pc->code().size(); ++t) {
      const Pass& pass = pc->code().at(t);
      if (pass.strand != Strand::Under) continue;
      CHECK(pc->label(pass.crossing) == CrossingLabel{rank % n + 1, rank / n});
      ++rank;
    }
    CHECK(rank == n * p);
    for (const auto& [id, l] : pc->labels()) {
      CHECK(pc->label(ps->sigma.at(id)) == CrossingLabel{l.i, (l.j + 1) % p});
      CHECK(pc->code().sign_of(id) == pc->sign(l.i));
    }
  }
}

TEST_CASE("detection agrees with the brute-force definition") {
  std::mt19937_64 rng(5);
  std::size_t positives = 0;
  for (int p = 2; p <= 4; ++p) {
    for (const VoltageGaussCode& q : testsupport::random_voltage_corpus(60, 3, {p}, static_cast<std::uint64_t>(p))) {
      const GaussCode periodic = symmetrize(q).code();
      CHECK(brute_force_periodic(periodic, p));
      CHECK(detect_periodicity(periodic, p).has_value());
      ++positives;
      // Flip one crossing's sign: usually breaks the symmetry.
      std::vector<Pass> passes = periodic.traversal();
      const int victim = passes[std::uniform_int_distribution<std::size_t>(0, passes.size() - 1)(rng)].crossing;
      for (Pass& pass : passes) {
        if (pass.crossing == victim) pass.sign = -pass.sign;
      }
      const GaussCode broken(passes);
      for (int r = 2; r <= 6; ++r) {
        CHECK(detect_periodicity(broken, r).has_value() == brute_force_periodic(broken, r));
        CHECK(detect_periodicity(periodic, r).has_value() == brute_force_periodic(periodic, r));
      }
    }
  }
  CHECK(positives == 180);
}
