#include "perioknot/wirtinger.hpp"

#include <algorithm>
#include <stdexcept>

namespace perioknot {

namespace {

Word wirtinger_relator(int over, int sign, int in, int out) {
  return Word{{over, -sign}, {in, 1}, {over, sign}, {out, -1}};
}

}  // namespace

std::string periodic_generator_name(int i, int j) { return "a" + std::to_string(i) + "_" + std::to_string(j); }

std::string quotient_generator_name(int i) { return "a" + std::to_string(i); }

Word longitude_from(const Word& omega, int meridian_generator) {
  return omega * Word::power(meridian_generator, -omega.exponent_sum());
}

WirtingerPresentation presentation(const GaussCode& code) {
  WirtingerPresentation out;
  if (code.empty()) {
    out.presentation.generators = {"a"};
    out.peripheral.meridian = Word::generator(0);
    return out;
  }
  const std::size_t len = code.size();
  std::vector<std::size_t> unders;
  for (std::size_t t = 0; t < len; ++t) {
    if (code.at(t).strand == Strand::Under) unders.push_back(t);
  }
  const int arcs = static_cast<int>(unders.size());
  // arc_of[t]: index of the arc ending at the first Under pass at or after t.
  std::vector<int> arc_of(len);
  for (std::size_t t = 0, next = 0; t < len; ++t) {
    while (next < unders.size() && unders[next] < t) ++next;
    arc_of[t] = next == unders.size() ? 0 : static_cast<int>(next);
  }
  auto over_offset = [&](int crossing) {
    for (std::size_t t = 0; t < len; ++t) {
      if (code.at(t).crossing == crossing && code.at(t).strand == Strand::Over) return t;
    }
    throw std::logic_error("crossing without Over pass");
  };

  Presentation& pres = out.presentation;
  for (int m = 0; m < arcs; ++m) pres.generators.push_back("a" + std::to_string(m + 1));
  for (int m = 0; m < arcs; ++m) {
    const Pass& under = code.at(unders[static_cast<std::size_t>(m)]);
    const int over = arc_of[over_offset(under.crossing)];
    pres.relators.push_back(wirtinger_relator(over, under.sign, m, (m + 1) % arcs));
    out.omega.push_back({over, under.sign});
  }
  out.peripheral.meridian = Word::generator(0);
  out.peripheral.longitude = longitude_from(out.omega, 0);
  return out;
}

Presentation periodic_presentation(const PeriodicGaussCode& pcode) {
  const int n = pcode.n();
  const int p = pcode.p();
  Presentation pres;
  for (int j = 0; j < p; ++j) {
    for (int i = 1; i <= n; ++i) pres.generators.push_back(periodic_generator_name(i, j));
  }
  for (int j = 0; j < p; ++j) {
    for (int i = 1; i <= n; ++i) {
      const CrossingLabel over = pcode.over_arc({i, j});
      // The arc leaving c_{n,j} is a_{1,j+1}.
      const int out = i < n ? periodic_generator(i + 1, j, n) : periodic_generator(1, (j + 1) % p, n);
      pres.relators.push_back(
          wirtinger_relator(periodic_generator(over.i, over.j, n), pcode.sign(i), periodic_generator(i, j, n), out));
    }
  }
  return pres;
}

std::pair<Presentation, GeneratorMap> quotient_presentation(const Presentation& pres, const PeriodicStructure& ps) {
  const int n = ps.n;
  const int p = ps.p;
  if (static_cast<int>(pres.generators.size()) != n * p) {
    throw std::invalid_argument("presentation does not match the periodic structure");
  }
  GeneratorMap pi;
  pi.target_generator_count = static_cast<std::size_t>(n);
  pi.structurally_verified = true;
  for (int j = 0; j < p; ++j) {
    for (int i = 1; i <= n; ++i) pi.images.push_back(Word::generator(i - 1));
  }
  Presentation q;
  for (int i = 1; i <= n; ++i) q.generators.push_back(quotient_generator_name(i));
  for (const Word& r : pres.relators) {
    Word image = pi.apply(r);
    if (free_reduce(image).empty()) continue;
    if (std::find(q.relators.begin(), q.relators.end(), image) == q.relators.end()) q.relators.push_back(image);
  }
  return {std::move(q), std::move(pi)};
}

Word omega_word(const PeriodicGaussCode& pcode) {
  const int n = pcode.n();
  Word omega;
  for (int j = 0; j < pcode.p(); ++j) {
    for (int i = 1; i <= n; ++i) {
      const CrossingLabel over = pcode.over_arc({i, j});
      omega.push_back({periodic_generator(over.i, over.j, n), pcode.sign(i)});
    }
  }
  return omega;
}

Word transport_word(const PeriodicGaussCode& pcode) {
  const Word omega = omega_word(pcode);
  return Word(std::vector<Letter>(omega.letters().begin(), omega.letters().begin() + pcode.n()));
}

PeripheralPair peripheral_pair(const PeriodicGaussCode& pcode, const Presentation& pres) {
  if (static_cast<int>(pres.generators.size()) != pcode.n() * pcode.p()) {
    throw std::invalid_argument("presentation does not match the periodic code");
  }
  const int mu = periodic_generator(1, 0, pcode.n());
  return {Word::generator(mu), longitude_from(omega_word(pcode), mu)};
}

GeneratorMap induced_automorphism(const PeriodicGaussCode& pcode) {
  const int n = pcode.n();
  const int p = pcode.p();
  GeneratorMap phi;
  phi.target_generator_count = static_cast<std::size_t>(n * p);
  for (int j = 0; j < p; ++j) {
    for (int i = 1; i <= n; ++i) phi.images.push_back(Word::generator(periodic_generator(i, (j + 1) % p, n)));
  }
  const Presentation pres = periodic_presentation(pcode);
  bool equivariant = true;
  for (int j = 0; j < p && equivariant; ++j) {
    for (int i = 1; i <= n; ++i) {
      const Word& r = pres.relators[static_cast<std::size_t>(periodic_generator(i, j, n))];
      const Word& next = pres.relators[static_cast<std::size_t>(periodic_generator(i, (j + 1) % p, n))];
      if (phi.apply(r) != next) {
        equivariant = false;
        break;
      }
    }
  }
  phi.structurally_verified = equivariant;
  return phi;
}

}  // namespace perioknot
