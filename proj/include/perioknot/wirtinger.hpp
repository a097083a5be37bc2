#pragma once

#include <string>
#include <utility>

#include "perioknot/gauss.hpp"
#include "perioknot/periodic.hpp"
#include "perioknot/word.hpp"

namespace perioknot {

/// Meridian μ (a single generator) and longitude λ = ω·μ^{-m}, where ω reads
/// off the over-arc at every undercrossing and m is its exponent sum.
struct PeripheralPair {
  Word meridian;
  Word longitude;

  bool operator==(const PeripheralPair&) const = default;
};

struct WirtingerPresentation {
  Presentation presentation;
  PeripheralPair peripheral;
  Word omega;
};

/// Generator index of a_{i,j} in a periodic presentation: (j, i) lexicographic.
inline int periodic_generator(int i, int j, int n) { return j * n + (i - 1); }

std::string periodic_generator_name(int i, int j);
std::string quotient_generator_name(int i);

/// One generator a1..aN per arc (arc m ends at the m-th Under pass from the
/// basepoint) and one relator over^{-ε}·in·over^{ε}·out^{-1} per crossing.
/// The unknot gives ⟨a |⟩ with an empty longitude.
WirtingerPresentation presentation(const GaussCode& code);

/// Generators a_{i,j} in (j, i) order and relators r_{i,j} in the same order.
/// Freely trivial relators are kept so the relator list is exactly
/// equivariant under j ↦ j+1.
Presentation periodic_presentation(const PeriodicGaussCode& pcode);

/// Adds a_{i,0} = ... = a_{i,p-1}: returns ⟨a1..an | r_1..r_n⟩ and the
/// projection π. Collapsed copies are deduplicated and freely trivial
/// relators dropped.
std::pair<Presentation, GeneratorMap> quotient_presentation(const Presentation& pres, const PeriodicStructure& ps);

/// ω read from a_{1,0} once around the knot.
Word omega_word(const PeriodicGaussCode& pcode);

PeripheralPair peripheral_pair(const PeriodicGaussCode& pcode, const Presentation& pres);

/// φ: a_{i,j} ↦ a_{i,j+1}. Flagged verified after checking that every
/// relator r_{i,j} maps to r_{i,j+1} letter for letter.
GeneratorMap induced_automorphism(const PeriodicGaussCode& pcode);

/// First fundamental block of ω. In G_K, φ(μ) = g^{-1}·μ·g and
/// φ(λ) = g^{-1}·λ·g for this word g.
Word transport_word(const PeriodicGaussCode& pcode);

/// λ = ω·μ^{-m}.
Word longitude_from(const Word& omega, int meridian_generator);

}  // namespace perioknot
