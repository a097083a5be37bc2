#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "perioknot/permutation.hpp"
#include "perioknot/wirtinger.hpp"
#include "perioknot/word.hpp"

namespace perioknot {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int max_degree = SymmetricGroup::kMaxDegree;
  std::uint64_t node_budget = 10'000'000;
  int workers = 1;
};

/// A relator-satisfying assignment of generators to permutations of degree d.
struct FiniteHom {
  int degree = 0;
  std::vector<Permutation> images;

  bool operator==(const FiniteHom&) const = default;
  auto operator<=>(const FiniteHom&) const = default;
};

/// Hom(pres, S_d) as element indices into SymmetricGroup::get(degree),
/// sorted lexicographically (which is the lexicographic order of the image
/// permutations).
struct HomList {
  int degree = 0;
  std::vector<std::vector<std::uint16_t>> homs;

  std::size_t size() const noexcept { return homs.size(); }
  FiniteHom at(std::size_t k) const;
};

/// Backtracking over generator images with relator propagation: whenever a
/// relator has a single unassigned letter, that generator is solved for.
/// Throws ResourceLimitError once more than `node_budget` branch nodes are
/// visited, std::invalid_argument when d is outside 1..max_degree.
HomList enumerate_hom_list(const Presentation& pres, int d, const OracleOptions& options = {});

std::vector<FiniteHom> enumerate_homs(const Presentation& pres, int d, const OracleOptions& options = {});

/// Product of letter images, leftmost letter acting first. Throws
/// std::out_of_range for a generator the hom does not cover.
Permutation word_image(const FiniteHom& h, const Word& w);

/// Index-level evaluation used by the oracle routines.
int word_image(const SymmetricGroup& group, const std::vector<std::uint16_t>& hom, const Word& w);

/// First hom (increasing d, then list order) sending `w` to a nontrivial
/// permutation. nullopt means "unknown", never "trivial".
std::optional<FiniteHom> nontriviality_witness(const Presentation& pres, const Word& w, int dmax,
                                               const OracleOptions& options = {});

struct OrderInfo {
  int degree = 0;
  std::size_t hom_count = 0;
  /// Order of ρ ↦ ρ∘φ on Hom(pres, S_d); divides the order of φ.
  int bound = 1;
  bool certified = false;
  std::size_t fixed = 0;
  /// Orbit sizes in decreasing order.
  std::vector<std::size_t> orbit_sizes;
};

/// Requires φ^p to be the identity on generators (std::invalid_argument
/// otherwise) and ρ∘φ to stay inside the hom list (std::logic_error).
OrderInfo endo_order_bound(const HomList& homs, const GeneratorMap& phi, int p);

OrderInfo endo_order_bound(const Presentation& pres, const GeneratorMap& phi, int p, int d,
                           const OracleOptions& options = {});

struct HomConjugacy {
  bool pass = false;
  /// First s in S_d (lexicographic) with s·ρ(x)·s^{-1} = ρ(φ(x)) for x = μ, λ.
  std::optional<Permutation> conjugator;
};

struct ConjugacyStatus {
  int degree = 0;
  std::vector<HomConjugacy> per_hom;
  bool all_pass = true;
  /// s = identity works for every hom, i.e. ρ∘φ fixes ρ(μ) and ρ(λ).
  bool identity_suffices = true;
};

ConjugacyStatus peripheral_conjugacy_check(const HomList& homs, const GeneratorMap& phi, const PeripheralPair& pp);

ConjugacyStatus peripheral_conjugacy_check(const Presentation& pres, const GeneratorMap& phi,
                                           const PeripheralPair& pp, int d, const OracleOptions& options = {});

}  // namespace perioknot
