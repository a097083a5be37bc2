#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "perioknot/algebra.hpp"
#include "perioknot/homs.hpp"
#include "perioknot/periodic.hpp"
#include "perioknot/wirtinger.hpp"

namespace perioknot {

class TorusParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {p >= 2 : p divides |r| or p divides |s|}. Requires |r|, |s| >= 2 and
/// gcd(|r|, |s|) = 1, else TorusParameterError.
std::set<int> torus_periods(int r, int s);

/// ⟨a, b | a^r b^{-s}⟩.
Presentation torus_presentation(int r, int s);

enum class CheckStatus { Pass, Fail, Inconclusive, ResourceLimit };

std::string to_string(CheckStatus status);

struct CertifyOptions {
  int dmax = 5;
  std::uint64_t node_budget = 10'000'000;
  int workers = 1;
};

struct CertificationReport {
  struct Input {
    std::string code;
    int p = 0;
    int n = 0;
    std::size_t crossings = 0;
  } input;

  CertifyOptions options;

  struct Structure {
    CheckStatus status = CheckStatus::Pass;
    bool crossing_count = false;  // n·p crossings and n·p arcs
    bool rotation_free = false;
    bool rotation_order = false;
    bool signs_constant = false;
  } structure;

  struct PresentationSummary {
    std::size_t generators = 0;
    std::size_t relators = 0;
    bool phi_equivariant = false;
  } presentation;

  struct PhiOrder {
    CheckStatus status = CheckStatus::Inconclusive;
    bool certified = false;
    int bound = 1;
    std::optional<int> certified_degree;
    std::vector<OrderInfo> per_degree;
  } phi_order;

  struct Longitude {
    CheckStatus status = CheckStatus::Inconclusive;
    int exponent_sum = 0;
    std::optional<FiniteHom> witness;
  } longitude;

  struct DegreeConjugacy {
    int degree = 0;
    std::size_t homs = 0;
    std::size_t passed = 0;
    bool identity_suffices = false;
    bool adjusted_identity_suffices = false;
  };
  struct Conjugacy {
    CheckStatus status = CheckStatus::Pass;
    std::vector<DegreeConjugacy> per_degree;
    bool orientation_signature = true;
  } conjugacy;

  struct Projection {
    CheckStatus status = CheckStatus::Pass;
    bool meridian_words = false;
    bool omega_words = false;
    bool quotient_matches_diagram = false;
    bool finite_quotients = true;
    std::size_t homs_checked = 0;
  } projection;

  struct Quotient {
    std::size_t generators = 0;
    std::size_t relators = 0;
    std::string voltage_code;
    std::optional<LaurentPoly> alexander;
  } quotient;

  std::string verdict;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  bool any_failed() const;
  bool resource_exhausted() const;
};

/// Runs the structural checks and the finite-quotient oracles (degrees
/// 1..dmax) for a periodic code and assembles the verdict. Oracle resource
/// exhaustion is recorded per check rather than thrown.
CertificationReport certify(const PeriodicGaussCode& pcode, const CertifyOptions& options = {});

}  // namespace perioknot
