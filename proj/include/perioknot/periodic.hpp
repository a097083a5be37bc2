#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "perioknot/gauss.hpp"

namespace perioknot {

/// Combinatorial rotation symmetry of a Gauss code.
///
/// Cyclically shifting the stored pass sequence by `shift` positions and
/// renaming crossings through `sigma` reproduces the code. `shift` is always
/// 2n (the generator normalized to one fundamental domain).
struct PeriodicStructure {
  int p = 0;
  int n = 0;
  std::size_t shift = 0;
  std::map<int, int> sigma;

  bool operator==(const PeriodicStructure&) const = default;
};

/// Crossing label (i, j) with 1 <= i <= n and 0 <= j < p.
struct CrossingLabel {
  int i = 0;
  int j = 0;

  auto operator<=>(const CrossingLabel&) const = default;
};

/// A p-periodic code with the equivariant labeling of crossings and arcs.
///
/// `code` has its basepoint at the start of arc a_{1,0}, so traversal offset
/// t lies in fundamental domain t / (2n). Arc a_{i,j} is the run of passes
/// ending at the Under pass of c_{i,j}.
class PeriodicGaussCode {
 public:
  PeriodicGaussCode(GaussCode code, int p, int n, std::map<int, CrossingLabel> labels);

  const GaussCode& code() const noexcept { return code_; }
  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  const std::map<int, CrossingLabel>& labels() const noexcept { return labels_; }

  CrossingLabel label(int crossing) const { return labels_.at(crossing); }
  int crossing(CrossingLabel l) const;

  /// ε_i, the common sign of c_{i,0}, ..., c_{i,p-1}.
  int sign(int i) const;

  /// Traversal offsets (from the basepoint) of the two passes of c_{i,j}.
  std::size_t under_offset(CrossingLabel l) const;
  std::size_t over_offset(CrossingLabel l) const;

  /// Label of the arc carrying the Over pass of c_{i,j}.
  CrossingLabel over_arc(CrossingLabel l) const;

  /// Fundamental domain (0..p-1) containing traversal offset `t`.
  int domain_of(std::size_t t) const { return static_cast<int>(t / (2 * static_cast<std::size_t>(n_))); }

  /// Arc label of the pass at traversal offset `t`.
  CrossingLabel arc_at(std::size_t t) const;

 private:
  GaussCode code_;
  int p_;
  int n_;
  std::map<int, CrossingLabel> labels_;
  std::vector<std::size_t> under_offsets_;  // indexed j*n + (i-1)
  std::vector<std::size_t> over_offsets_;
  std::vector<int> crossing_by_slot_;
  std::vector<CrossingLabel> arc_of_offset_;
};

/// Quotient diagram of a periodic code with its Z/p covering data.
///
/// Normal form: `base` has basepoint 0, crossings numbered 1..n in the order
/// of their Under passes, and its last pass is an Under pass (a fundamental
/// domain ends where an arc ends). `voltage[i]` is the domain offset from the
/// Under pass of c_{i,j} to its Over pass, reduced mod p.
class VoltageGaussCode {
 public:
  /// Validates the normal form and reduces voltages mod p. Missing voltages
  /// default to 0. Throws std::invalid_argument.
  VoltageGaussCode(GaussCode base, int p, std::map<int, int> voltage);

  const GaussCode& base() const noexcept { return base_; }
  int p() const noexcept { return p_; }
  const std::map<int, int>& voltage() const noexcept { return voltage_; }

  bool operator==(const VoltageGaussCode&) const = default;

 private:
  GaussCode base_;
  int p_;
  std::map<int, int> voltage_;
};

/// Searches the φ(p) shifts 2n·k, gcd(k, p) = 1, in increasing k. The
/// returned structure is normalized to k = 1. None when the crossing count is
/// not a positive multiple of p or no shift works. Throws for p < 2.
std::optional<PeriodicStructure> detect_periodicity(const GaussCode& code, int p);

/// Labels Under passes c_{1,0}, ..., c_{n,p-1} in traversal order and moves
/// the basepoint to the start of a_{1,0}. Throws std::logic_error when `ps`
/// does not describe `code`.
PeriodicGaussCode canonical_labeling(const GaussCode& code, const PeriodicStructure& ps);

/// Fundamental domain 0 with crossings reduced to their class i.
VoltageGaussCode quotient(const PeriodicGaussCode& pcode);

/// The p-fold cover; crossing c_{i,j} gets id j*n + i.
PeriodicGaussCode symmetrize(const VoltageGaussCode& q);

/// Uniformly random normal-form voltage code with n crossings.
VoltageGaussCode random_voltage_code(int n, int p, std::mt19937_64& rng);

/// Convenience: detect + label, or nullopt.
std::optional<PeriodicGaussCode> make_periodic(const GaussCode& code, int p);

}  // namespace perioknot
