#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace perioknot {

/// Permutation of {0, ..., d-1}, printed 1-based. Products follow the
/// left-to-right convention: (x)(a*b) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint8_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  int order() const;
  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  /// a then b.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Cycle notation with 1-based points, fixed points omitted; identity "()".
  std::string cycle_string() const;

  /// Inverse of cycle_string for a known degree; throws std::invalid_argument.
  static Permutation from_cycles(const std::string& text, int degree);

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// S_d with elements numbered in lexicographic order of their image
/// sequences, plus a full multiplication table. Shared read-only instances
/// are obtained through `get`.
class SymmetricGroup {
 public:
  static constexpr int kMaxDegree = 6;

  static const SymmetricGroup& get(int degree);

  int degree() const noexcept { return degree_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int identity() const noexcept { return 0; }

  int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)]; }
  int inv(int a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }

  /// Conjugacy classes (cycle types), numbered by first element in index order.
  int conjugacy_class(int a) const noexcept { return class_of_[static_cast<std::size_t>(a)]; }
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }

  const Permutation& element(int index) const { return elements_.at(static_cast<std::size_t>(index)); }
  int index_of(const Permutation& perm) const;

 private:
  explicit SymmetricGroup(int degree);

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

}  // namespace perioknot
