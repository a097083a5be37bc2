#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "perioknot/word.hpp"

namespace perioknot {

/// Integer Laurent polynomial Σ c_k t^{low + k}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::vector<std::int64_t> coefficients, int low_exponent = 0);

  static LaurentPoly monomial(std::int64_t c, int exponent);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  int low_exponent() const noexcept { return low_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree_span() const noexcept { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

  /// Representative of the class up to ±t^k: lowest exponent 0, leading
  /// coefficient positive.
  LaurentPoly normalized() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  std::int64_t evaluate(std::int64_t t) const;  // requires low_exponent >= 0

  /// e.g. "1 - t + t^2".
  std::string to_string() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  void trim();

  std::vector<std::int64_t> coeffs_;
  int low_ = 0;
};

/// gcd in Z[t, t^-1], normalized.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

struct AbelianStructure {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool operator==(const AbelianStructure&) const = default;
};

/// Smith normal form of an integer matrix together with the unimodular column
/// transform: A·V has its nonzero diagonal entries d_1 | d_2 | ... in the
/// leading columns (after row operations).
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors, positive
  std::vector<std::vector<std::int64_t>> column_transform;
};

SmithForm smith_normal_form(std::vector<std::vector<std::int64_t>> matrix, std::size_t columns);

/// Relation matrix of exponent sums, one row per relator.
std::vector<std::vector<std::int64_t>> relation_matrix(const Presentation& pres);

AbelianStructure abelianization(const Presentation& pres);

class NotKnotLikeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generator exponents of the map G → Z (first nonzero entry positive).
/// Throws NotKnotLikeError unless the abelianization is Z.
std::vector<std::int64_t> abelian_exponents(const Presentation& pres);

/// Fox derivative ∂w/∂g evaluated under g ↦ t^{exponent[g]}.
LaurentPoly fox_derivative(const Word& w, int generator, const std::vector<std::int64_t>& exponents);

/// First Alexander polynomial: gcd of the codimension-one minors of the Fox
/// matrix, normalized. Throws NotKnotLikeError unless the abelianization is Z.
LaurentPoly alexander_polynomial(const Presentation& pres);

}  // namespace perioknot
