#include "perioknot/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace perioknot {

namespace {

using Poly = std::vector<std::int64_t>;  // Z[t], low degree first, no trailing zeros

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polynomial arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polynomial arithmetic");
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::int64_t sign = 1) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] = checked_add(r[k], checked_mul(sign, b[k]));
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::int64_t c) {
  Poly r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = checked_mul(a[k], c);
  trim(r);
  return r;
}

// Exact quotient a / b in Z[t]; throws when b does not divide a.
Poly div_exact(Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return {};
  if (deg(a) < deg(b)) throw std::logic_error("inexact polynomial division");
  Poly q(static_cast<std::size_t>(deg(a) - deg(b) + 1), 0);
  while (!a.empty() && deg(a) >= deg(b)) {
    const std::int64_t lead = a.back();
    if (lead % b.back() != 0) throw std::logic_error("inexact polynomial division");
    const std::int64_t c = lead / b.back();
    const std::size_t shift = static_cast<std::size_t>(deg(a) - deg(b));
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = checked_add(a[k + shift], -checked_mul(c, b[k]));
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

std::int64_t content(const Poly& a) {
  std::int64_t g = 0;
  for (auto c : a) g = std::gcd(g, c);
  return g;
}

Poly primitive(const Poly& a) {
  const std::int64_t c = content(a);
  if (c == 0) return {};
  Poly r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] / c;
  return r;
}

Poly pseudo_remainder(Poly a, const Poly& b) {
  while (!a.empty() && deg(a) >= deg(b)) {
    const std::int64_t la = a.back();
    const std::int64_t lb = b.back();
    const std::size_t shift = static_cast<std::size_t>(deg(a) - deg(b));
    Poly shifted(shift, 0);
    shifted.insert(shifted.end(), b.begin(), b.end());
    a = add(scale(a, lb), scale(shifted, la), -1);
    a = primitive(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const std::int64_t c = std::gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  a = scale(primitive(a), c);
  if (!a.empty() && a.back() < 0) a = scale(a, -1);
  return a;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t size = m.size();
  if (size == 0) return {1};
  Poly previous{1};
  std::int64_t sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].empty()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k].empty()) ++swap_row;
      if (swap_row == size) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Poly numer = add(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]), -1);
        m[i][j] = div_exact(std::move(numer), previous);
      }
      m[i][k].clear();
    }
    previous = m[k][k];
  }
  return scale(m[size - 1][size - 1], sign);
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::int64_t> coefficients, int low_exponent)
    : coeffs_(std::move(coefficients)), low_(low_exponent) {
  trim();
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int exponent) { return LaurentPoly({c}, exponent); }

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::normalized() const {
  LaurentPoly out = *this;
  out.low_ = 0;
  if (!out.coeffs_.empty() && out.coeffs_.back() < 0) {
    for (auto& c : out.coeffs_) c = -c;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int low = std::min(low_, rhs.low_);
  const int high = std::max(low_ + static_cast<int>(coeffs_.size()), rhs.low_ + static_cast<int>(rhs.coeffs_.size()));
  std::vector<std::int64_t> out(static_cast<std::size_t>(high - low), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + static_cast<std::size_t>(low_ - low)] = coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    auto& slot = out[k + static_cast<std::size_t>(rhs.low_ - low)];
    slot = checked_add(slot, rhs.coeffs_[k]);
  }
  *this = LaurentPoly(std::move(out), low);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  LaurentPoly negated = rhs;
  for (auto& c : negated.coeffs_) c = -c;
  return *this += negated;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(mul(a.coeffs_, b.coeffs_), a.low_ + b.low_);
}

std::int64_t LaurentPoly::evaluate(std::int64_t t) const {
  if (low_ < 0) throw std::domain_error("cannot evaluate negative powers over the integers");
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  for (int k = 0; k < low_; ++k) acc = checked_mul(acc, t);
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(k);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t mag = std::llabs(c);
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(poly_gcd(a.coefficients(), b.coefficients()), 0).normalized();
}

SmithForm smith_normal_form(std::vector<std::vector<std::int64_t>> a, std::size_t columns) {
  const std::size_t rows = a.size();
  std::vector<std::vector<std::int64_t>> v(columns, std::vector<std::int64_t>(columns, 0));
  for (std::size_t k = 0; k < columns; ++k) v[k][k] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  auto col_sub = [&](std::size_t target, std::size_t source, std::int64_t q) {
    for (auto& row : a) row[target] = checked_add(row[target], -checked_mul(q, row[source]));
    for (auto& row : v) row[target] = checked_add(row[target], -checked_mul(q, row[source]));
  };
  auto row_sub = [&](std::size_t target, std::size_t source, std::int64_t q) {
    for (std::size_t j = 0; j < columns; ++j) a[target][j] = checked_add(a[target][j], -checked_mul(q, a[source][j]));
  };

  SmithForm out;
  for (std::size_t t = 0; t < std::min(rows, columns); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    auto bring_min_to_pivot = [&]() -> bool {
      std::size_t bi = rows, bj = columns;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < columns; ++j) {
          if (a[i][j] != 0 && (bi == rows || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return false;
      std::swap(a[t], a[bi]);
      if (bj != t) swap_cols(t, bj);
      return true;
    };
    if (!bring_min_to_pivot()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        row_sub(i, t, a[i][t] / a[t][t]);
        dirty = dirty || a[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (a[t][j] == 0) continue;
        col_sub(j, t, a[t][j] / a[t][t]);
        dirty = dirty || a[t][j] != 0;
      }
      if (dirty) {
        bring_min_to_pivot();
        continue;
      }
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < columns; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      row_sub(t, bad_row, -1);
    }
    out.diagonal.push_back(std::llabs(a[t][t]));
  }
  out.column_transform = std::move(v);
  return out;
}

std::vector<std::vector<std::int64_t>> relation_matrix(const Presentation& pres) {
  pres.validate();
  std::vector<std::vector<std::int64_t>> m;
  for (const Word& r : pres.relators) {
    std::vector<std::int64_t> row(pres.generators.size(), 0);
    for (const Letter& l : r.letters()) row[static_cast<std::size_t>(l.generator)] += l.exponent;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianStructure abelianization(const Presentation& pres) {
  const SmithForm snf = smith_normal_form(relation_matrix(pres), pres.generators.size());
  AbelianStructure out;
  out.free_rank = static_cast<int>(pres.generators.size() - snf.diagonal.size());
  for (auto d : snf.diagonal) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::vector<std::int64_t> abelian_exponents(const Presentation& pres) {
  const std::size_t gens = pres.generators.size();
  const SmithForm snf = smith_normal_form(relation_matrix(pres), gens);
  const bool torsion = std::any_of(snf.diagonal.begin(), snf.diagonal.end(), [](auto d) { return d > 1; });
  if (gens - snf.diagonal.size() != 1 || torsion) {
    throw NotKnotLikeError("abelianization is not infinite cyclic");
  }
  const std::size_t kernel_col = snf.diagonal.size();
  std::vector<std::int64_t> e(gens);
  for (std::size_t g = 0; g < gens; ++g) e[g] = snf.column_transform[g][kernel_col];
  auto first = std::find_if(e.begin(), e.end(), [](auto x) { return x != 0; });
  if (first != e.end() && *first < 0) {
    for (auto& x : e) x = -x;
  }
  return e;
}

LaurentPoly fox_derivative(const Word& w, int generator, const std::vector<std::int64_t>& exponents) {
  LaurentPoly out;
  std::int64_t prefix = 0;
  for (const Letter& l : w.letters()) {
    const std::int64_t e = exponents.at(static_cast<std::size_t>(l.generator));
    if (l.generator == generator) {
      if (l.exponent > 0) {
        out += LaurentPoly::monomial(1, static_cast<int>(prefix));
      } else {
        out -= LaurentPoly::monomial(1, static_cast<int>(prefix - e));
      }
    }
    prefix += l.exponent * e;
  }
  return out;
}

LaurentPoly alexander_polynomial(const Presentation& pres) {
  const std::vector<std::int64_t> e = abelian_exponents(pres);
  const std::size_t gens = pres.generators.size();
  const std::size_t rows = pres.relators.size();
  const std::size_t minor = gens - 1;

  std::vector<std::vector<LaurentPoly>> fox(rows, std::vector<LaurentPoly>(gens));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t g = 0; g < gens; ++g) fox[r][g] = fox_derivative(pres.relators[r], static_cast<int>(g), e);
  }

  // A generator mapping to t^{±1} gives minors equal to Δ up to units; when
  // none does, the gcd over every deleted column is taken.
  std::vector<std::size_t> deleted;
  for (std::size_t g = 0; g < gens; ++g) {
    if (std::llabs(e[g]) == 1) {
      deleted.push_back(g);
      break;
    }
  }
  if (deleted.empty()) {
    for (std::size_t g = 0; g < gens; ++g) deleted.push_back(g);
  }

  LaurentPoly acc;
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(minor, rows)), true);
  if (rows < minor) return LaurentPoly{};
  for (std::size_t skip : deleted) {
    std::vector<bool> choice = pick;
    do {
      std::vector<std::vector<Poly>> m;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!choice[r]) continue;
        int low = 0;
        bool any = false;
        for (std::size_t g = 0; g < gens; ++g) {
          if (g == skip || fox[r][g].is_zero()) continue;
          low = any ? std::min(low, fox[r][g].low_exponent()) : fox[r][g].low_exponent();
          any = true;
        }
        std::vector<Poly> row;
        for (std::size_t g = 0; g < gens; ++g) {
          if (g == skip) continue;
          const LaurentPoly& f = fox[r][g];
          Poly entry;
          if (!f.is_zero()) {
            entry.assign(static_cast<std::size_t>(f.low_exponent() - low), 0);
            entry.insert(entry.end(), f.coefficients().begin(), f.coefficients().end());
          }
          row.push_back(std::move(entry));
        }
        m.push_back(std::move(row));
      }
      acc = gcd(acc, LaurentPoly(determinant(std::move(m)), 0));
    } while (std::prev_permutation(choice.begin(), choice.end()));
  }
  return acc.normalized();
}

}  // namespace perioknot
