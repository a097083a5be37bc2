#include "perioknot/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace perioknot {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[images_[x]] = static_cast<std::uint8_t>(x);
  return Permutation(std::move(out));
}

int Permutation::order() const {
  int result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<std::uint8_t> out(a.images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = b.images_[a.images_[x]];
  return Permutation(std::move(out));
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(y + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  std::vector<int> cycle;
  bool open = false;
  std::istringstream in(text);
  char c;
  auto close_cycle = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k])] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
    cycle.clear();
  };
  while (in >> c) {
    if (c == '(') {
      if (open) throw std::invalid_argument("nested cycle");
      open = true;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced ')'");
      close_cycle();
      open = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      in.putback(c);
      int point = 0;
      in >> point;
      if (!open || point < 1 || point > degree) throw std::invalid_argument("bad point in cycle notation");
      cycle.push_back(point - 1);
    } else if (c != ',') {
      throw std::invalid_argument("unexpected character in cycle notation");
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");
  return Permutation(std::move(images));
}

SymmetricGroup::SymmetricGroup(int degree) : degree_(degree) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  do {
    elements_.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  const std::size_t order = elements_.size();
  table_.resize(order * order);
  inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      table_[a * order + b] = static_cast<std::uint16_t>(index_of(elements_[a] * elements_[b]));
    }
    inverse_[a] = static_cast<std::uint16_t>(index_of(elements_[a].inverse()));
  }
  std::map<std::vector<std::size_t>, int> class_ids;
  for (std::size_t a = 0; a < order; ++a) {
    const auto [it, fresh] = class_ids.try_emplace(elements_[a].cycle_type(), static_cast<int>(classes_.size()));
    if (fresh) classes_.emplace_back();
    class_of_.push_back(it->second);
    classes_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(a));
  }
}

int SymmetricGroup::index_of(const Permutation& perm) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), perm);
  if (it == elements_.end() || *it != perm) throw std::invalid_argument("permutation of wrong degree");
  return static_cast<int>(it - elements_.begin());
}

const SymmetricGroup& SymmetricGroup::get(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("symmetric group degree must be in 1.." + std::to_string(kMaxDegree));
  }
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxDegree + 1> groups;
  static std::array<std::once_flag, kMaxDegree + 1> flags;
  const auto d = static_cast<std::size_t>(degree);
  std::call_once(flags[d], [&] { groups[d].reset(new SymmetricGroup(degree)); });
  return *groups[d];
}

}  // namespace perioknot
