#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace perioknot {

/// One letter g^e of a free-group word; `generator` indexes the owning
/// presentation's generator list and `exponent` is +1 or -1.
struct Letter {
  int generator = 0;
  int exponent = 1;

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int g, int exponent = 1);

  /// g^k as |k| letters.
  static Word power(int g, int k);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Letter l) { letters_.push_back(l); }

  Word inverse() const;
  int exponent_sum() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// w^k, with negative k meaning powers of the inverse.
  Word pow(int k) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs until none remain. The result is unique.
Word free_reduce(const Word& w);

/// Finitely presented group ⟨generators | relators⟩.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Throws std::invalid_argument if a relator mentions an undeclared
  /// generator or has an exponent other than ±1.
  void validate() const;

  int generator_index(const std::string& name) const;

  bool operator==(const Presentation&) const = default;
};

/// Homomorphism candidate between free groups on two generator sets:
/// `images[g]` is the image word (over the target's generators) of source
/// generator g. `structurally_verified` is set only by constructions that
/// map every source relator onto a target relator letter for letter; other
/// maps are unverified and can only be tested in finite quotients.
struct GeneratorMap {
  std::vector<Word> images;
  std::size_t target_generator_count = 0;
  bool structurally_verified = false;

  /// Substitutes images letter by letter (no reduction).
  Word apply(const Word& w) const;

  bool operator==(const GeneratorMap&) const = default;
};

/// (f ∘ g): first g, then f. Verified only when both are.
GeneratorMap compose(const GeneratorMap& f, const GeneratorMap& g);

/// x ↦ g·f(x)·g^{-1}. Never structurally verified.
GeneratorMap conjugated(const GeneratorMap& f, const Word& g);

/// Human rendering such as "a1_0 a1_2^-1".
std::string to_string(const Word& w, const Presentation& pres);

}  // namespace perioknot
