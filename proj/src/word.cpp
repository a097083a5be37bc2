#include "perioknot/word.hpp"

#include <stdexcept>

namespace perioknot {

Word Word::generator(int g, int exponent) { return Word{Letter{g, exponent}}; }

Word Word::power(int g, int k) {
  Word out;
  const int e = k < 0 ? -1 : 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out.letters_.push_back({g, e});
  return out;
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->generator, -it->exponent});
  return out;
}

int Word::exponent_sum() const {
  int total = 0;
  for (const Letter& l : letters_) total += l.exponent;
  return total;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::pow(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().generator == l.generator && stack.back().exponent == -l.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

void Presentation::validate() const {
  const int count = static_cast<int>(generators.size());
  for (const Word& r : relators) {
    for (const Letter& l : r.letters()) {
      if (l.generator < 0 || l.generator >= count) throw std::invalid_argument("relator uses undeclared generator");
      if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("relator exponent must be +1 or -1");
    }
  }
}

int Presentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<int>(i);
  }
  throw std::out_of_range("unknown generator " + name);
}

Word GeneratorMap::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    const Word& image = images.at(static_cast<std::size_t>(l.generator));
    out *= l.exponent > 0 ? image : image.inverse();
  }
  return out;
}

GeneratorMap compose(const GeneratorMap& f, const GeneratorMap& g) {
  GeneratorMap out;
  out.target_generator_count = f.target_generator_count;
  out.structurally_verified = f.structurally_verified && g.structurally_verified;
  out.images.reserve(g.images.size());
  for (const Word& w : g.images) out.images.push_back(f.apply(w));
  return out;
}

GeneratorMap conjugated(const GeneratorMap& f, const Word& g) {
  GeneratorMap out;
  out.target_generator_count = f.target_generator_count;
  const Word g_inv = g.inverse();
  for (const Word& w : f.images) out.images.push_back(g * w * g_inv);
  return out;
}

std::string to_string(const Word& w, const Presentation& pres) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += pres.generators.at(static_cast<std::size_t>(l.generator));
    if (l.exponent < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

}  // namespace perioknot
