#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace perioknot {

enum class Strand : std::uint8_t { Over, Under };

/// One passage of the knot through a classical crossing.
struct Pass {
  int crossing = 0;
  Strand strand = Strand::Over;
  int sign = 1;

  bool operator==(const Pass&) const = default;
};

/// Raised for malformed Gauss-code text or codes violating the pass invariants.
/// `position` is the byte offset into the parsed text, or npos for
/// structural errors found after tokenizing.
class GaussError : public std::invalid_argument {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit GaussError(const std::string& what, std::size_t position = npos)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Signed Gauss code of a (virtual) knot diagram.
///
/// Virtual crossings carry no data and are not represented. The pass sequence
/// is cyclic; `basepoint` names the pass where traversal starts. Every
/// crossing id occurs exactly twice, once Over and once Under, with the same
/// sign (the writhe of the crossing). The empty code is the unknot.
class GaussCode {
 public:
  GaussCode() = default;

  /// Validates; throws GaussError on any invariant violation.
  explicit GaussCode(std::vector<Pass> passes, std::size_t basepoint = 0);

  std::span<const Pass> passes() const noexcept { return passes_; }
  std::size_t basepoint() const noexcept { return basepoint_; }
  std::size_t size() const noexcept { return passes_.size(); }
  std::size_t crossing_count() const noexcept { return passes_.size() / 2; }
  bool empty() const noexcept { return passes_.empty(); }

  /// Pass at traversal offset `t` from the basepoint (cyclic).
  const Pass& at(std::size_t t) const { return passes_[(basepoint_ + t) % passes_.size()]; }

  /// Passes listed in traversal order starting at the basepoint.
  std::vector<Pass> traversal() const;

  /// Same cyclic sequence, basepoint moved forward by `offset` passes.
  GaussCode rotated(std::size_t offset) const;

  /// Same cyclic sequence re-stored so that the basepoint is index 0.
  GaussCode normalized_storage() const { return GaussCode(traversal(), 0); }

  int sign_of(int crossing) const;

  /// Crossing ids in order of first appearance from the basepoint.
  std::vector<int> crossing_ids() const;

  bool operator==(const GaussCode&) const = default;

 private:
  std::vector<Pass> passes_;
  std::size_t basepoint_ = 0;
};

GaussCode parse_gauss(std::string_view text);

/// Sum of crossing signs.
int writhe(const GaussCode& code);

/// Canonical text: traversal from the basepoint, crossings renumbered 1..n
/// by first appearance, passes separated by single spaces.
std::string render(const GaussCode& code);

/// The code `render` prints, as a value (basepoint 0, ids 1..n).
GaussCode canonicalize(const GaussCode& code);

/// True when `b` is `a` up to renumbering of crossings and choice of basepoint.
bool equivalent_up_to_relabeling(const GaussCode& a, const GaussCode& b);

/// Reads one code per non-blank line; `#` starts a comment.
std::vector<GaussCode> read_gauss_codes(std::istream& in);

}  // namespace perioknot
