#include "perioknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <unordered_map>

namespace perioknot {

namespace {

struct CrossingSeen {
  int over = 0;
  int under = 0;
  int sign = 0;
  bool sign_conflict = false;
};

void validate(const std::vector<Pass>& passes) {
  std::map<int, CrossingSeen> seen;
  for (const Pass& p : passes) {
    if (p.crossing <= 0) {
      throw GaussError("crossing id must be positive, got " + std::to_string(p.crossing));
    }
    if (p.sign != 1 && p.sign != -1) {
      throw GaussError("sign must be +1 or -1 at crossing " + std::to_string(p.crossing));
    }
    auto& s = seen[p.crossing];
    (p.strand == Strand::Over ? s.over : s.under)++;
    if (s.sign == 0) {
      s.sign = p.sign;
    } else if (s.sign != p.sign) {
      s.sign_conflict = true;
    }
  }
  for (const auto& [id, s] : seen) {
    const std::string name = "crossing " + std::to_string(id);
    if (s.over + s.under != 2) {
      throw GaussError(name + " appears " + std::to_string(s.over + s.under) + " times, expected 2");
    }
    if (s.over == 2) throw GaussError(name + " appears twice as Over");
    if (s.under == 2) throw GaussError(name + " appears twice as Under");
    if (s.sign_conflict) throw GaussError("inconsistent signs at " + name);
  }
}

}  // namespace

GaussCode::GaussCode(std::vector<Pass> passes, std::size_t basepoint)
    : passes_(std::move(passes)), basepoint_(basepoint) {
  validate(passes_);
  if (passes_.empty()) {
    basepoint_ = 0;
  } else if (basepoint_ >= passes_.size()) {
    throw GaussError("basepoint out of range");
  }
}

std::vector<Pass> GaussCode::traversal() const {
  std::vector<Pass> out;
  out.reserve(passes_.size());
  for (std::size_t t = 0; t < passes_.size(); ++t) out.push_back(at(t));
  return out;
}

GaussCode GaussCode::rotated(std::size_t offset) const {
  if (passes_.empty()) return *this;
  GaussCode out = *this;
  out.basepoint_ = (basepoint_ + offset) % passes_.size();
  return out;
}

int GaussCode::sign_of(int crossing) const {
  for (const Pass& p : passes_) {
    if (p.crossing == crossing) return p.sign;
  }
  throw std::out_of_range("no crossing " + std::to_string(crossing));
}

std::vector<int> GaussCode::crossing_ids() const {
  std::vector<int> ids;
  for (std::size_t t = 0; t < passes_.size(); ++t) {
    int c = at(t).crossing;
    if (std::find(ids.begin(), ids.end(), c) == ids.end()) ids.push_back(c);
  }
  return ids;
}

GaussCode parse_gauss(std::string_view text) {
  std::vector<Pass> passes;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    Pass pass;
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (kind == 'O') {
      pass.strand = Strand::Over;
    } else if (kind == 'U') {
      pass.strand = Strand::Under;
    } else {
      throw GaussError("expected 'O' or 'U' at position " + std::to_string(i), i);
    }
    ++i;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, pass.crossing);
    if (ec != std::errc{} || ptr == first) {
      throw GaussError("expected crossing number at position " + std::to_string(i), i);
    }
    i = static_cast<std::size_t>(ptr - text.data());
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) {
      throw GaussError("expected '+' or '-' at position " + std::to_string(i), i);
    }
    pass.sign = text[i] == '+' ? 1 : -1;
    ++i;
    if (i < text.size() && !is_sep(text[i])) {
      throw GaussError("expected separator at position " + std::to_string(i), i);
    }
    if (pass.crossing <= 0) {
      throw GaussError("crossing id must be positive at position " + std::to_string(start), start);
    }
    passes.push_back(pass);
  }
  return GaussCode(std::move(passes), 0);
}

int writhe(const GaussCode& code) {
  int total = 0;
  for (const Pass& p : code.passes()) {
    if (p.strand == Strand::Under) total += p.sign;
  }
  return total;
}

GaussCode canonicalize(const GaussCode& code) {
  std::unordered_map<int, int> renumber;
  std::vector<Pass> out = code.traversal();
  for (Pass& p : out) {
    auto [it, inserted] = renumber.try_emplace(p.crossing, static_cast<int>(renumber.size()) + 1);
    p.crossing = it->second;
  }
  return GaussCode(std::move(out), 0);
}

std::string render(const GaussCode& code) {
  std::string out;
  const GaussCode canon = canonicalize(code);
  for (const Pass& p : canon.passes()) {
    if (!out.empty()) out += ' ';
    out += p.strand == Strand::Over ? 'O' : 'U';
    out += std::to_string(p.crossing);
    out += p.sign > 0 ? '+' : '-';
  }
  return out;
}

bool equivalent_up_to_relabeling(const GaussCode& a, const GaussCode& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const GaussCode target = canonicalize(a);
  for (std::size_t r = 0; r < b.size(); ++r) {
    if (canonicalize(b.rotated(r)) == target) return true;
  }
  return false;
}

std::vector<GaussCode> read_gauss_codes(std::istream& in) {
  std::vector<GaussCode> codes;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    codes.push_back(parse_gauss(line));
  }
  return codes;
}

}  // namespace perioknot
