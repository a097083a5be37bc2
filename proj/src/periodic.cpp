#include "perioknot/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace perioknot {

namespace {

// Crossing permutation induced by shifting the stored pass sequence, or
// nullopt when the shifted sequence is not a relabeling of the original.
std::optional<std::map<int, int>> shift_relabeling(const GaussCode& code, std::size_t shift) {
  const auto passes = code.passes();
  const std::size_t len = passes.size();
  std::map<int, int> sigma;
  std::map<int, int> inverse;
  for (std::size_t t = 0; t < len; ++t) {
    const Pass& from = passes[t];
    const Pass& to = passes[(t + shift) % len];
    if (from.strand != to.strand || from.sign != to.sign) return std::nullopt;
    auto [it, fresh] = sigma.try_emplace(from.crossing, to.crossing);
    if (!fresh && it->second != to.crossing) return std::nullopt;
    auto [jt, fresh_inv] = inverse.try_emplace(to.crossing, from.crossing);
    if (!fresh_inv && jt->second != from.crossing) return std::nullopt;
  }
  return sigma;
}

std::map<int, int> compose_power(const std::map<int, int>& sigma, int exponent) {
  std::map<int, int> out;
  for (const auto& [x, _] : sigma) {
    int y = x;
    for (int e = 0; e < exponent; ++e) y = sigma.at(y);
    out[x] = y;
  }
  return out;
}

bool is_identity(const std::map<int, int>& sigma) {
  for (const auto& [x, y] : sigma) {
    if (x != y) return false;
  }
  return true;
}

bool has_order_exactly(const std::map<int, int>& sigma, int p) {
  if (!is_identity(compose_power(sigma, p))) return false;
  for (int d = 1; d < p; ++d) {
    if (p % d == 0 && is_identity(compose_power(sigma, d))) return false;
  }
  return true;
}

int inverse_mod(int k, int p) {
  for (int x = 1; x < p; ++x) {
    if ((k * x) % p == 1) return x;
  }
  throw std::logic_error("no inverse mod p");
}

}  // namespace

PeriodicGaussCode::PeriodicGaussCode(GaussCode code, int p, int n, std::map<int, CrossingLabel> labels)
    : code_(std::move(code)), p_(p), n_(n), labels_(std::move(labels)) {
  if (p_ < 2 || n_ < 1) throw std::invalid_argument("periodic code needs p >= 2 and n >= 1");
  const std::size_t count = static_cast<std::size_t>(n_) * static_cast<std::size_t>(p_);
  if (code_.crossing_count() != count || labels_.size() != count) {
    throw std::invalid_argument("periodic code must have n*p crossings");
  }
  under_offsets_.assign(count, 0);
  over_offsets_.assign(count, 0);
  crossing_by_slot_.assign(count, 0);
  auto slot = [&](CrossingLabel l) {
    if (l.i < 1 || l.i > n_ || l.j < 0 || l.j >= p_) throw std::invalid_argument("crossing label out of range");
    return static_cast<std::size_t>(l.j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(l.i - 1);
  };
  std::size_t under_rank = 0;
  for (std::size_t t = 0; t < code_.size(); ++t) {
    const Pass& pass = code_.at(t);
    auto it = labels_.find(pass.crossing);
    if (it == labels_.end()) throw std::invalid_argument("unlabeled crossing " + std::to_string(pass.crossing));
    const std::size_t s = slot(it->second);
    if (pass.strand == Strand::Under) {
      if (s != under_rank) throw std::invalid_argument("Under passes are not in label order from the basepoint");
      under_offsets_[s] = t;
      crossing_by_slot_[s] = pass.crossing;
      ++under_rank;
    } else {
      over_offsets_[s] = t;
    }
  }
  if (code_.at(code_.size() - 1).strand != Strand::Under) {
    throw std::invalid_argument("basepoint must sit at the start of arc a_{1,0}");
  }
  for (int i = 1; i <= n_; ++i) {
    const int s = code_.sign_of(crossing({i, 0}));
    for (int j = 1; j < p_; ++j) {
      if (code_.sign_of(crossing({i, j})) != s) throw std::invalid_argument("sign of c_{i,j} depends on j");
    }
  }
  // Every pass lies on the arc ending at the next Under pass at or after it.
  arc_of_offset_.resize(code_.size());
  std::size_t next = 0;
  for (std::size_t t = 0; t < code_.size(); ++t) {
    while (under_offsets_[next] < t) ++next;
    arc_of_offset_[t] = {static_cast<int>(next % static_cast<std::size_t>(n_)) + 1,
                         static_cast<int>(next / static_cast<std::size_t>(n_))};
  }
}

int PeriodicGaussCode::crossing(CrossingLabel l) const {
  if (l.i < 1 || l.i > n_ || l.j < 0 || l.j >= p_) throw std::out_of_range("no crossing with that label");
  return crossing_by_slot_[static_cast<std::size_t>(l.j * n_ + l.i - 1)];
}

int PeriodicGaussCode::sign(int i) const { return code_.sign_of(crossing({i, 0})); }

std::size_t PeriodicGaussCode::under_offset(CrossingLabel l) const {
  return under_offsets_.at(static_cast<std::size_t>(l.j * n_ + l.i - 1));
}

std::size_t PeriodicGaussCode::over_offset(CrossingLabel l) const {
  return over_offsets_.at(static_cast<std::size_t>(l.j * n_ + l.i - 1));
}

CrossingLabel PeriodicGaussCode::over_arc(CrossingLabel l) const { return arc_at(over_offset(l)); }

CrossingLabel PeriodicGaussCode::arc_at(std::size_t t) const { return arc_of_offset_.at(t); }

VoltageGaussCode::VoltageGaussCode(GaussCode base, int p, std::map<int, int> voltage)
    : base_(base.normalized_storage()), p_(p) {
  if (p_ < 2) throw std::invalid_argument("voltage code needs p >= 2");
  const int n = static_cast<int>(base_.crossing_count());
  if (n < 1) throw std::invalid_argument("voltage code needs at least one crossing");
  int expected = 1;
  for (const Pass& pass : base_.passes()) {
    if (pass.crossing > n) throw std::invalid_argument("voltage code crossings must be numbered 1..n");
    if (pass.strand == Strand::Under) {
      if (pass.crossing != expected) {
        throw std::invalid_argument("voltage code crossings must be numbered by Under-pass order");
      }
      ++expected;
    }
  }
  if (base_.passes().back().strand != Strand::Under) {
    throw std::invalid_argument("voltage code base must end with an Under pass");
  }
  for (int i = 1; i <= n; ++i) voltage_[i] = 0;
  for (const auto& [i, v] : voltage) {
    if (i < 1 || i > n) throw std::invalid_argument("voltage for unknown crossing " + std::to_string(i));
    voltage_[i] = ((v % p_) + p_) % p_;
  }
}

std::optional<PeriodicStructure> detect_periodicity(const GaussCode& code, int p) {
  if (p < 2) throw std::invalid_argument("period must be at least 2");
  const std::size_t crossings = code.crossing_count();
  if (crossings == 0 || crossings % static_cast<std::size_t>(p) != 0) return std::nullopt;
  const int n = static_cast<int>(crossings / static_cast<std::size_t>(p));
  const std::size_t domain = 2 * static_cast<std::size_t>(n);

  for (int k = 1; k < p; ++k) {
    if (std::gcd(k, p) != 1) continue;
    auto sigma = shift_relabeling(code, domain * static_cast<std::size_t>(k));
    if (!sigma) continue;
    bool free = true;
    for (const auto& [x, y] : *sigma) free = free && x != y;
    if (!free || !has_order_exactly(*sigma, p)) continue;
    PeriodicStructure ps;
    ps.p = p;
    ps.n = n;
    ps.shift = domain;
    ps.sigma = compose_power(*sigma, inverse_mod(k, p));
    return ps;
  }
  return std::nullopt;
}

PeriodicGaussCode canonical_labeling(const GaussCode& code, const PeriodicStructure& ps) {
  const std::size_t len = code.size();
  if (ps.p < 2 || ps.n < 1 || code.crossing_count() != static_cast<std::size_t>(ps.n * ps.p) ||
      ps.shift != 2 * static_cast<std::size_t>(ps.n)) {
    throw std::logic_error("periodic structure does not match the code");
  }
  auto sigma = shift_relabeling(code, ps.shift);
  if (!sigma || *sigma != ps.sigma) throw std::logic_error("periodic structure does not match the code");

  std::size_t first_under = 0;
  while (code.at(first_under).strand != Strand::Under) ++first_under;
  std::size_t prev_under = (first_under + len - 1) % len;
  while (code.at(prev_under).strand != Strand::Under) prev_under = (prev_under + len - 1) % len;
  GaussCode rebased = code.rotated((prev_under + 1) % len);

  std::map<int, CrossingLabel> labels;
  int rank = 0;
  for (std::size_t t = 0; t < len; ++t) {
    const Pass& pass = rebased.at(t);
    if (pass.strand != Strand::Under) continue;
    labels[pass.crossing] = {rank % ps.n + 1, rank / ps.n};
    ++rank;
  }
  for (const auto& [x, l] : labels) {
    const CrossingLabel image = labels.at(ps.sigma.at(x));
    if (image.i != l.i || image.j != (l.j + 1) % ps.p) {
      throw std::logic_error("labeling is not equivariant under the rotation");
    }
  }
  return PeriodicGaussCode(std::move(rebased), ps.p, ps.n, std::move(labels));
}

VoltageGaussCode quotient(const PeriodicGaussCode& pcode) {
  const std::size_t domain = 2 * static_cast<std::size_t>(pcode.n());
  std::vector<Pass> base;
  base.reserve(domain);
  for (std::size_t t = 0; t < domain; ++t) {
    Pass pass = pcode.code().at(t);
    pass.crossing = pcode.label(pass.crossing).i;
    base.push_back(pass);
  }
  std::map<int, int> voltage;
  for (int i = 1; i <= pcode.n(); ++i) {
    voltage[i] = pcode.domain_of(pcode.over_offset({i, 0}));
  }
  return VoltageGaussCode(GaussCode(std::move(base), 0), pcode.p(), std::move(voltage));
}

PeriodicGaussCode symmetrize(const VoltageGaussCode& q) {
  const int n = static_cast<int>(q.base().crossing_count());
  const int p = q.p();
  std::vector<Pass> passes;
  passes.reserve(static_cast<std::size_t>(2 * n * p));
  std::map<int, CrossingLabel> labels;
  for (int j = 0; j < p; ++j) {
    for (const Pass& pass : q.base().passes()) {
      const int i = pass.crossing;
      const int owner = pass.strand == Strand::Under ? j : ((j - q.voltage().at(i)) % p + p) % p;
      Pass lifted = pass;
      lifted.crossing = owner * n + i;
      labels[lifted.crossing] = {i, owner};
      passes.push_back(lifted);
    }
  }
  return PeriodicGaussCode(GaussCode(std::move(passes), 0), p, n, std::move(labels));
}

VoltageGaussCode random_voltage_code(int n, int p, std::mt19937_64& rng) {
  if (n < 1 || p < 2) throw std::invalid_argument("random voltage code needs n >= 1 and p >= 2");
  const std::size_t len = 2 * static_cast<std::size_t>(n);
  // The last slot is always an Under pass; pick the other n-1 among the rest.
  std::vector<std::size_t> slots(len - 1);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<bool> under(len, false);
  under[len - 1] = true;
  for (int k = 0; k < n - 1; ++k) under[slots[static_cast<std::size_t>(k)]] = true;

  std::vector<int> over_ids(static_cast<std::size_t>(n));
  std::iota(over_ids.begin(), over_ids.end(), 1);
  std::shuffle(over_ids.begin(), over_ids.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> volt(0, p - 1);
  std::vector<int> signs(static_cast<std::size_t>(n) + 1);
  std::map<int, int> voltage;
  for (int i = 1; i <= n; ++i) {
    signs[static_cast<std::size_t>(i)] = coin(rng) ? 1 : -1;
    voltage[i] = volt(rng);
  }
  std::vector<Pass> passes;
  int next_under = 1;
  std::size_t next_over = 0;
  for (std::size_t t = 0; t < len; ++t) {
    const int id = under[t] ? next_under++ : over_ids[next_over++];
    passes.push_back({id, under[t] ? Strand::Under : Strand::Over, signs[static_cast<std::size_t>(id)]});
  }
  return VoltageGaussCode(GaussCode(std::move(passes), 0), p, std::move(voltage));
}

std::optional<PeriodicGaussCode> make_periodic(const GaussCode& code, int p) {
  auto ps = detect_periodicity(code, p);
  if (!ps) return std::nullopt;
  return canonical_labeling(code, *ps);
}

}  // namespace perioknot
