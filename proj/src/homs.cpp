#include "perioknot/homs.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>

namespace perioknot {

namespace {

class HomSearch {
 public:
  HomSearch(const SymmetricGroup& group, const Presentation& pres, std::atomic<std::uint64_t>& nodes,
            std::uint64_t budget)
      : group_(group), nodes_(nodes), budget_(budget) {
    const std::size_t gens = pres.generators.size();
    value_.assign(gens, -1);
    relators_of_.resize(gens);
    for (const Word& r : pres.relators) {
      relators_.push_back(r.letters());
      const std::size_t index = relators_.size() - 1;
      for (const Letter& l : r.letters()) {
        auto& list = relators_of_[static_cast<std::size_t>(l.generator)];
        if (list.empty() || list.back() != index) list.push_back(index);
      }
    }
    link_conjugates();
  }

  /// Propagates from the empty assignment; false on contradiction.
  bool start() {
    std::vector<std::size_t> all(relators_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return propagate(std::move(all));
  }

  /// Next generator to branch on, or -1 when all are assigned. Prefers the
  /// smallest candidate set, then the most relators that would propagate.
  int choose() const {
    int best = -1;
    std::size_t best_size = 0;
    int best_score = -1;
    for (std::size_t g = 0; g < value_.size(); ++g) {
      if (value_[g] >= 0) continue;
      const std::size_t size = candidates(static_cast<int>(g)).size();
      if (best >= 0 && size > best_size) continue;
      const int score = propagation_score(static_cast<int>(g));
      if (best < 0 || size < best_size || score > best_score) {
        best = static_cast<int>(g);
        best_size = size;
        best_score = score;
      }
    }
    return best;
  }

  /// Values worth trying for g: the conjugacy class of an assigned generator
  /// known to be conjugate to g, otherwise the whole group.
  const std::vector<int>& candidates(int g) const {
    for (int h : component_[static_cast<std::size_t>(root_[static_cast<std::size_t>(g)])]) {
      const int v = value_[static_cast<std::size_t>(h)];
      if (v >= 0) return group_.classes()[static_cast<std::size_t>(group_.conjugacy_class(v))];
    }
    return all_;
  }

  /// Explores the subtree where generator g takes `v`.
  void branch(int g, int v) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw ResourceLimitError("homomorphism search exceeded the node budget");
    }
    const std::size_t mark = trail_.size();
    if (assign(g, v) && propagate(relators_of_[static_cast<std::size_t>(g)])) search();
    undo(mark);
  }

  void search() {
    const int g = choose();
    if (g < 0) {
      std::vector<std::uint16_t> hom(value_.size());
      for (std::size_t k = 0; k < value_.size(); ++k) hom[k] = static_cast<std::uint16_t>(value_[k]);
      found_.push_back(std::move(hom));
      return;
    }
    for (int v : candidates(g)) branch(g, v);
  }

  std::vector<std::vector<std::uint16_t>>& found() { return found_; }

 private:
  // Relators of the shape u^-e y^a u^e z^b with |a| = |b| = 1 and a = -b
  // force y and z (or their inverses) to be conjugate, so in S_d their images
  // share a cycle type.
  void link_conjugates() {
    const std::size_t gens = value_.size();
    root_.resize(gens);
    std::iota(root_.begin(), root_.end(), 0);
    const auto find = [&](int x) {
      while (root_[static_cast<std::size_t>(x)] != x) x = root_[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& r : relators_) {
      if (r.size() != 4) continue;
      for (std::size_t k = 0; k < 2; ++k) {
        const Letter& u1 = r[k];
        const Letter& u2 = r[k + 2];
        const Letter& y = r[k + 1];
        const Letter& z = r[(k + 3) % 4];
        if (u1.generator != u2.generator || u1.exponent != -u2.exponent) continue;
        if (y.generator == u1.generator || z.generator == u1.generator) continue;
        if (std::abs(y.exponent) != 1 || y.exponent != -z.exponent) continue;
        const int a = find(y.generator);
        const int b = find(z.generator);
        root_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    component_.assign(gens, {});
    for (std::size_t g = 0; g < gens; ++g) {
      root_[g] = find(static_cast<int>(g));
      component_[static_cast<std::size_t>(root_[g])].push_back(static_cast<int>(g));
    }
    all_.resize(static_cast<std::size_t>(group_.order()));
    std::iota(all_.begin(), all_.end(), 0);
  }

  // Relators that would be left with a single, singly occurring unknown once
  // g is assigned.
  int propagation_score(int g) const {
    int score = 0;
    for (std::size_t r : relators_of_[static_cast<std::size_t>(g)]) {
      int other = -1;
      int occurrences = 0;
      bool viable = true;
      for (const Letter& l : relators_[r]) {
        if (l.generator == g || value_[static_cast<std::size_t>(l.generator)] >= 0) continue;
        if (other >= 0 && l.generator != other) {
          viable = false;
          break;
        }
        other = l.generator;
        ++occurrences;
      }
      if (viable && occurrences == 1) ++score;
    }
    return score;
  }

  bool assign(int g, int v) {
    value_[static_cast<std::size_t>(g)] = v;
    trail_.push_back(g);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  bool propagate(std::vector<std::size_t> queue) {
    while (!queue.empty()) {
      const std::size_t r = queue.back();
      queue.pop_back();
      const auto& letters = relators_[r];
      std::size_t open = letters.size();
      int unassigned = 0;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        if (value_[static_cast<std::size_t>(letters[k].generator)] < 0) {
          ++unassigned;
          open = k;
          if (unassigned > 1) break;
        }
      }
      if (unassigned > 1) continue;
      if (unassigned == 0) {
        if (evaluate(letters, 0, letters.size()) != group_.identity()) return false;
        continue;
      }
      // left * x^e * right = 1  =>  x^e = left^{-1} * right^{-1}
      const int left = evaluate(letters, 0, open);
      const int right = evaluate(letters, open + 1, letters.size());
      int x = group_.mul(group_.inv(left), group_.inv(right));
      if (letters[open].exponent < 0) x = group_.inv(x);
      const int g = letters[open].generator;
      assign(g, x);
      const auto& touched = relators_of_[static_cast<std::size_t>(g)];
      queue.insert(queue.end(), touched.begin(), touched.end());
    }
    return true;
  }

  int evaluate(const std::vector<Letter>& letters, std::size_t from, std::size_t to) const {
    int acc = group_.identity();
    for (std::size_t k = from; k < to; ++k) {
      int v = value_[static_cast<std::size_t>(letters[k].generator)];
      acc = group_.mul(acc, letters[k].exponent > 0 ? v : group_.inv(v));
    }
    return acc;
  }

  const SymmetricGroup& group_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::vector<std::vector<Letter>> relators_;
  std::vector<std::vector<std::size_t>> relators_of_;
  std::vector<int> value_;
  std::vector<int> trail_;
  std::vector<int> root_;
  std::vector<std::vector<int>> component_;
  std::vector<int> all_;
  std::vector<std::vector<std::uint16_t>> found_;
};

int lcm_of_cycles(const std::vector<std::size_t>& target, std::vector<std::size_t>* sizes) {
  std::vector<bool> seen(target.size(), false);
  int order = 1;
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t y = k; !seen[y]; y = target[y]) {
      seen[y] = true;
      ++len;
    }
    sizes->push_back(len);
    order = std::lcm(order, static_cast<int>(len));
  }
  return order;
}

std::vector<std::uint16_t> compose_with(const SymmetricGroup& group, const std::vector<std::uint16_t>& rho,
                                        const GeneratorMap& phi) {
  std::vector<std::uint16_t> out(phi.images.size());
  for (std::size_t g = 0; g < phi.images.size(); ++g) {
    out[g] = static_cast<std::uint16_t>(word_image(group, rho, phi.images[g]));
  }
  return out;
}

}  // namespace

FiniteHom HomList::at(std::size_t k) const {
  const SymmetricGroup& group = SymmetricGroup::get(degree);
  FiniteHom h;
  h.degree = degree;
  for (auto v : homs.at(k)) h.images.push_back(group.element(v));
  return h;
}

HomList enumerate_hom_list(const Presentation& pres, int d, const OracleOptions& options) {
  pres.validate();
  if (d < 1 || d > options.max_degree) {
    throw std::invalid_argument("oracle degree " + std::to_string(d) + " outside 1.." +
                                std::to_string(options.max_degree));
  }
  const SymmetricGroup& group = SymmetricGroup::get(d);
  std::atomic<std::uint64_t> nodes{0};
  HomList out;
  out.degree = d;

  HomSearch root(group, pres, nodes, options.node_budget);
  if (!root.start()) return out;
  const int g0 = root.choose();
  const int workers = std::max(1, options.workers);
  if (g0 < 0 || workers == 1) {
    root.search();
    out.homs = std::move(root.found());
  } else {
    std::vector<HomSearch> parts(static_cast<std::size_t>(workers), root);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> threads;
      for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          try {
            const std::vector<int>& values = parts[static_cast<std::size_t>(w)].candidates(g0);
            for (std::size_t k = static_cast<std::size_t>(w); k < values.size(); k += static_cast<std::size_t>(workers)) {
              parts[static_cast<std::size_t>(w)].branch(g0, values[k]);
            }
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& part : parts) {
      auto& found = part.found();
      out.homs.insert(out.homs.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
  }
  std::sort(out.homs.begin(), out.homs.end());
  return out;
}

std::vector<FiniteHom> enumerate_homs(const Presentation& pres, int d, const OracleOptions& options) {
  const HomList list = enumerate_hom_list(pres, d, options);
  std::vector<FiniteHom> out;
  out.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) out.push_back(list.at(k));
  return out;
}

Permutation word_image(const FiniteHom& h, const Word& w) {
  Permutation acc = Permutation::identity(h.degree);
  for (const Letter& l : w.letters()) {
    const Permutation& x = h.images.at(static_cast<std::size_t>(l.generator));
    acc = acc * (l.exponent > 0 ? x : x.inverse());
  }
  return acc;
}

int word_image(const SymmetricGroup& group, const std::vector<std::uint16_t>& hom, const Word& w) {
  int acc = group.identity();
  for (const Letter& l : w.letters()) {
    const int x = hom.at(static_cast<std::size_t>(l.generator));
    acc = group.mul(acc, l.exponent > 0 ? x : group.inv(x));
  }
  return acc;
}

std::optional<FiniteHom> nontriviality_witness(const Presentation& pres, const Word& w, int dmax,
                                               const OracleOptions& options) {
  for (int d = 1; d <= dmax; ++d) {
    const HomList list = enumerate_hom_list(pres, d, options);
    const SymmetricGroup& group = SymmetricGroup::get(d);
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (word_image(group, list.homs[k], w) != group.identity()) return list.at(k);
    }
  }
  return std::nullopt;
}

OrderInfo endo_order_bound(const HomList& homs, const GeneratorMap& phi, int p) {
  if (p < 1) throw std::invalid_argument("order must be positive");
  const std::size_t gens = phi.images.size();
  GeneratorMap power;
  power.images.reserve(gens);
  for (std::size_t g = 0; g < gens; ++g) power.images.push_back(Word::generator(static_cast<int>(g)));
  for (int k = 0; k < p; ++k) power = compose(phi, power);
  for (std::size_t g = 0; g < gens; ++g) {
    if (free_reduce(power.images[g]) != Word::generator(static_cast<int>(g))) {
      throw std::invalid_argument("phi^p is not the identity on generators");
    }
  }

  const SymmetricGroup& group = SymmetricGroup::get(homs.degree);
  std::vector<std::size_t> target(homs.size());
  for (std::size_t k = 0; k < homs.size(); ++k) {
    auto image = compose_with(group, homs.homs[k], phi);
    auto it = std::lower_bound(homs.homs.begin(), homs.homs.end(), image);
    if (it == homs.homs.end() || *it != image) throw std::logic_error("rho o phi is not in the hom list");
    target[k] = static_cast<std::size_t>(it - homs.homs.begin());
  }
  OrderInfo info;
  info.degree = homs.degree;
  info.hom_count = homs.size();
  info.bound = lcm_of_cycles(target, &info.orbit_sizes);
  info.fixed = static_cast<std::size_t>(std::count(info.orbit_sizes.begin(), info.orbit_sizes.end(), 1));
  std::sort(info.orbit_sizes.rbegin(), info.orbit_sizes.rend());
  info.certified = info.bound == p;
  return info;
}

OrderInfo endo_order_bound(const Presentation& pres, const GeneratorMap& phi, int p, int d,
                           const OracleOptions& options) {
  return endo_order_bound(enumerate_hom_list(pres, d, options), phi, p);
}

ConjugacyStatus peripheral_conjugacy_check(const HomList& homs, const GeneratorMap& phi, const PeripheralPair& pp) {
  const SymmetricGroup& group = SymmetricGroup::get(homs.degree);
  const Word phi_mu = phi.apply(pp.meridian);
  const Word phi_lambda = phi.apply(pp.longitude);
  ConjugacyStatus status;
  status.degree = homs.degree;
  status.per_hom.reserve(homs.size());
  for (const auto& rho : homs.homs) {
    const int mu = word_image(group, rho, pp.meridian);
    const int lambda = word_image(group, rho, pp.longitude);
    const int mu2 = word_image(group, rho, phi_mu);
    const int lambda2 = word_image(group, rho, phi_lambda);
    if (mu != mu2 || lambda != lambda2) status.identity_suffices = false;
    HomConjugacy result;
    for (int s = 0; s < group.order(); ++s) {
      const int s_inv = group.inv(s);
      if (group.mul(group.mul(s, mu), s_inv) == mu2 && group.mul(group.mul(s, lambda), s_inv) == lambda2) {
        result.pass = true;
        result.conjugator = group.element(s);
        break;
      }
    }
    status.all_pass = status.all_pass && result.pass;
    status.per_hom.push_back(std::move(result));
  }
  return status;
}

ConjugacyStatus peripheral_conjugacy_check(const Presentation& pres, const GeneratorMap& phi,
                                           const PeripheralPair& pp, int d, const OracleOptions& options) {
  return peripheral_conjugacy_check(enumerate_hom_list(pres, d, options), phi, pp);
}

}  // namespace perioknot
