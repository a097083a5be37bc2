#include "perioknot/periods.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace perioknot {

namespace {

void check_torus(int r, int s) {
  const int ar = std::abs(r);
  const int as = std::abs(s);
  if (ar < 2 || as < 2) throw TorusParameterError("torus knot parameters need |r|, |s| >= 2");
  if (std::gcd(ar, as) != 1) throw TorusParameterError("torus knot parameters must be coprime");
}

Presentation without_trivial_relators(const Presentation& pres) {
  Presentation out;
  out.generators = pres.generators;
  for (const Word& r : pres.relators) {
    if (free_reduce(r).empty()) continue;
    if (std::find(out.relators.begin(), out.relators.end(), r) == out.relators.end()) out.relators.push_back(r);
  }
  return out;
}

// Runs `step`, downgrading an oracle budget overrun to a ResourceLimit status.
CheckStatus guarded(const std::function<CheckStatus()>& step) {
  try {
    return step();
  } catch (const ResourceLimitError&) {
    return CheckStatus::ResourceLimit;
  }
}

}  // namespace

std::set<int> torus_periods(int r, int s) {
  check_torus(r, s);
  std::set<int> out;
  for (int m : {std::abs(r), std::abs(s)}) {
    for (int p = 2; p <= m; ++p) {
      if (m % p == 0) out.insert(p);
    }
  }
  return out;
}

Presentation torus_presentation(int r, int s) {
  check_torus(r, s);
  Presentation pres;
  pres.generators = {"a", "b"};
  pres.relators.push_back(Word::power(0, r) * Word::power(1, -s));
  return pres;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Inconclusive:
      return "inconclusive";
    case CheckStatus::ResourceLimit:
      return "resource_limit";
  }
  return "unknown";
}

bool CertificationReport::any_failed() const {
  for (CheckStatus s : {structure.status, phi_order.status, longitude.status, conjugacy.status, projection.status}) {
    if (s == CheckStatus::Fail) return true;
  }
  return false;
}

bool CertificationReport::resource_exhausted() const {
  for (CheckStatus s : {phi_order.status, longitude.status, conjugacy.status, projection.status}) {
    if (s == CheckStatus::ResourceLimit) return true;
  }
  return false;
}

CertificationReport certify(const PeriodicGaussCode& pcode, const CertifyOptions& options) {
  const int p = pcode.p();
  const int n = pcode.n();
  OracleOptions oracle;
  oracle.node_budget = options.node_budget;
  oracle.workers = options.workers;
  if (options.dmax < 1 || options.dmax > oracle.max_degree) {
    throw std::invalid_argument("dmax must be in 1.." + std::to_string(oracle.max_degree));
  }

  CertificationReport report;
  report.options = options;
  report.input = {render(pcode.code()), p, n, pcode.code().crossing_count()};

  // Structure.
  auto& st = report.structure;
  std::size_t arcs = 0;
  for (const Pass& pass : pcode.code().passes()) arcs += pass.strand == Strand::Under ? 1 : 0;
  st.crossing_count = report.input.crossings == static_cast<std::size_t>(n * p) && arcs == report.input.crossings;
  const auto ps = detect_periodicity(pcode.code(), p);
  st.rotation_free = ps.has_value() && std::all_of(ps->sigma.begin(), ps->sigma.end(),
                                                   [](const auto& kv) { return kv.first != kv.second; });
  st.rotation_order = ps.has_value();
  st.signs_constant = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < p; ++j) st.signs_constant = st.signs_constant && pcode.code().sign_of(pcode.crossing({i, j})) == pcode.sign(i);
  }
  st.status = st.crossing_count && st.rotation_free && st.rotation_order && st.signs_constant ? CheckStatus::Pass
                                                                                              : CheckStatus::Fail;

  const Presentation pres = periodic_presentation(pcode);
  const GeneratorMap phi = induced_automorphism(pcode);
  report.presentation = {pres.generators.size(), pres.relators.size(), phi.structurally_verified};
  if (!phi.structurally_verified) st.status = CheckStatus::Fail;

  // Hom(G_K, S_d) for d = 1..dmax, computed lazily and shared by the oracles.
  std::vector<std::optional<HomList>> hom_cache(static_cast<std::size_t>(options.dmax) + 1);
  auto homs_at = [&](int d) -> const HomList& {
    auto& slot = hom_cache[static_cast<std::size_t>(d)];
    if (!slot) slot = enumerate_hom_list(pres, d, oracle);
    return *slot;
  };

  auto& order = report.phi_order;
  order.status = guarded([&] {
    for (int d = 1; d <= options.dmax; ++d) {
      OrderInfo info = endo_order_bound(homs_at(d), phi, p);
      order.bound = std::max(order.bound, info.bound);
      order.per_degree.push_back(std::move(info));
      if (order.per_degree.back().certified) {
        order.certified = true;
        order.certified_degree = d;
        return CheckStatus::Pass;
      }
    }
    return CheckStatus::Inconclusive;
  });

  const PeripheralPair pp = peripheral_pair(pcode, pres);
  auto& lon = report.longitude;
  lon.exponent_sum = pp.longitude.exponent_sum();
  lon.status = guarded([&] {
    if (lon.exponent_sum != 0) return CheckStatus::Fail;
    for (int d = 1; d <= options.dmax; ++d) {
      const HomList& list = homs_at(d);
      const SymmetricGroup& group = SymmetricGroup::get(d);
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (word_image(group, list.homs[k], pp.longitude) != group.identity()) {
          lon.witness = list.at(k);
          return CheckStatus::Pass;
        }
      }
    }
    return CheckStatus::Inconclusive;
  });

  // φ composed with conjugation by the diagram's transport word should fix
  // μ and λ on the nose in every finite quotient.
  const GeneratorMap adjusted = conjugated(phi, transport_word(pcode));
  auto& conj = report.conjugacy;
  conj.status = guarded([&] {
    bool ok = true;
    for (int d = 1; d <= options.dmax; ++d) {
      const HomList& list = homs_at(d);
      const ConjugacyStatus plain = peripheral_conjugacy_check(list, phi, pp);
      const ConjugacyStatus fixed = peripheral_conjugacy_check(list, adjusted, pp);
      CertificationReport::DegreeConjugacy row;
      row.degree = d;
      row.homs = list.size();
      row.passed = static_cast<std::size_t>(
          std::count_if(plain.per_hom.begin(), plain.per_hom.end(), [](const HomConjugacy& h) { return h.pass; }));
      row.identity_suffices = plain.identity_suffices;
      row.adjusted_identity_suffices = fixed.identity_suffices;
      conj.orientation_signature = conj.orientation_signature && fixed.identity_suffices;
      ok = ok && plain.all_pass && fixed.identity_suffices;
      conj.per_degree.push_back(row);
    }
    return ok ? CheckStatus::Pass : CheckStatus::Fail;
  });

  // Quotient knot and the projection identities.
  const auto [qpres, pi] = quotient_presentation(pres, PeriodicStructure{p, n, 2 * static_cast<std::size_t>(n), {}});
  const VoltageGaussCode vcode = quotient(pcode);
  const WirtingerPresentation star = presentation(vcode.base());
  auto& q = report.quotient;
  q.generators = qpres.generators.size();
  q.relators = qpres.relators.size();
  q.voltage_code = render(vcode.base());
  try {
    q.alexander = alexander_polynomial(qpres);
  } catch (const NotKnotLikeError&) {
  }

  auto& proj = report.projection;
  proj.meridian_words = pi.apply(pp.meridian) == star.peripheral.meridian;
  proj.omega_words = free_reduce(pi.apply(omega_word(pcode))) == free_reduce(star.omega.pow(p));
  proj.quotient_matches_diagram = without_trivial_relators(star.presentation) == qpres;
  const Word pi_lambda = pi.apply(pp.longitude);
  proj.status = guarded([&] {
    for (int d = 1; d <= options.dmax; ++d) {
      const HomList list = enumerate_hom_list(qpres, d, oracle);
      const SymmetricGroup& group = SymmetricGroup::get(d);
      for (const auto& rho : list.homs) {
        const int lambda_star = word_image(group, rho, star.peripheral.longitude);
        const int mu_star = word_image(group, rho, star.peripheral.meridian);
        int lambda_power = group.identity();
        for (int k = 0; k < p; ++k) lambda_power = group.mul(lambda_power, lambda_star);
        const bool commute = group.mul(mu_star, lambda_star) == group.mul(lambda_star, mu_star);
        proj.finite_quotients = proj.finite_quotients && commute && word_image(group, rho, pi_lambda) == lambda_power;
        ++proj.homs_checked;
      }
    }
    const bool ok = proj.meridian_words && proj.omega_words && proj.quotient_matches_diagram && proj.finite_quotients;
    return ok ? CheckStatus::Pass : CheckStatus::Fail;
  });
  if (proj.status == CheckStatus::ResourceLimit &&
      !(proj.meridian_words && proj.omega_words && proj.quotient_matches_diagram)) {
    proj.status = CheckStatus::Fail;
  }

  // Verdict.
  if (report.any_failed()) {
    report.verdict = "inconsistent";
  } else if (report.resource_exhausted()) {
    report.verdict = "incomplete";
    report.warnings.push_back("oracle node budget exhausted; affected checks are inconclusive");
  } else if (lon.status != CheckStatus::Pass || order.status != CheckStatus::Pass) {
    report.verdict = "consistent, hypothesis unverified";
  } else {
    report.verdict = "consistent";
  }
  if (lon.status == CheckStatus::Inconclusive) {
    report.warnings.push_back("hypothesis unverified: no finite quotient up to degree " + std::to_string(options.dmax) +
                              " detects a nontrivial longitude; knots whose group is infinite cyclic have trivial "
                              "longitude and may induce a trivial automorphism");
  }
  if (order.status == CheckStatus::Inconclusive) {
    report.warnings.push_back("order of phi not certified: action on Hom(G, S_d) has order " +
                              std::to_string(order.bound) + " up to degree " + std::to_string(options.dmax));
  }
  if (report.verdict == "consistent") {
    report.notes.push_back("phi has order " + std::to_string(p) +
                           " and preserves the peripheral system up to conjugation");
  }
  if (report.verdict != "inconsistent") {
    report.notes.push_back("if this diagram represents a classical knot then " + std::to_string(p) +
                           " is a classical period");
  }
  return report;
}

}  // namespace perioknot
