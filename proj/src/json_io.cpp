#include "perioknot/json_io.hpp"

#include <stdexcept>

namespace perioknot {

Json word_to_json(const Word& w, const Presentation& pres) {
  Json out = Json::array();
  for (const Letter& l : w.letters()) out.push_back(Json::array({pres.generators.at(static_cast<std::size_t>(l.generator)), l.exponent}));
  return out;
}

Word word_from_json(const Json& j, const Presentation& pres) {
  Word w;
  for (const auto& letter : j) {
    if (!letter.is_array() || letter.size() != 2) throw std::invalid_argument("letter must be [name, exponent]");
    w.push_back({pres.generator_index(letter.at(0).get<std::string>()), letter.at(1).get<int>()});
  }
  return w;
}

Json to_json(const Presentation& pres) {
  Json out;
  out["generators"] = pres.generators;
  out["relators"] = Json::array();
  for (const Word& r : pres.relators) out["relators"].push_back(word_to_json(r, pres));
  return out;
}

Presentation presentation_from_json(const Json& j) {
  Presentation pres;
  pres.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& r : j.at("relators")) pres.relators.push_back(word_from_json(r, pres));
  pres.validate();
  return pres;
}

Json to_json(const PeripheralPair& pp, const Presentation& pres) {
  Json out;
  out["meridian"] = word_to_json(pp.meridian, pres);
  out["longitude"] = word_to_json(pp.longitude, pres);
  return out;
}

Json to_json(const VoltageGaussCode& q) {
  Json out;
  out["p"] = q.p();
  out["code"] = render(q.base());
  Json voltage = Json::object();
  for (const auto& [i, v] : q.voltage()) voltage[std::to_string(i)] = v;
  out["voltage"] = voltage;
  return out;
}

VoltageGaussCode voltage_code_from_json(const Json& j) {
  std::map<int, int> voltage;
  if (j.contains("voltage")) {
    for (const auto& [key, value] : j.at("voltage").items()) voltage[std::stoi(key)] = value.get<int>();
  }
  return VoltageGaussCode(parse_gauss(j.at("code").get<std::string>()), j.at("p").get<int>(), std::move(voltage));
}

Json to_json(const FiniteHom& h, const Presentation& pres) {
  Json out;
  out["degree"] = h.degree;
  Json images = Json::object();
  for (std::size_t g = 0; g < h.images.size(); ++g) images[pres.generators.at(g)] = h.images[g].cycle_string();
  out["images"] = images;
  return out;
}

Json to_json(const LaurentPoly& poly) {
  Json out;
  out["offset"] = poly.low_exponent();
  out["coefficients"] = poly.coefficients();
  out["text"] = poly.to_string();
  return out;
}

Json to_json(const OrderInfo& info) {
  Json out;
  out["degree"] = info.degree;
  out["homs"] = info.hom_count;
  out["bound"] = info.bound;
  out["certified"] = info.certified;
  out["fixed"] = info.fixed;
  out["orbit_sizes"] = info.orbit_sizes;
  return out;
}

Json to_json(const CertificationReport& report, const Presentation& pres) {
  Json out;
  out["schema"] = "v1";
  out["input"] = {{"code", report.input.code},
                  {"p", report.input.p},
                  {"n", report.input.n},
                  {"crossings", report.input.crossings}};
  out["options"] = {{"dmax", report.options.dmax}, {"budget", report.options.node_budget}};

  const auto& st = report.structure;
  Json checks;
  checks["structure"] = {{"status", to_string(st.status)},
                         {"crossing_count", st.crossing_count},
                         {"rotation_free", st.rotation_free},
                         {"rotation_order", st.rotation_order},
                         {"signs_constant", st.signs_constant}};
  checks["presentation"] = {{"generators", report.presentation.generators},
                            {"relators", report.presentation.relators},
                            {"phi_equivariant", report.presentation.phi_equivariant}};

  const auto& order = report.phi_order;
  Json degrees = Json::array();
  for (const auto& info : order.per_degree) degrees.push_back(to_json(info));
  checks["phi_order"] = {{"status", to_string(order.status)},
                         {"certified", order.certified},
                         {"bound", order.bound},
                         {"certified_degree", order.certified_degree ? Json(*order.certified_degree) : Json(nullptr)},
                         {"per_degree", degrees}};

  const auto& lon = report.longitude;
  checks["longitude"] = {{"status", to_string(lon.status)},
                         {"exponent_sum", lon.exponent_sum},
                         {"witness", lon.witness ? to_json(*lon.witness, pres) : Json(nullptr)}};

  Json conj_rows = Json::array();
  for (const auto& row : report.conjugacy.per_degree) {
    conj_rows.push_back({{"degree", row.degree},
                         {"homs", row.homs},
                         {"passed", row.passed},
                         {"identity_suffices", row.identity_suffices},
                         {"adjusted_identity_suffices", row.adjusted_identity_suffices}});
  }
  checks["peripheral_conjugacy"] = {{"status", to_string(report.conjugacy.status)},
                                    {"orientation_signature", report.conjugacy.orientation_signature},
                                    {"per_degree", conj_rows}};

  const auto& proj = report.projection;
  checks["projection_identity"] = {{"status", to_string(proj.status)},
                                   {"meridian_words", proj.meridian_words},
                                   {"omega_words", proj.omega_words},
                                   {"quotient_matches_diagram", proj.quotient_matches_diagram},
                                   {"finite_quotients", proj.finite_quotients},
                                   {"homs_checked", proj.homs_checked}};

  const auto& q = report.quotient;
  checks["quotient_presentation"] = {{"generators", q.generators},
                                     {"relators", q.relators},
                                     {"diagram", q.voltage_code},
                                     {"alexander", q.alexander ? to_json(*q.alexander) : Json(nullptr)}};
  out["checks"] = checks;
  out["verdict"] = report.verdict;
  out["warnings"] = report.warnings;
  out["notes"] = report.notes;
  return out;
}

}  // namespace perioknot
