#include "perioknot/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "perioknot/algebra.hpp"
#include "perioknot/gauss.hpp"
#include "perioknot/json_io.hpp"
#include "perioknot/periodic.hpp"
#include "perioknot/periods.hpp"
#include "perioknot/wirtinger.hpp"

namespace perioknot {

namespace {

struct Flags {
  std::string inline_input;
  std::string file;
  int p = 0;
  int dmax = 5;
  std::uint64_t budget = 10'000'000;
  bool text = false;
  bool json = false;
  std::uint64_t seed = 1;
  int random_n = 0;
  int r = 0;
  int s = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPeriodicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const Flags& f) {
  const bool has_inline = !f.inline_input.empty();
  const bool has_file = !f.file.empty();
  if (has_inline == has_file) throw UsageError("give exactly one input: an inline code or --file");
  if (has_inline) return f.inline_input;
  std::ifstream in(f.file);
  if (!in) throw UsageError("cannot open " + f.file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GaussCode read_code(const Flags& f) {
  const std::string text = read_input(f);
  if (!f.file.empty()) {
    std::istringstream in(text);
    auto codes = read_gauss_codes(in);
    if (codes.empty()) throw GaussError("no Gauss code in " + f.file);
    return codes.front();
  }
  return parse_gauss(text);
}

PeriodicGaussCode require_periodic(const GaussCode& code, int p) {
  if (p < 2) throw UsageError("--p must be at least 2");
  auto pcode = make_periodic(code, p);
  if (!pcode) throw NotPeriodicError("not " + std::to_string(p) + "-periodic");
  return *pcode;
}

std::string presentation_text(const Presentation& pres) {
  std::string out = "< ";
  for (std::size_t g = 0; g < pres.generators.size(); ++g) out += (g ? ", " : "") + pres.generators[g];
  out += " |";
  for (std::size_t r = 0; r < pres.relators.size(); ++r) out += (r ? ", " : " ") + to_string(pres.relators[r], pres);
  return out + " >";
}

void emit(std::ostream& out, const Flags& f, const Json& json, const std::string& text) {
  if (f.text) {
    out << text << '\n';
  } else {
    out << json.dump(2) << '\n';
  }
}

int cmd_parse(const Flags& f, std::ostream& out) {
  const GaussCode code = read_code(f);
  Json j;
  j["code"] = render(code);
  j["crossings"] = code.crossing_count();
  j["writhe"] = writhe(code);
  emit(out, f, j, render(code));
  return kExitOk;
}

int cmd_present(const Flags& f, std::ostream& out) {
  const GaussCode code = read_code(f);
  Presentation pres;
  PeripheralPair pp;
  Word omega;
  if (f.p != 0) {
    const PeriodicGaussCode pcode = require_periodic(code, f.p);
    pres = periodic_presentation(pcode);
    pp = peripheral_pair(pcode, pres);
    omega = omega_word(pcode);
  } else {
    auto w = presentation(code);
    pres = std::move(w.presentation);
    pp = w.peripheral;
    omega = w.omega;
  }
  Json j;
  j["presentation"] = to_json(pres);
  j["peripheral"] = to_json(pp, pres);
  j["omega"] = word_to_json(omega, pres);
  std::string text = presentation_text(pres) + "\nmeridian: " + to_string(pp.meridian, pres) +
                     "\nomega: " + to_string(omega, pres) + "\nlongitude: " + to_string(pp.longitude, pres);
  emit(out, f, j, text);
  return kExitOk;
}

int cmd_quotient(const Flags& f, std::ostream& out) {
  const PeriodicGaussCode pcode = require_periodic(read_code(f), f.p);
  const VoltageGaussCode q = quotient(pcode);
  std::string text = render(q.base()) + "  p=" + std::to_string(q.p()) + "  voltage:";
  for (const auto& [i, v] : q.voltage()) text += " " + std::to_string(i) + "->" + std::to_string(v);
  emit(out, f, to_json(q), text);
  return kExitOk;
}

int cmd_symmetrize(const Flags& f, std::ostream& out) {
  std::optional<VoltageGaussCode> q;
  if (f.random_n > 0) {
    if (f.p < 2) throw UsageError("--random needs --p >= 2");
    std::mt19937_64 rng(f.seed);
    q = random_voltage_code(f.random_n, f.p, rng);
  } else {
    const std::string text = read_input(f);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw GaussError(std::string("voltage code is not valid JSON: ") + e.what());
    }
    try {
      q = voltage_code_from_json(j);
    } catch (const GaussError&) {
      throw;
    } catch (const std::exception& e) {
      throw GaussError(std::string("invalid voltage code: ") + e.what());
    }
  }
  const PeriodicGaussCode pcode = symmetrize(*q);
  Json j;
  j["p"] = pcode.p();
  j["n"] = pcode.n();
  j["code"] = render(pcode.code());
  j["quotient"] = to_json(*q);
  emit(out, f, j, render(pcode.code()));
  return kExitOk;
}

int cmd_certify(const Flags& f, std::ostream& out) {
  const PeriodicGaussCode pcode = require_periodic(read_code(f), f.p);
  CertifyOptions options;
  options.dmax = f.dmax;
  options.node_budget = f.budget;
  const CertificationReport report = certify(pcode, options);
  const Json j = to_json(report, periodic_presentation(pcode));
  std::string text = "code: " + report.input.code + "\np: " + std::to_string(report.input.p);
  const auto line = [&text](const std::string& name, CheckStatus st, const std::string& extra = "") {
    text += "\n  " + name + ": " + to_string(st) + (extra.empty() ? "" : " (" + extra + ")");
  };
  line("structure", report.structure.status);
  line("phi order", report.phi_order.status, "bound " + std::to_string(report.phi_order.bound));
  line("longitude", report.longitude.status,
       report.longitude.witness ? "witness at degree " + std::to_string(report.longitude.witness->degree) : "");
  line("peripheral conjugacy", report.conjugacy.status);
  line("projection identity", report.projection.status);
  text += "\nverdict: " + report.verdict;
  for (const auto& w : report.warnings) text += "\nwarning: " + w;
  for (const auto& n : report.notes) text += "\nnote: " + n;
  emit(out, f, j, text);
  if (report.any_failed()) return kExitCheckFailed;
  if (report.resource_exhausted()) return kExitResource;
  return kExitOk;
}

int cmd_alexander(const Flags& f, std::ostream& out) {
  const GaussCode code = read_code(f);
  const Presentation pres =
      f.p != 0 ? periodic_presentation(require_periodic(code, f.p)) : presentation(code).presentation;
  const LaurentPoly poly = alexander_polynomial(pres);
  emit(out, f, to_json(poly), poly.to_string());
  return kExitOk;
}

int cmd_torus(const Flags& f, std::ostream& out) {
  const std::set<int> periods = torus_periods(f.r, f.s);
  Json j;
  j["r"] = f.r;
  j["s"] = f.s;
  j["periods"] = periods;
  std::string text;
  for (int p : periods) text += (text.empty() ? "" : " ") + std::to_string(p);
  emit(out, f, j, text);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Periodic virtual knot diagrams: Gauss codes, Wirtinger presentations and finite-quotient checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("code", f.inline_input, "Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");
      sub->add_option("--file", f.file, "Read the input from a file instead");
    }
    auto* text = sub->add_flag("--text", f.text, "Human-readable output");
    sub->add_flag("--json", f.json, "JSON output (default)")->excludes(text);
    sub->add_option("--seed", f.seed, "Seed for randomized generators");
  };

  auto* parse = app.add_subcommand("parse", "Validate and canonicalize a Gauss code");
  add_common(parse, true);

  auto* present = app.add_subcommand("present", "Wirtinger presentation with meridian and longitude");
  add_common(present, true);
  present->add_option("--p", f.p, "Use the p-periodic labeling");

  auto* quot = app.add_subcommand("quotient", "Quotient diagram of a p-periodic code");
  add_common(quot, true);
  quot->add_option("--p", f.p, "Period")->required();

  auto* sym = app.add_subcommand("symmetrize", "p-fold cover of a voltage code given as JSON");
  add_common(sym, true);
  sym->add_option("--random", f.random_n, "Generate a random voltage code with this many crossings");
  sym->add_option("--p", f.p, "Period for --random");

  auto* cert = app.add_subcommand("certify", "Run all periodicity checks");
  add_common(cert, true);
  cert->add_option("--p", f.p, "Period")->required();
  cert->add_option("--dmax", f.dmax, "Largest symmetric-group degree for the oracles")->capture_default_str();
  cert->add_option("--budget", f.budget, "Backtracking node budget per enumeration")->capture_default_str();

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial via Fox calculus");
  add_common(alex, true);
  alex->add_option("--p", f.p, "Use the p-periodic presentation");

  auto* torus = app.add_subcommand("torus", "Periods of the (r, s) torus knot");
  add_common(torus, false);
  torus->add_option("r", f.r)->required();
  torus->add_option("s", f.s)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  if (const char* env = std::getenv("PERIOKNOT_BUDGET")) {
    try {
      f.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "ignoring malformed PERIOKNOT_BUDGET\n";
    }
  }

  try {
    if (parse->parsed()) return cmd_parse(f, out);
    if (present->parsed()) return cmd_present(f, out);
    if (quot->parsed()) return cmd_quotient(f, out);
    if (sym->parsed()) return cmd_symmetrize(f, out);
    if (cert->parsed()) return cmd_certify(f, out);
    if (alex->parsed()) return cmd_alexander(f, out);
    if (torus->parsed()) return cmd_torus(f, out);
  } catch (const GaussError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotPeriodicError& e) {
    err << e.what() << '\n';
    return kExitNotPeriodic;
  } catch (const TorusParameterError& e) {
    err << e.what() << '\n';
    return kExitTorus;
  } catch (const ResourceLimitError& e) {
    err << e.what() << '\n';
    return kExitResource;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace perioknot
