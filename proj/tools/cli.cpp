#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "invosc/algebra.hpp"
#include "invosc/error.hpp"
#include "invosc/grid.hpp"
#include "invosc/oscillator.hpp"
#include "invosc/susy.hpp"
#include "invosc/verify.hpp"

namespace invosc::cli {

namespace {

using nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridArgs {
  double xmin = -6.0;
  double xmax = 6.0;
  int samples = 601;

  void validate() const {
    if (!std::isfinite(xmin) || !std::isfinite(xmax)) throw ConfigError("x range must be finite");
    if (samples == 1 && xmin == xmax) return;
    if (samples < 2) throw ConfigError("samples must be >= 2 (or 1 with xmin == xmax)");
    if (!(xmin < xmax)) throw ConfigError("xmin must be < xmax");
  }
  std::vector<double> points() const { return linspace(xmin, xmax, samples); }
  void echo(json& j) const {
    j["xmin"] = xmin;
    j["xmax"] = xmax;
    j["samples"] = samples;
  }
};

struct OutputArgs {
  std::string path;
  std::string format = "csv";
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::optional<double> env_tol() {
  const char* s = std::getenv(kTolEnv);
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(kTolEnv) + " must be a positive number, got '" + s + "'");
  }
  return v;
}

json sidecar(const json& config, const Table& t) {
  json j;
  j["version"] = INVOSC_VERSION;
  j["config"] = config;
  j["columns"] = t.columns;
  j["rows"] = t.rows.size();
  const char* env = std::getenv(kTolEnv);
  j[kTolEnv] = env ? json(env) : json(nullptr);
  return j;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_number(r[i]);
    os << '\n';
  }
}

json table_json(const json& config, const Table& t) {
  json j = sidecar(config, t);
  json data = json::object();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    json col = json::array();
    for (const auto& r : t.rows) col.push_back(r[c]);
    data[t.columns[c]] = std::move(col);
  }
  j["data"] = std::move(data);
  return j;
}

void emit(const OutputArgs& o, const json& config, const Table& t, std::ostream& out) {
  std::ostringstream body;
  if (o.format == "json") {
    body << table_json(config, t).dump(2) << '\n';
  } else {
    write_csv(body, t);
  }
  if (o.path.empty()) {
    out << body.str();
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + o.path);
  f << body.str();
  std::ofstream meta(o.path + ".json", std::ios::binary);
  if (!meta) throw ConfigError("cannot open " + o.path + ".json");
  meta << sidecar(config, t).dump(2) << '\n';
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Classification: return kExcludedEps;
    case ErrorKind::SeedZero:
    case ErrorKind::WronskianZero:
    case ErrorKind::WZero: return kSingular;
    case ErrorKind::UnsupportedKind:
    case ErrorKind::InvalidArgument: return kConfig;
    default: return kNumeric;
  }
}

ComboTag combo_or_throw(const std::string& s) {
  auto c = parse_combo(s);
  if (!c) throw ConfigError("unknown combo '" + s + "'");
  return *c;
}

void add_grid(CLI::App* app, GridArgs& g) {
  app->add_option("--xmin", g.xmin, "left end of the grid")->capture_default_str();
  app->add_option("--xmax", g.xmax, "right end of the grid")->capture_default_str();
  app->add_option("--samples", g.samples, "grid points")->capture_default_str();
}

void add_output(CLI::App* app, OutputArgs& o) {
  app->add_option("-o,--out", o.path, "output file (a .json sidecar is written next to it); stdout if absent");
  app->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

// partner and eigenfunction refuse singular potentials before evaluating
void require_regular(const ComplexTransform& T, const GridArgs& g, int scan_samples, std::ostream& err) {
  if (!(g.xmin < g.xmax)) return;
  const SingularityReport r = T.scan(g.xmin, g.xmax, scan_samples);
  if (!r.is_singular) return;
  err << "singular partner potential on [" << g.xmin << ", " << g.xmax << "]:";
  for (const auto& z : r.zeros) err << ' ' << to_string(z.kind) << '@' << format_number(z.location);
  err << '\n';
  throw Error(ErrorKind::WZero, "singularity scan found " + std::to_string(r.zeros.size()) + " zero(s)");
}

struct EvalArgs {
  std::string kind = "inverted";
  std::string combo = "even";
  double energy = 0.0;
  double C = 1.0;
  double D = 0.0;
  GridArgs grid;
  OutputArgs out;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  a.grid.validate();
  const auto kind = parse_oscillator_kind(a.kind);
  if (!kind) throw ConfigError("unknown kind '" + a.kind + "'");
  const ComboTag tag = combo_or_throw(a.combo);
  SolutionSpec spec{*kind, a.energy, tag == ComboTag::General ? Combo::general(a.C, a.D) : Combo::of(tag)};
  spec.validate();
  const auto xs = a.grid.points();
  const auto vs = sample([&](double x) { return evaluate(spec, x).value; }, xs);
  Table t;
  const bool real = spec.is_real();
  t.columns = real ? std::vector<std::string>{"x", "value"} : std::vector<std::string>{"x", "re", "im"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (real) {
      t.rows.push_back({xs[i], vs[i].real()});
    } else {
      t.rows.push_back({xs[i], vs[i].real(), vs[i].imag()});
    }
  }
  json cfg{{"command", "eval"}, {"kind", a.kind}, {"combo", a.combo}, {"energy", a.energy}};
  if (tag == ComboTag::General) {
    cfg["C"] = a.C;
    cfg["D"] = a.D;
  }
  a.grid.echo(cfg);
  cfg["format"] = a.out.format;
  emit(a.out, cfg, t, out);
  return kOk;
}

struct PartnerArgs {
  double eps_re = 1e-5;
  double eps_im = 5.0;
  int scan_samples = 4000;
  GridArgs grid{-10.0, 10.0, 2001};
  OutputArgs out;
};

int cmd_partner(const PartnerArgs& a, std::ostream& out, std::ostream& err) {
  a.grid.validate();
  if (a.scan_samples < 2) throw ConfigError("scan-samples must be >= 2");
  const ComplexTransform T(Complex(a.eps_re, a.eps_im));
  require_regular(T, a.grid, a.scan_samples, err);
  const auto xs = a.grid.points();
  const auto v2 = sample([&](double x) { return T.V2(x); }, xs);
  Table t;
  t.columns = {"x", "V2", "V0"};
  for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], v2[i], inverted_potential(xs[i])});
  json cfg{{"command", "partner"}, {"eps_re", a.eps_re}, {"eps_im", a.eps_im}, {"scan_samples", a.scan_samples}};
  a.grid.echo(cfg);
  cfg["format"] = a.out.format;
  emit(a.out, cfg, t, out);
  return kOk;
}

struct EigenArgs {
  double eps_re = 1e-5;
  double eps_im = 5.0;
  double energy = -2.0;
  std::string combo = "left";
  std::string normalization = "bfactor";
  bool with_psi0 = false;
  int scan_samples = 4000;
  GridArgs grid{-10.0, 10.0, 2001};
  OutputArgs out;
};

int cmd_eigenfunction(const EigenArgs& a, std::ostream& out, std::ostream& err) {
  a.grid.validate();
  if (a.scan_samples < 2) throw ConfigError("scan-samples must be >= 2");
  PartnerEigenfunction p;
  p.eps = Complex(a.eps_re, a.eps_im);
  p.E = a.energy;
  p.base_combo = combo_or_throw(a.combo);
  p.normalization = a.normalization == "raw" ? Normalization::Raw : Normalization::BFactor;
  p.validate();
  const ComplexTransform T(p.eps);
  require_regular(T, a.grid, a.scan_samples, err);
  const Wave base = base_eigenfunction(p);
  const auto xs = a.grid.points();
  const auto psi2 = sample([&](double x) { return transformed_eigenfunction(p, x).value; }, xs);
  std::vector<Complex> psi0;
  if (a.with_psi0) psi0 = sample([&](double x) { return base.value(x); }, xs);
  const bool real = p.base_combo == ComboTag::Left || p.base_combo == ComboTag::Right;
  Table t;
  if (real) {
    t.columns = {"x", "psi2"};
    if (a.with_psi0) t.columns.push_back("psi0");
  } else {
    t.columns = {"x", "psi2_re", "psi2_im"};
    if (a.with_psi0) t.columns.insert(t.columns.end(), {"psi0_re", "psi0_im"});
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<double> r{xs[i], psi2[i].real()};
    if (!real) r.push_back(psi2[i].imag());
    if (a.with_psi0) {
      r.push_back(psi0[i].real());
      if (!real) r.push_back(psi0[i].imag());
    }
    t.rows.push_back(std::move(r));
  }
  json cfg{{"command", "eigenfunction"}, {"eps_re", a.eps_re},       {"eps_im", a.eps_im},
           {"energy", a.energy},         {"combo", a.combo},         {"normalization", a.normalization},
           {"with_psi0", a.with_psi0},   {"scan_samples", a.scan_samples}};
  a.grid.echo(cfg);
  cfg["format"] = a.out.format;
  emit(a.out, cfg, t, out);
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<double> tol;
  std::string json_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw ConfigError("unknown suite '" + a.suite + "'");
  VerifyOptions opt;
  opt.tol = a.tol ? a.tol : env_tol();
  if (opt.tol && !(*opt.tol > 0.0)) throw ConfigError("tol must be > 0");
  const DiagnosticReport rep = verify(*suite, opt);
  const std::string text = rep.to_json(2);
  if (a.json_path.empty()) {
    out << text << '\n';
  } else {
    std::ofstream f(a.json_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + a.json_path);
    f << text << '\n';
    for (const auto& c : rep.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << format_number(c.max_residual) << " / "
          << format_number(c.tol) << '\n';
    }
  }
  return rep.pass() ? kOk : kVerifyFailed;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverted oscillator solutions, complex SUSY partners and their checks"};
  app.set_version_flag("--version", std::string(INVOSC_VERSION));
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate an oscillator solution on a grid");
  eval->add_option("--kind", ev.kind, "harmonic, free or inverted")->capture_default_str();
  eval->add_option("--combo", ev.combo, "even, odd, general, plus, minus, left, right")->capture_default_str();
  eval->add_option("--energy", ev.energy, "energy E")->capture_default_str();
  eval->add_option("--C", ev.C, "even coefficient (general)")->capture_default_str();
  eval->add_option("--D", ev.D, "odd coefficient (general)")->capture_default_str();
  add_grid(eval, ev.grid);
  add_output(eval, ev.out);

  PartnerArgs pa;
  auto* partner = app.add_subcommand("partner", "partner potential V2 of the complex transformation");
  partner->add_option("--eps-re", pa.eps_re, "Re eps")->capture_default_str();
  partner->add_option("--eps-im", pa.eps_im, "Im eps")->capture_default_str();
  partner->add_option("--scan-samples", pa.scan_samples, "singularity scan grid")->capture_default_str();
  add_grid(partner, pa.grid);
  add_output(partner, pa.out);

  EigenArgs ea;
  auto* eig = app.add_subcommand("eigenfunction", "transformed eigenfunction of H2");
  eig->add_option("--eps-re", ea.eps_re, "Re eps")->capture_default_str();
  eig->add_option("--eps-im", ea.eps_im, "Im eps")->capture_default_str();
  eig->add_option("--energy", ea.energy, "energy E")->capture_default_str();
  eig->add_option("--combo", ea.combo, "left, right, plus or minus")->capture_default_str();
  eig->add_option("--normalization", ea.normalization, "raw or bfactor")
      ->check(CLI::IsMember({"raw", "bfactor"}))
      ->capture_default_str();
  eig->add_flag("--with-psi0", ea.with_psi0, "also write the input eigenfunction");
  eig->add_option("--scan-samples", ea.scan_samples, "singularity scan grid")->capture_default_str();
  add_grid(eig, ea.grid);
  add_output(eig, ea.out);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", va.suite, "specfun, oscillator, ladder, susy, algebra or all")->capture_default_str();
  ver->add_option("--tol", va.tol, std::string("tolerance for every check (default: $") + kTolEnv + ")")
      ->check(CLI::PositiveNumber);
  ver->add_option("--json", va.json_path, "write the report here instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForVersion&) {
    out << INVOSC_VERSION << '\n';
    return kOk;
  } catch (const CLI::Success&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "invosc: " << e.what() << '\n';
    return kConfig;
  }

  try {
    if (eval->parsed()) return cmd_eval(ev, out);
    if (partner->parsed()) return cmd_partner(pa, out, err);
    if (eig->parsed()) return cmd_eigenfunction(ea, out, err);
    return cmd_verify(va, out);
  } catch (const ConfigError& e) {
    err << "invosc: config: " << e.what() << '\n';
    return kConfig;
  } catch (const Error& e) {
    err << "invosc: " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "invosc: numeric: " << e.what() << '\n';
    return kNumeric;
  }
}

}  // namespace invosc::cli
