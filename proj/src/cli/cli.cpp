#include "curvint/cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "curvint/catalog.hpp"
#include "curvint/cli/report.hpp"
#include "curvint/degree.hpp"
#include "curvint/errors.hpp"

namespace curvint::cli {

namespace {

struct RunConfig {
  std::string surface;
  std::string field;
  std::string grid;
  std::string k = "all";
  std::optional<double> tol;
  std::optional<double> abs_tol;
  int workers = 0;
  std::string out;
  std::string format = "json";
  bool timings = false;
  // milnor
  std::optional<long> d;
  std::string betti;
  bool oriented = true;
  // foliation
  double rank_rel_tol = 1e-8;
  double rank_abs_tol = 1e-10;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("invalid " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty " + what);
  return out;
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Session {
 public:
  Session(RunConfig cfg, std::ostream& out, std::ostream& err)
      : cfg_(std::move(cfg)), out_(out), err_(err) {
    if (cfg_.tol && !(*cfg_.tol > 0.0)) throw UsageError("--tol must be positive");
    if (cfg_.abs_tol && !(*cfg_.abs_tol > 0.0)) throw UsageError("--abs-tol must be positive");
    if (!(cfg_.rank_rel_tol > 0.0) || !(cfg_.rank_abs_tol > 0.0)) {
      throw UsageError("rank tolerances must be positive");
    }
    if (cfg_.workers < 0) throw UsageError("--workers must be non-negative");
    if (cfg_.format != "json" && cfg_.format != "csv") {
      throw UsageError("--format must be json or csv");
    }
  }

  int list();
  int compute();
  int degree();
  int verify();
  int milnor();
  int foliation();

 private:
  const ChartedHypersurface& surface() {
    if (!surface_) {
      if (cfg_.surface.empty()) throw UsageError("--surface is required");
      surface_.emplace(make_surface(cfg_.surface));
    }
    return *surface_;
  }

  const TangentField& field() {
    if (!field_) {
      const auto& s = surface();
      std::string id = cfg_.field;
      if (id.empty()) id = field_ids_for(cfg_.surface).front();
      field_.emplace(make_field(id, cfg_.surface, s));
    }
    return *field_;
  }

  QuadratureGrid grid() {
    const auto& s = surface();
    std::vector<int> counts;
    if (cfg_.grid.empty()) {
      counts.assign(static_cast<size_t>(s.dim()), kDefaultNodesPerCoordinate);
    } else {
      counts = parse_int_list(cfg_.grid, "grid");
      if (counts.size() == 1) counts.assign(static_cast<size_t>(s.dim()), counts.front());
      if (static_cast<int>(counts.size()) != s.dim()) {
        throw UsageError("--grid needs " + std::to_string(s.dim()) + " node counts for " +
                         cfg_.surface);
      }
    }
    for (int c : counts) {
      if (c < 8) throw UsageError("grid node counts must be >= 8");
    }
    return QuadratureGrid(s, counts);
  }

  std::vector<int> ks() {
    if (cfg_.k == "all") return {};
    const auto out = parse_int_list(cfg_.k, "k list");
    for (int k : out) {
      if (k < 0 || k > surface().n()) {
        throw UsageError("k = " + std::to_string(k) + " outside [0, n]");
      }
    }
    return out;
  }

  QuadratureOptions quadrature() const {
    QuadratureOptions q;
    q.workers = cfg_.workers;
    return q;
  }

  FoliationOptions foliation_options() const {
    FoliationOptions f;
    f.rank_rel_tol = cfg_.rank_rel_tol;
    f.rank_abs_tol = cfg_.rank_abs_tol;
    f.workers = cfg_.workers;
    return f;
  }

  Json header() {
    Json j;
    j["surface"] = cfg_.surface;
    return j;
  }

  void add_timings(Json& j, const Json& timings) const {
    j["timings_ms"] = cfg_.timings ? timings : Json(nullptr);
    j["version"] = kVersion;
  }

  void require_json(const char* command) const {
    if (cfg_.format != "json") {
      throw UsageError(std::string("--format csv is only available for verify and compute, not ") +
                       command);
    }
  }

  void emit(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + cfg_.out + "'");
    file << text;
  }

  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<ChartedHypersurface> surface_;
  std::optional<TangentField> field_;
};

int Session::list() {
  std::ostringstream os;
  for (const auto& id : surface_ids()) {
    const auto s = make_surface(id);
    const auto& m = s.metadata();
    os << std::left << std::setw(11) << id << " n=" << s.n() << " dim=" << s.dim()
       << " ambient=" << s.ambient_dim() << " chi=";
    if (m.euler_characteristic) os << *m.euler_characteristic; else os << "?";
    os << " betti=(";
    if (m.betti) {
      for (size_t i = 0; i < m.betti->size(); ++i) os << (i ? "," : "") << (*m.betti)[i];
    }
    os << ") fields=";
    const auto fields = field_ids_for(id);
    for (size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i];
    os << "  " << m.name << "\n";
  }
  emit(os.str());
  return kExitOk;
}

int Session::compute() {
  const auto& s = surface();
  const auto& f = field();
  const auto g = grid();
  std::vector<int> selected = ks();
  const auto start = Clock::now();
  const EtaIntegrals integrals = integrate_eta(s, f, g, quadrature());
  const double ms = elapsed_ms(start);
  if (selected.empty()) {
    for (int k = 0; k <= s.n(); ++k) selected.push_back(k);
  }
  if (cfg_.format == "csv") {
    std::ostringstream os;
    os << "k,integral,error_estimate\n";
    os.precision(17);
    for (int k : selected) {
      const auto& r = integrals.eta[static_cast<size_t>(k)];
      os << k << "," << r.value << "," << r.error_estimate << "\n";
    }
    emit(os.str());
    return kExitOk;
  }
  Json j = header();
  j["field"] = f.id;
  j["n"] = s.n();
  j["grid"] = g.counts();
  j["volume"] = integrals.volume.value;
  Json rows = Json::array();
  for (int k : selected) {
    const auto& r = integrals.eta[static_cast<size_t>(k)];
    Json row;
    row["k"] = k;
    row["integral"] = r.value;
    row["error_estimate"] = r.error_estimate;
    rows.push_back(row);
  }
  j["eta"] = rows;
  add_timings(j, Json{{"integrate", ms}});
  emit(dump_report(j));
  return kExitOk;
}

int Session::degree() {
  require_json("degree");
  const auto& s = surface();
  const auto g = grid();
  const auto start = Clock::now();
  DegreeResult d;
  try {
    d = gauss_degree(s, g, quadrature());
  } catch (const NonIntegerDegree& e) {
    err_ << "curvint: " << e.what() << "\n";
    IntegralResult raw;
    raw.value = e.raw() * sphere_volume(s.n() + 1);
    d = degree_from_integral(raw, s.n());
  }
  Json j = header();
  j["n"] = s.n();
  j["grid"] = g.counts();
  j["degree"] = to_json(d);
  add_timings(j, Json{{"degree", elapsed_ms(start)}});
  emit(dump_report(j));
  return d.valid ? kExitOk : kExitCheckFailed;
}

int Session::verify() {
  const auto& s = surface();
  const auto& f = field();
  const auto g = grid();
  VerifyOptions opts;
  opts.ks = ks();
  opts.quadrature = quadrature();
  if (cfg_.tol) {
    opts.rel_tol = *cfg_.tol;
    opts.abs_tol_factor = *cfg_.tol;
  }
  opts.abs_tol = cfg_.abs_tol;

  const auto start = Clock::now();
  const VerificationReport report = verify_integral_formula(s, f, g, opts);
  const double verify_ms = elapsed_ms(start);

  const auto fol_start = Clock::now();
  const FoliationReport fol = foliation_obstruction_report(s, f, g, g, foliation_options());
  const double fol_ms = elapsed_ms(fol_start);

  std::optional<MilnorReport> mil;
  const auto& betti = s.metadata().betti;
  if (betti) mil = milnor_constraints({report.degree.rounded, *betti, true});

  const bool pass = report.pass && (!mil || mil->all()) && fol.implication_holds.value_or(true);

  if (cfg_.format == "csv") {
    emit(verification_csv(report));
    return pass ? kExitOk : kExitCheckFailed;
  }
  Json j = header();
  j["field"] = f.id;
  j["n"] = s.n();
  j["grid"] = g.counts();
  Json deg = to_json(report.degree);
  j["degree"] = deg;
  Json rows = Json::array();
  for (const auto& row : report.eta) rows.push_back(to_json(row));
  j["eta"] = rows;
  j["milnor"] = mil ? to_json(*mil, *betti) : Json(nullptr);
  j["foliation"] = to_json(fol);
  j["volume"] = report.volume;
  j["tolerances"] = Json{{"abs", report.abs_tol}, {"rel", report.rel_tol}};
  j["pass"] = pass;
  add_timings(j, Json{{"verify", verify_ms}, {"foliation", fol_ms}});
  emit(dump_report(j));
  if (!pass) err_ << "curvint: verification failed for " << cfg_.surface << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int Session::milnor() {
  require_json("milnor");
  MilnorInput input;
  input.oriented = cfg_.oriented;
  Json j;
  if (!cfg_.betti.empty()) {
    input.betti = parse_int_list(cfg_.betti, "betti");
  } else if (!cfg_.surface.empty() && surface().metadata().betti) {
    input.betti = *surface().metadata().betti;
  } else {
    throw UsageError("milnor needs --betti or a --surface with known Betti numbers");
  }
  if (cfg_.d) {
    input.d = *cfg_.d;
  } else if (!cfg_.surface.empty()) {
    const DegreeResult d = gauss_degree(surface(), grid(), quadrature());
    input.d = d.rounded;
    j["surface"] = cfg_.surface;
    j["degree"] = to_json(d);
  } else {
    throw UsageError("milnor needs --d or a --surface to compute the degree on");
  }
  for (int b : input.betti) {
    if (b < 0) throw UsageError("Betti numbers must be non-negative");
  }
  const MilnorReport r = milnor_constraints(input);
  j["milnor"] = to_json(r, input.betti);
  j["version"] = kVersion;
  emit(dump_report(j));
  return r.all() ? kExitOk : kExitCheckFailed;
}

int Session::foliation() {
  require_json("foliation");
  const auto& s = surface();
  const auto& f = field();
  const auto g = grid();
  const auto start = Clock::now();
  const FoliationReport r = foliation_obstruction_report(s, f, g, g, foliation_options());
  Json j = header();
  j["field"] = f.id;
  j["n"] = s.n();
  j["grid"] = g.counts();
  j["foliation"] = to_json(r);
  add_timings(j, Json{{"foliation", elapsed_ms(start)}});
  emit(dump_report(j));
  return r.implication_holds.value_or(true) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Curvature-and-field integral invariants of closed hypersurfaces"};
  app.name(args.empty() ? "curvint" : args.front());
  app.set_config("--config", "", "key=value configuration file; flags take precedence");
  app.add_option("--surface", cfg.surface, "surface identifier (see `list`)");
  app.add_option("--field", cfg.field, "field identifier; defaults to the surface's first field");
  app.add_option("--grid", cfg.grid, "node counts per coordinate, e.g. 48,48,48 (or one value)");
  app.add_option("--k", cfg.k, "eta indices: all or a list such as 0,2");
  app.add_option("--tol", cfg.tol, "relative tolerance (also scales the absolute one)");
  app.add_option("--abs-tol", cfg.abs_tol, "absolute tolerance");
  app.add_option("--workers", cfg.workers, "quadrature worker threads (0: machine default)")
      ->envname("CURVINT_WORKERS");
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_flag("--timings", cfg.timings, "record wall-clock timings in the report");
  app.add_option("--d", cfg.d, "Gauss-map degree (milnor)");
  app.add_option("--betti", cfg.betti, "Betti numbers b0,b1,... (milnor)");
  app.add_option("--oriented", cfg.oriented, "treat M as oriented (milnor, default true)");
  app.add_option("--rank-rel-tol", cfg.rank_rel_tol, "relative singular-value cutoff (foliation)");
  app.add_option("--rank-abs-tol", cfg.rank_abs_tol, "absolute singular-value cutoff (foliation)");

  std::string command;
  for (const char* name : {"list", "compute", "degree", "verify", "milnor", "foliation"}) {
    app.add_subcommand(name)->fallthrough()->callback([&command, name] { command = name; });
  }
  app.get_subcommand("list")->description("list catalog surfaces and fields");
  app.get_subcommand("compute")->description("integrate eta_k over the surface");
  app.get_subcommand("degree")->description("degree of the Gauss map");
  app.get_subcommand("verify")->description("check the eta_k integral formula end to end");
  app.get_subcommand("milnor")->description("Milnor's Betti-number constraints on the degree");
  app.get_subcommand("foliation")->description("integrability and rank of the field's a-matrix");
  app.require_subcommand(1);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("curvint");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Session session(cfg, out, err);
    if (command == "list") return session.list();
    if (command == "compute") return session.compute();
    if (command == "degree") return session.degree();
    if (command == "verify") return session.verify();
    if (command == "milnor") return session.milnor();
    return session.foliation();
  } catch (const UsageError& e) {
    err << "curvint: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonIntegerDegree& e) {
    err << "curvint: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "curvint: evaluation error: " << e.what() << "\n";
    return kExitEvaluationError;
  }
}

}  // namespace curvint::cli
