// Command-line driver: builds the configured model, runs the requested
// verification, and emits a deterministic report (text or JSON).
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liecoh/battery.hpp"

using json = nlohmann::ordered_json;
using namespace liecoh;

namespace {

constexpr int kSchemaVersion = 1;

struct Cfg {
  std::string type = "A1";
  std::string levi;    // comma-separated simple-root indices, empty = Borel
  std::string lambda;  // comma-separated rational coordinates
  std::string mu, nu;
  int trunc = 6;
  int degree = 4;  // truncation for the kernel-splitting certificate
  int cap = 400;
  std::string format = "text";
  std::string cache_dir;
  std::string config_file;
  bool timings = false;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ConfigError("invalid rational: " + s);
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

Weight parse_weight(const std::string& s, int rank, const std::string& name) {
  auto parts = split_commas(s);
  if (int(parts.size()) != rank)
    throw ConfigError("--" + name + " needs " + std::to_string(rank) +
                      " coordinates, got '" + s + "'");
  std::vector<Rat> v;
  for (const auto& p : parts) v.push_back(parse_rat(p));
  return Weight(std::move(v));
}

std::set<int> parse_levi(const std::string& s, int rank) {
  std::set<int> out;
  for (const auto& p : split_commas(s)) {
    if (p.empty()) continue;
    size_t pos = 0;
    int i = std::stoi(p, &pos);
    if (pos != p.size() || i < 0 || i >= rank)
      throw ConfigError("invalid Levi index '" + p + "'");
    out.insert(i);
  }
  return out;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w.coords) a.push_back(rat_str(c));
  return a;
}

json weights_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(weight_json(w));
  return a;
}

json eigen_json(const std::vector<GeneralizedEigenvalue>& es) {
  json a = json::array();
  for (const auto& e : es)
    a.push_back({{"value", rat_str(e.value)},
                 {"multiplicity", e.multiplicity},
                 {"max_block", e.max_block}});
  return a;
}

std::string pbw_str(const LieAlgebra& L, const PBWElement& z) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : z.terms) {
    if (c == 0) continue;
    os << (first ? "" : " + ") << "(" << rat_str(c) << ")"
       << monomial_str(L, m);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

struct Check {
  std::string name;
  std::string status;  // pass | fail | not-applicable
  std::string detail;
  json certificate = json::object();
};

Check mk(const std::string& name, bool ok, const std::string& detail,
         json cert = json::object()) {
  return {name, ok ? "pass" : "fail", detail, std::move(cert)};
}

// ---- irrep disk cache -------------------------------------------------

std::string weight_key(const Weight& w) {
  std::string k;
  for (size_t i = 0; i < w.coords.size(); ++i) {
    if (i) k += "_";
    for (char c : rat_str(w.coords[i])) k += (c == '-') ? 'm' : (c == '/') ? 'd' : c;
  }
  return k;
}

json sparse_json(const SpMat& m) {
  json t = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i))
      if (v != 0) t.push_back({i, j, rat_str(v)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", t}};
}

SpMat sparse_from_json(const json& j) {
  SpMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries"))
    m.add(e.at(0).get<int>(), e.at(1).get<int>(),
          parse_rat(e.at(2).get<std::string>()));
  return m;
}

json module_to_json(const WeightedModule& X) {
  json j;
  j["normalization_version"] = 1;
  j["lie_type"] = X.rs->lie_type;
  j["highest_weight"] = weight_json(X.highest_weight);
  j["acting_simples"] = X.acting_simples;
  j["basis_weights"] = weights_json(X.basis_weights);
  for (const char* key : {"E", "F", "H"}) {
    const auto& mats = (*key == 'E') ? X.E : (*key == 'F') ? X.F : X.H;
    json a = json::array();
    for (const auto& m : mats) a.push_back(sparse_json(m));
    j[key] = a;
  }
  return j;
}

WeightedModule module_from_json(const RootSystem& rs, const json& j,
                                const Weight& lambda) {
  if (j.at("normalization_version").get<int>() != 1 ||
      j.at("lie_type").get<std::string>() != rs.lie_type)
    throw std::runtime_error("cache: wrong key");
  WeightedModule X;
  X.rs = &rs;
  X.acting_simples = j.at("acting_simples").get<std::vector<int>>();
  for (const auto& w : j.at("basis_weights")) {
    std::vector<Rat> v;
    for (const auto& c : w) v.push_back(parse_rat(c.get<std::string>()));
    X.basis_weights.push_back(Weight(std::move(v)));
  }
  for (const auto& m : j.at("E")) X.E.push_back(sparse_from_json(m));
  for (const auto& m : j.at("F")) X.F.push_back(sparse_from_json(m));
  for (const auto& m : j.at("H")) X.H.push_back(sparse_from_json(m));
  X.highest_weight = lambda;
  X.verify();
  if (X.basis_weights.empty() || X.basis_weights.front() != lambda)
    throw std::runtime_error("cache: highest weight mismatch");
  return X;
}

// The cache is an optimization only: a stale or corrupt entry falls back to
// a fresh construction, and every loaded module re-passes verify().
WeightedModule cached_irrep(const Cfg& cfg, const RootSystem& rs,
                            const Weight& lambda, std::string* note) {
  if (cfg.cache_dir.empty()) {
    if (note) *note = "disabled";
    return build_irrep(rs, lambda, cfg.cap);
  }
  namespace fs = std::filesystem;
  fs::path path = fs::path(cfg.cache_dir) /
                  ("irrep_" + rs.lie_type + "_" + weight_key(lambda) +
                   "_v1.json");
  try {
    std::ifstream in(path);
    if (in) {
      json j = json::parse(in);
      WeightedModule X = module_from_json(rs, j, lambda);
      if (note) *note = "hit";
      return X;
    }
  } catch (const std::exception&) {
  }
  WeightedModule X = build_irrep(rs, lambda, cfg.cap);
  try {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << module_to_json(X).dump(2) << "\n";
  } catch (const std::exception&) {
  }
  if (note) *note = "miss";
  return X;
}

// ---- report emission --------------------------------------------------

json config_echo(const Cfg& cfg, const std::string& command) {
  json j;
  j["command"] = command;
  j["type"] = cfg.type;
  j["levi"] = cfg.levi;
  if (!cfg.lambda.empty()) j["lambda"] = cfg.lambda;
  if (!cfg.mu.empty()) j["mu"] = cfg.mu;
  if (!cfg.nu.empty()) j["nu"] = cfg.nu;
  j["trunc"] = cfg.trunc;
  j["degree"] = cfg.degree;
  j["cap"] = cfg.cap;
  j["format"] = cfg.format;
  j["cache_dir"] = cfg.cache_dir;
  return j;
}

json sign_convention(std::optional<int> v_sign) {
  json j;
  j["v_sign"] = v_sign ? json(*v_sign) : json(nullptr);
  j["operator_order"] = "wedge letters applied after the enveloping letter";
  j["pbw_blocks"] = "neg-u < levi-neg < cartan < levi-pos < pos-u";
  return j;
}

bool check_ok(const Check& c) { return c.status != "fail"; }

int emit(const Cfg& cfg, const std::string& command,
         const std::vector<Check>& checks, std::optional<int> v_sign,
         double elapsed_ms, const std::string& note = "") {
  bool all = true;
  for (const auto& c : checks) all = all && check_ok(c);
  if (cfg.format == "json") {
    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = command;
    rep["config"] = config_echo(cfg, command);
    rep["sign_convention"] = sign_convention(v_sign);
    if (!note.empty()) rep["model_note"] = note;
    json cs = json::array();
    for (const auto& c : checks)
      cs.push_back({{"name", c.name},
                    {"status", c.status},
                    {"detail", c.detail},
                    {"certificate", c.certificate}});
    rep["checks"] = cs;
    rep["status"] = all ? "pass" : "fail";
    if (cfg.timings) rep["timings"] = {{"total_ms", elapsed_ms}};
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "liecoh report  schema " << kSchemaVersion << "\n";
    std::cout << "command: " << command << "\n";
    std::cout << "config: type=" << cfg.type << " levi={" << cfg.levi << "}";
    if (!cfg.lambda.empty()) std::cout << " lambda=(" << cfg.lambda << ")";
    if (!cfg.mu.empty()) std::cout << " mu=(" << cfg.mu << ")";
    if (!cfg.nu.empty()) std::cout << " nu=(" << cfg.nu << ")";
    std::cout << " trunc=" << cfg.trunc << " cap=" << cfg.cap << "\n";
    std::cout << "sign convention: v_sign="
              << (v_sign ? std::to_string(*v_sign) : std::string("n/a"))
              << "; wedge letters after the enveloping letter; pbw blocks"
                 " neg-u < levi-neg < cartan < levi-pos < pos-u\n";
    if (!note.empty()) std::cout << "note: " << note << "\n";
    std::cout << std::left << std::setw(28) << "check" << std::setw(16)
              << "status" << "detail\n";
    for (const auto& c : checks)
      std::cout << std::left << std::setw(28) << c.name << std::setw(16)
                << c.status << c.detail << "\n";
    std::cout << "overall: " << (all ? "pass" : "fail") << "\n";
    if (cfg.timings)
      std::cout << "elapsed: " << elapsed_ms << " ms\n";
  }
  return all ? 0 : 1;
}

// ---- subcommand handlers ----------------------------------------------

int run_roots(const Cfg& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  ParabolicData pd = build_parabolic(rs, parse_levi(cfg.levi, rs.rank));
  std::vector<Check> cs;
  {
    json cert;
    cert["simple_roots"] = weights_json(rs.simple_roots);
    cert["positive_roots"] = weights_json(rs.positive_roots);
    cert["rho"] = weight_json(rs.rho);
    cert["weyl_order"] = rs.weyl.size();
    cs.push_back(mk("root-system", true,
                    std::to_string(rs.positive_roots.size()) +
                        " positive roots, Weyl order " +
                        std::to_string(rs.weyl.size()),
                    cert));
  }
  {
    json cert;
    cert["u_roots"] = weights_json(pd.u_roots);
    cert["levi_roots"] = weights_json(pd.h_roots);
    cert["rho_u"] = weight_json(pd.rho_u);
    cert["rho_h"] = weight_json(pd.rho_h);
    cs.push_back(mk("parabolic", true,
                    std::to_string(pd.u_roots.size()) +
                        " nilradical roots, " +
                        std::to_string(w1_representatives(pd).size()) +
                        " coset representatives",
                    cert));
  }
  return emit(cfg, "roots", cs, std::nullopt, 0);
}

int run_irrep(const Cfg& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  Weight lam = parse_weight(cfg.lambda, rs.rank, "lambda");
  if (!lam.is_dominant() || !lam.is_integral())
    throw ConfigError("lambda must be dominant integral");
  std::string note;
  WeightedModule X = cached_irrep(cfg, rs, lam, &note);
  std::vector<Check> cs;
  Rat wd = weyl_dimension(rs, lam);
  cs.push_back(mk("dimension", Rat(X.dim()) == wd,
                  "dim " + std::to_string(X.dim()) + ", Weyl formula " +
                      rat_str(wd),
                  {{"dim", X.dim()}}));
  bool idents = true;
  try {
    X.verify();
  } catch (const std::exception&) {
    idents = false;
  }
  cs.push_back(mk("generator-identities", idents,
                  "Chevalley relations on the weight basis"));
  bool chr = X.character() == irreducible_character(rs, lam);
  json cert;
  cert["basis_weights"] = weights_json(X.basis_weights);
  cs.push_back(
      mk("character", chr, "matches the Freudenthal multiplicities", cert));
  cs.push_back(mk("cache", true, note));
  return emit(cfg, "irrep", cs, std::nullopt, 0);
}

int run_kostant(const Cfg& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  ParabolicData pd = build_parabolic(rs, parse_levi(cfg.levi, rs.rank));
  Weight lam = parse_weight(cfg.lambda, rs.rank, "lambda");
  if (!lam.is_dominant() || !lam.is_integral())
    throw ConfigError("lambda must be dominant integral");
  ModelContext mc(rs, pd, cfg.trunc);
  KostantReport rep = kostant_verify(mc, lam, cfg.cap);
  json cert;
  for (int k = 0; k < int(rep.expected.size()); ++k) {
    cert["degree_" + std::to_string(k)] = {
        {"expected", weights_json(rep.expected[k])},
        {"computed", weights_json(rep.computed[k])}};
  }
  std::vector<Check> cs{mk("betti", rep.pass,
                           "computed " + join_ints(rep.betti), cert)};
  return emit(cfg, "kostant", cs, mc.dol.v_sign, 0);
}

int run_casselman_osborne(const Cfg& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  ParabolicData pd = build_parabolic(rs, parse_levi(cfg.levi, rs.rank));
  Weight lam = parse_weight(cfg.lambda, rs.rank, "lambda");
  if (!lam.is_dominant() || !lam.is_integral())
    throw ConfigError("lambda must be dominant integral");
  ModelContext mc(rs, pd, cfg.trunc);
  std::string note;
  WeightedModule X = cached_irrep(cfg, rs, lam, &note);
  CasselmanOsborneReport rep = casselman_osborne_verify(mc, X);
  json cert;
  for (int k = 0; k < int(rep.spectra.size()); ++k)
    cert["degree_" + std::to_string(k)] = eigen_json(rep.spectra[k]);
  std::vector<Check> cs{
      mk("central-action-equality", rep.pass,
         "module-side and Cartan-side actions agree on cohomology", cert),
      mk("cache", true, note)};
  return emit(cfg, "casselman-osborne", cs, mc.dol.v_sign, 0);
}

int run_hodge(const Cfg& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  ParabolicData pd = build_parabolic(rs, parse_levi(cfg.levi, rs.rank));
  ModelContext mc(rs, pd, cfg.trunc);
  PBWElement omega = casimir(mc.ctx);
  HodgeResult hr = hodge_decompose(mc.o, mc.dol.dbar, op_from_pbw(omega));
  PBWElement pom = hc_project(mc.ctx, omega);
  std::vector<Check> cs;
  cs.push_back(mk("central-part", hr.z.terms == pom.terms,
                  "z = " + pbw_str(mc.L, hr.z),
                  {{"z", pbw_str(mc.L, hr.z)},
                   {"steps", hr.certificate.size()}}));
  cs.push_back(mk("residual", hr.residual.is_zero(),
                  "exact remainder after the lift"));
  HodgeSpanReport span = hodge_span_certificate(mc.o, mc.dol.dbar, cfg.degree);
  cs.push_back(mk("kernel-splitting", span.direct_sum,
                  "ker " + std::to_string(span.kernel_dim) + " = z " +
                      std::to_string(span.central_dim) + " + im " +
                      std::to_string(span.image_dim) + " (degree <= " +
                      std::to_string(cfg.degree) + ")",
                  {{"invariant_dim", span.invariant_dim},
                   {"kernel_dim", span.kernel_dim},
                   {"central_dim", span.central_dim},
                   {"image_dim", span.image_dim}}));
  return emit(cfg, "hodge", cs, mc.dol.v_sign, 0);
}

int run_zeta(const Cfg& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  ParabolicData pd = build_parabolic(rs, parse_levi(cfg.levi, rs.rank));
  Weight lam = parse_weight(cfg.lambda, rs.rank, "lambda");
  ModelContext mc(rs, pd, cfg.trunc);
  PBWElement omega = casimir(mc.ctx);
  PBWElement pom = hc_project(mc.ctx, omega);
  Rat scalar = hc_scalar(mc.ctx, omega, lam + rs.rho);
  bool ok = verify_hc_shift(mc.ctx, omega, lam);
  std::vector<Check> cs;
  cs.push_back(mk("projection", true, "p(Omega) = " + pbw_str(mc.L, pom),
                  {{"image", pbw_str(mc.L, pom)}}));
  cs.push_back(mk("half-sum-shift", ok,
                  "scalar " + rat_str(scalar) + " at parameter (" +
                      cfg.lambda + "), constituents shifted by rho(u)",
                  {{"scalar", rat_str(scalar)}}));
  return emit(cfg, "zeta", cs, mc.dol.v_sign, 0);
}

int run_translate(const Cfg& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  ParabolicData pd = build_parabolic(rs, parse_levi(cfg.levi, rs.rank));
  Weight lam = parse_weight(cfg.lambda, rs.rank, "lambda");
  Weight mu = parse_weight(cfg.mu, rs.rank, "mu");
  Weight nu = parse_weight(cfg.nu, rs.rank, "nu");
  if (!lam.is_dominant() || !lam.is_integral())
    throw ConfigError("lambda must be dominant integral");
  if (!nu.is_dominant() || !nu.is_integral())
    throw ConfigError("nu must be dominant integral");
  ModelContext mc(rs, pd, cfg.trunc);
  std::string note;
  WeightedModule X = cached_irrep(cfg, rs, lam, &note);
  WeightedModule E;
  TranslationDatum td;
  try {
    E = levi_highest_module(mc, mu - pd.rho_h, cfg.cap);
    td = split_restriction(mc, mu, nu, cfg.cap);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  TranslationReport rep = verify_translation_theorem(mc, td, E, X);
  std::vector<Check> cs;
  if (rep.status == "not-applicable") {
    json cert;
    cert["singular_witness"] = weights_json(rep.witness);
    cs.push_back({"dominance-condition", "not-applicable",
                  "source parameter more singular than the target", cert});
    return emit(cfg, "translate", cs, mc.dol.v_sign, 0, rep.model_note);
  }
  cs.push_back(mk("dominance-condition", true, "holds"));
  if (rep.status == "refused-collision") {
    cs.push_back(mk("probe-separation", false,
                    "distinct dual orbits share the probe value " +
                        rat_str(rep.chi_source),
                    {{"chi_source", rat_str(rep.chi_source)},
                     {"target_orbit", weight_json(rep.target_orbit)}}));
    return emit(cfg, "translate", cs, mc.dol.v_sign, 0, rep.model_note);
  }
  json betti_cert = {{"big", rep.betti_big},
                     {"target", rep.betti_target},
                     {"quotient", rep.betti_quot}};
  cs.push_back(mk("block-structure", rep.block_ok,
                  "correction vanishes on the top constituent columns"));
  cs.push_back(mk("chain-map", rep.chain_map_ok && rep.injective,
                  "inclusion commutes with the differentials, injective"));
  cs.push_back(mk("long-exact-sequence", rep.les_exact,
                  "snake construction exact at every joint"));
  cs.push_back(mk("connecting-vanishes", rep.connecting_zero,
                  "all connecting maps are zero"));
  cs.push_back(mk("complement-part", rep.quot_dims_ok && rep.lemma12_ok,
                  "quotient cohomology carried entirely off the target orbit"));
  cs.push_back(mk("central-character", rep.central_ok,
                  "single semisimple probe value " + rat_str(rep.chi_source),
                  {{"chi_source", rat_str(rep.chi_source)},
                   {"target_orbit", weight_json(rep.target_orbit)}}));
  cs.push_back(mk("target-isomorphism", rep.primary_iso_ok,
                  std::string(rep.matched ? "matched" : "unmatched") +
                      " run, betti big " + join_ints(rep.betti_big) +
                      " / target " + join_ints(rep.betti_target) +
                      " / quotient " + join_ints(rep.betti_quot),
                  betti_cert));
  cs.push_back(mk("functor-agreement", rep.translate_h_ok,
                  "target part matches the Levi-side translation functor"));
  cs.push_back(mk("cache", true, note));
  return emit(cfg, "translate", cs, mc.dol.v_sign, 0, rep.model_note);
}

int run_suite(const Cfg& cfg) {
  using Fn = BatteryCheck (*)();
  auto wrap_hodge = +[] { return battery_hodge(); };
  std::vector<Fn> fns{battery_d2,
                      battery_kostant,
                      battery_casselman_osborne,
                      wrap_hodge,
                      battery_rho_shift,
                      battery_selectivity,
                      battery_translation,
                      battery_translation_functor};
  auto launch = [&] {
    std::vector<std::future<BatteryCheck>> fut;
    for (Fn f : fns) fut.push_back(std::async(std::launch::async, f));
    std::vector<BatteryCheck> out;
    for (auto& f : fut) out.push_back(f.get());
    return out;
  };
  auto t0 = std::chrono::steady_clock::now();
  std::vector<BatteryCheck> first = launch();
  std::vector<BatteryCheck> second = launch();
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  std::vector<Check> cs;
  for (const auto& b : first) cs.push_back(mk(b.name, b.pass, b.detail));
  bool det = battery_serialize(first) == battery_serialize(second);
  cs.push_back(mk("determinism", det, "two battery runs, byte-compared"));
  return emit(cfg, "suite", cs, std::nullopt, ms);
}

// ---- option plumbing --------------------------------------------------

struct OptRefs {
  std::map<std::string, CLI::Option*> by_key;
};

void add_common(CLI::App* sub, Cfg& cfg, OptRefs& refs, bool needs_lambda,
                bool needs_shift) {
  refs.by_key["type"] = sub->add_option("--type", cfg.type, "Lie type");
  refs.by_key["levi"] =
      sub->add_option("--levi", cfg.levi, "Levi simple-root indices");
  if (needs_lambda)
    refs.by_key["lambda"] =
        sub->add_option("--lambda", cfg.lambda, "weight coordinates");
  if (needs_shift) {
    refs.by_key["mu"] =
        sub->add_option("--mu", cfg.mu, "source infinitesimal character");
    refs.by_key["nu"] =
        sub->add_option("--nu", cfg.nu, "dominant shift weight");
  }
  refs.by_key["trunc"] =
      sub->add_option("--trunc", cfg.trunc, "operator truncation degree");
  refs.by_key["degree"] =
      sub->add_option("--degree", cfg.degree, "certificate degree bound");
  refs.by_key["cap"] = sub->add_option("--cap", cfg.cap, "dimension cap");
  refs.by_key["format"] = sub->add_option("--format", cfg.format,
                                          "output format: text or json");
  refs.by_key["cache_dir"] =
      sub->add_option("--cache-dir", cfg.cache_dir, "module cache directory");
  refs.by_key["timings"] =
      sub->add_flag("--timings", cfg.timings, "include wall-clock timings");
  sub->add_option("--config", cfg.config_file,
                  "JSON file supplying defaults for unset flags");
}

void apply_config_file(Cfg& cfg, const OptRefs& refs) {
  if (cfg.config_file.empty()) return;
  std::ifstream in(cfg.config_file);
  if (!in) throw ConfigError("cannot open config file " + cfg.config_file);
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse: ") + e.what());
  }
  auto unset = [&](const std::string& key) {
    auto it = refs.by_key.find(key);
    return it != refs.by_key.end() && it->second->count() == 0;
  };
  try {
    if (j.contains("type") && unset("type")) cfg.type = j["type"];
    if (j.contains("levi") && unset("levi")) cfg.levi = j["levi"];
    if (j.contains("lambda") && unset("lambda")) cfg.lambda = j["lambda"];
    if (j.contains("mu") && unset("mu")) cfg.mu = j["mu"];
    if (j.contains("nu") && unset("nu")) cfg.nu = j["nu"];
    if (j.contains("trunc") && unset("trunc")) cfg.trunc = j["trunc"];
    if (j.contains("degree") && unset("degree")) cfg.degree = j["degree"];
    if (j.contains("cap") && unset("cap")) cfg.cap = j["cap"];
    if (j.contains("format") && unset("format")) cfg.format = j["format"];
    if (j.contains("cache_dir") && unset("cache_dir"))
      cfg.cache_dir = j["cache_dir"];
    if (j.contains("timings") && unset("timings"))
      cfg.timings = j["timings"];
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config value: ") + e.what());
  }
}

void finalize(Cfg& cfg) {
  if (cfg.cache_dir.empty())
    if (const char* env = std::getenv("LIECOH_CACHE_DIR")) cfg.cache_dir = env;
  if (cfg.format != "text" && cfg.format != "json")
    throw ConfigError("format must be text or json");
  if (cfg.trunc < 2 || cfg.trunc > 8) throw ConfigError("trunc out of range");
  if (cfg.degree < 1 || cfg.degree > 6)
    throw ConfigError("degree out of range");
  if (cfg.cap < 1 || cfg.cap > 5000) throw ConfigError("cap out of range");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for parabolic Dolbeault models"};
  app.require_subcommand(1);

  struct Sub {
    std::string name;
    int (*fn)(const Cfg&);
    bool lambda, shift;
  };
  std::vector<Sub> subs{
      {"roots", run_roots, false, false},
      {"irrep", run_irrep, true, false},
      {"kostant", run_kostant, true, false},
      {"casselman-osborne", run_casselman_osborne, true, false},
      {"hodge", run_hodge, false, false},
      {"zeta", run_zeta, true, false},
      {"translate", run_translate, true, true},
      {"suite", run_suite, false, false},
  };
  std::vector<Cfg> cfgs(subs.size());
  std::vector<OptRefs> refs(subs.size());
  std::vector<CLI::App*> apps;
  for (size_t i = 0; i < subs.size(); ++i) {
    CLI::App* sub = app.add_subcommand(subs[i].name);
    add_common(sub, cfgs[i], refs[i], subs[i].lambda, subs[i].shift);
    apps.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (size_t i = 0; i < subs.size(); ++i) {
    if (!apps[i]->parsed()) continue;
    try {
      apply_config_file(cfgs[i], refs[i]);
      finalize(cfgs[i]);
      if (subs[i].lambda && cfgs[i].lambda.empty())
        throw ConfigError("--lambda is required");
      if (subs[i].shift && (cfgs[i].mu.empty() || cfgs[i].nu.empty()))
        throw ConfigError("--mu and --nu are required");
      return subs[i].fn(cfgs[i]);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    } catch (const std::invalid_argument& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}
