#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parking/json_io.hpp"

using namespace parking;

namespace {

constexpr int kOk = 0;
constexpr int kOperational = 1;
constexpr int kMismatch = 2;
constexpr int kUsage = 64;

int log_level() {
  const char* v = std::getenv("PARK_LOG");
  if (!v) return 1;
  std::string s(v);
  if (s == "quiet" || s == "0") return 0;
  if (s == "debug" || s == "3") return 3;
  if (s == "info" || s == "2") return 2;
  return 1;
}

void log(int level, const std::string& msg) {
  if (level <= log_level()) std::cerr << "[parking] " << msg << "\n";
}

struct Options {
  std::string group;
  int k = 1;
  bool k_given = false;
  std::uint64_t seed = 1;
  int threads = 0;
  double tol_track = 1e-8;
  double tol_match = 1e-8;
  std::string out;
  std::string format;
  std::string theta, from, to, trace;
  int steps = 200;
  std::string source = "park", target = "locus";
  bool diagonal = false;
};

struct Report {
  Json doc;
  int code = kOk;
  std::optional<std::string> table;  // replaces the generic rendering
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

ReflectionGroup group_from(const std::string& spec) {
  if (spec.empty()) throw UsageError("--group is required");
  try {
    return ReflectionGroup::build(GroupSpec::parse(spec));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --group: ") + e.what());
  }
}

TrackerConfig tracker(const Options& o) {
  TrackerConfig cfg;
  cfg.tol_track = o.tol_track;
  cfg.tol_match = o.tol_match;
  cfg.seed = o.seed;
  return cfg;
}

Json read_json(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool flat_object(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [_, x] : v.items())
    if (x.is_structured()) return false;
  return true;
}

std::string render_table(const Json& doc) {
  std::ostringstream os;
  for (const auto& [key, v] : doc.items())
    if (!v.is_structured()) os << key << ": " << scalar(v) << "\n";
  for (const auto& [key, v] : doc.items()) {
    if (!v.is_structured()) continue;
    if (v.is_array() && !v.empty() && flat_object(v.front())) {
      os << "\n" << key << "\n";
      bool first = true;
      for (const auto& row : v) {
        if (first) {
          for (const auto& [c, _] : row.items()) os << c << "\t";
          os << "\n";
          first = false;
        }
        for (const auto& [_, x] : row.items()) os << scalar(x) << "\t";
        os << "\n";
      }
    } else if (v.is_object() && flat_object(v)) {
      os << "\n" << key << "\n";
      for (const auto& [c, x] : v.items()) os << "  " << c << ": " << scalar(x) << "\n";
    } else {
      os << key << ": " << v.size() << " entries (use --format json)\n";
    }
  }
  return os.str();
}

Json labeled_to_json(const LabeledNCPartition& x) {
  return Json{{"pi", x.pi}, {"labels", x.labels}};
}

// ---- subcommands ----

Report group_info(const Options& o) {
  auto g = group_from(o.group);
  return {group_to_json(g)};
}

Report nc_enumerate(const Options& o) {
  auto g = group_from(o.group);
  auto chains = enumerate_nck(g, o.k);
  Report r{chains_to_json(g, o.k, chains)};
  r.doc["fuss_catalan"] = fuss_catalan(g, o.k);
  if (static_cast<long>(chains.size()) != fuss_catalan(g, o.k)) r.code = kMismatch;
  return r;
}

Report park_enumerate(const Options& o) {
  auto g = group_from(o.group);
  ParkSpace park(g, o.k);
  Report r{park_to_json(park)};
  if (g.family() == Family::A) {
    Json labeled = Json::array();
    for (std::size_t i = 0; i < park.size(); ++i) labeled.push_back(labeled_to_json(to_labeled_model(park, i)));
    r.doc["labeled"] = labeled;
  }
  return r;
}

Report verify(const Options& o, const std::string& which) {
  auto g = group_from(o.group);
  if (which == "weak") {
    auto rep = verify_weak(g, o.k);
    return {character_report_to_json(g, rep), rep.pass ? kOk : kMismatch};
  }
  if (which == "csp") {
    auto rep = verify_csp(g, o.k);
    Report r{csp_report_to_json(rep), rep.pass ? kOk : kMismatch};
    r.doc["group"] = g.spec().str();
    r.doc["k"] = o.k;
    return r;
  }
  auto rep = verify_kreweras(g);
  return {kreweras_report_to_json(g, rep), rep.pass ? kOk : kMismatch};
}

Report hsop_dim(const Options& o) {
  auto g = group_from(o.group);
  auto space = hom_basis_bruteforce(g, o.k);
  Report r;
  r.doc["schema_version"] = kSchemaVersion;
  r.doc["kind"] = "hsop_dim";
  r.doc["group"] = g.spec().str();
  r.doc["k"] = o.k;
  r.doc["degree"] = space.degree;
  r.doc["dim"] = space.dim;
  r.doc["formula"] = hom_dim_formula(g, o.k);
  r.doc["corrected_formula"] = hom_dim_corrected(g, o.k);
  r.doc["character"] = hom_dim_character(g, o.k);
  r.table = std::to_string(space.dim) + "\n";
  if (space.dim != hom_dim_formula(g, o.k)) {
    log(1, "linear-algebra dimension " + std::to_string(space.dim) + " differs from the closed formula " +
               std::to_string(hom_dim_formula(g, o.k)));
    r.code = kMismatch;
  }
  return r;
}

Report hsop_basis(const Options& o) {
  auto g = group_from(o.group);
  auto space = hom_basis_bruteforce(g, o.k);
  Report r;
  r.doc["schema_version"] = kSchemaVersion;
  r.doc["kind"] = "hsop_basis";
  r.doc["group"] = g.spec().str();
  r.doc["k"] = o.k;
  r.doc["degree"] = space.degree;
  r.doc["dim"] = space.dim;
  Json basis = Json::array();
  for (const auto& b : space.basis) basis.push_back(theta_to_json(b, g.spec(), o.k, 0)["coords"]);
  r.doc["basis"] = basis;
  return r;
}

Report hsop_sample(const Options& o) {
  auto g = group_from(o.group);
  auto theta = sample_theta(hom_basis_bruteforce(g, o.k), o.seed);
  return {theta_to_json(theta, g.spec(), o.k, o.seed)};
}

struct SolvedLocus {
  PolynomialMap theta;
  LocusSolution sol;
  bool ok = false;
};

SolvedLocus solve_locus(const ReflectionGroup& g, const PolynomialMap& theta, int k, const TrackerConfig& cfg,
                        const std::string& ref) {
  SolvedLocus s{theta, solve_homotopy(g, theta, k, cfg)};
  s.sol.theta_ref = ref;
  log(2, "tracked " + std::to_string(s.sol.size()) + " of " + std::to_string(s.sol.expected) + " points");
  if (!s.sol.certified) {
    log(1, "locus not certified: " + s.sol.failure);
    return s;
  }
  s.ok = build_action_table(g, s.sol, cfg);
  if (!s.ok) log(1, "action table does not close");
  return s;
}

Report locus_solve(const Options& o) {
  std::optional<ReflectionGroup> g;
  SolvedLocus s;
  TrackerConfig cfg = tracker(o);
  if (o.diagonal) {
    g.emplace(group_from(o.group));
    s.sol = solve_diagonal(*g, o.k);
    s.sol.theta_ref = "diagonal";
    s.ok = s.sol.certified && build_action_table(*g, s.sol, cfg);
  } else {
    Json t = read_json(o.theta, "--theta");
    g.emplace(ReflectionGroup::build(theta_group(t)));
    int k = o.k_given ? o.k : theta_k(t);
    s = solve_locus(*g, theta_from_json(t), k, cfg, o.theta);
  }
  Report r{locus_to_json(*g, s.sol)};
  bool character = false;
  if (s.ok) character = compare_with_prediction(locus_gset(*g, s.sol)).pass;
  r.doc["character_matches"] = character;
  r.code = s.ok && character ? kOk : kMismatch;
  return r;
}

// per path: uint64 count, then count * dim complex coordinates as float64 (re, im); header uint64 paths, dim
void write_traces(const std::string& path, const std::vector<std::vector<CVec>>& traces) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  auto u64 = [&](std::uint64_t v) { f.write(reinterpret_cast<const char*>(&v), sizeof v); };
  u64(traces.size());
  u64(traces.empty() || traces.front().empty() ? 0 : traces.front().front().size());
  for (const auto& t : traces) {
    u64(t.size());
    for (const auto& x : t)
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        double re = x(i).real(), im = x(i).imag();
        f.write(reinterpret_cast<const char*>(&re), sizeof re);
        f.write(reinterpret_cast<const char*>(&im), sizeof im);
      }
  }
}

Report locus_transport(const Options& o) {
  Json a = read_json(o.from, "--from"), b = read_json(o.to, "--to");
  if (theta_group(a).str() != theta_group(b).str() || theta_k(a) != theta_k(b))
    throw UsageError("--from and --to must share group and k");
  auto g = ReflectionGroup::build(theta_group(a));
  const int k = theta_k(a);
  TrackerConfig cfg = tracker(o);
  auto s0 = solve_locus(g, theta_from_json(a), k, cfg, o.from);
  auto s1 = solve_locus(g, theta_from_json(b), k, cfg, o.to);
  Report r;
  if (!s0.ok || !s1.ok) {
    r.doc["schema_version"] = kSchemaVersion;
    r.doc["kind"] = "transport";
    r.doc["success"] = false;
    r.doc["failure"] = "endpoint locus not certified";
    r.code = kMismatch;
    return r;
  }
  cfg.record_traces = !o.trace.empty();
  auto t = transport_action(g, s0.theta, s0.sol, s1.theta, s1.sol, o.steps, cfg);
  if (!o.trace.empty()) write_traces(o.trace, t.traces);
  r.doc = transport_to_json(t);
  r.doc["group"] = g.spec().str();
  r.doc["k"] = k;
  r.doc["steps"] = o.steps;
  r.code = t.success && t.equivariant && t.profiles_match ? kOk : kMismatch;
  return r;
}

// keeps the models alive for the GSets that point into them
struct Model {
  std::optional<ParkSpace> park;
  std::optional<LabeledModel> labeled;
  SolvedLocus locus;
  GSet set;
};

void build_model(Model& m, const std::string& name, const ReflectionGroup& g, const Options& o) {
  if (name == "park") {
    m.park.emplace(g, o.k);
    m.set = m.park->to_gset();
  } else if (name == "labeled") {
    if (g.family() != Family::A) throw UsageError("the labeled model exists for type A only");
    m.labeled.emplace(g, o.k);
    m.set = m.labeled->to_gset();
  } else if (name == "locus") {
    TrackerConfig cfg = tracker(o);
    if (!o.theta.empty()) {
      Json t = read_json(o.theta, "--theta");
      if (theta_group(t).str() != g.spec().str() || theta_k(t) != o.k)
        throw UsageError("--theta does not match --group/--k");
      m.locus = solve_locus(g, theta_from_json(t), o.k, cfg, o.theta);
    } else {
      auto theta = sample_theta(hom_basis_bruteforce(g, o.k), o.seed);
      m.locus = solve_locus(g, theta, o.k, cfg, "seed:" + std::to_string(o.seed));
    }
    if (!m.locus.ok) throw std::runtime_error("locus could not be certified: " + m.locus.sol.failure);
    m.set = locus_gset(g, m.locus.sol);
  } else {
    throw UsageError("unknown model '" + name + "' (park, labeled, locus)");
  }
}

Report sieve_bijection(const Options& o) {
  auto g = group_from(o.group);
  Model src, dst;
  build_model(src, o.source, g, o);
  build_model(dst, o.target, g, o);
  auto b = build_equivariant_bijection(src.set, dst.set);
  Report r{bijection_to_json(src.set, b), b.success ? kOk : kMismatch};
  r.doc["group"] = g.spec().str();
  r.doc["k"] = o.k;
  r.doc["source"] = o.source;
  r.doc["target"] = o.target;
  return r;
}

Report conjecture_intermediate(const Options& o) {
  auto g = group_from(o.group);
  TrackerConfig cfg = tracker(o);
  auto theta = sample_theta(hom_basis_bruteforce(g, o.k), o.seed);
  auto s = solve_locus(g, theta, o.k, cfg, "seed:" + std::to_string(o.seed));
  Report r;
  Json& j = r.doc;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "intermediate";
  j["group"] = g.spec().str();
  j["k"] = o.k;
  j["seed"] = o.seed;
  j["points"] = s.sol.size();
  j["expected"] = s.sol.expected;
  j["certified"] = s.sol.certified;
  j["max_residual"] = s.sol.max_residual;
  j["min_sigma"] = s.sol.min_sigma;
  j["action_closed"] = s.ok;
  if (!s.ok) {
    j["failure"] = s.sol.failure.empty() ? "action table does not close" : s.sol.failure;
    r.code = kMismatch;
    return r;
  }
  GSet locus = locus_gset(g, s.sol);
  ParkSpace park(g, o.k);
  GSet ps = park.to_gset();
  auto character = compare_with_prediction(locus);
  j["character_matches"] = character.pass;
  auto b = build_equivariant_bijection(ps, locus);
  Json orbits = Json::array();
  for (const auto& orb : b.orbits)
    orbits.push_back(Json{{"park", orb.s0},
                          {"point", orb.t0},
                          {"size", orb.size},
                          {"stabilizer", descriptor_to_json(g, stabilizer_of_park(park, ps, orb.s0))}});
  j["bijection"] = bijection_to_json(ps, b);
  j["orbit_descriptors"] = orbits;
  r.code = character.pass && b.success ? kOk : kMismatch;
  return r;
}

void emit(const Report& r, const Options& o) {
  std::string format = o.format.empty() ? (o.out.empty() ? "table" : "json") : o.format;
  std::string text = format == "json" ? r.doc.dump(2) + "\n" : (r.table ? *r.table : render_table(r.doc));
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
  log(2, "wrote " + o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parking spaces and parking loci of reflection groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--group", o.group, "A<letters>, B<n>, D<n> or I2:<m>");
    c->add_option("--k", o.k, "Fuss parameter")->check(CLI::PositiveNumber)->each([&](const std::string&) {
      o.k_given = true;
    });
    c->add_option("--seed", o.seed, "seed for every random choice");
    c->add_option("--threads", o.threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    c->add_option("--tol-track", o.tol_track, "path tracking tolerance")->check(CLI::PositiveNumber);
    c->add_option("--tol-match", o.tol_match, "point identification tolerance")->check(CLI::PositiveNumber);
    c->add_option("--out", o.out, "write the report here");
    c->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    return c;
  };

  std::string chosen;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* c = common(parent->add_subcommand(name, help));
    c->callback([&chosen, parent, name] { chosen = parent->get_name() + " " + name; });
    return c;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->require_subcommand(1);
    return c;
  };

  auto* g_group = group("group", "reflection group data");
  leaf(g_group, "info", "elements, reflections, degrees, flats");
  auto* g_nc = group("nc", "noncrossing multichains");
  leaf(g_nc, "enumerate", "list NC^k(W)");
  auto* g_park = group("park", "noncrossing parking space");
  leaf(g_park, "enumerate", "list Park(k)");
  auto* g_verify = group("verify", "exact verifications");
  for (const char* w : {"weak", "csp", "kreweras"}) leaf(g_verify, w, std::string("verify ") + w);
  auto* g_hsop = group("hsop", "equivariant maps of degree kh+1");
  leaf(g_hsop, "dim", "dimension of the space of maps");
  leaf(g_hsop, "basis", "a basis of the space of maps");
  leaf(g_hsop, "sample", "a random map from the space");
  auto* g_locus = group("locus", "parking loci");
  auto* solve = leaf(g_locus, "solve", "solve Theta(x) = x");
  solve->add_option("--theta", o.theta, "theta document from hsop sample");
  solve->add_flag("--diagonal", o.diagonal, "use the diagonal map of --group in closed form");
  auto* transport = leaf(g_locus, "transport", "transport points along a family of maps");
  transport->add_option("--from", o.from, "theta document")->required();
  transport->add_option("--to", o.to, "theta document")->required();
  transport->add_option("--steps", o.steps, "checkpoints along the segment")->check(CLI::PositiveNumber);
  transport->add_option("--trace", o.trace, "binary float64 sidecar with every checkpoint");
  auto* g_sieve = group("sieve", "equivariant bijections");
  auto* bij = leaf(g_sieve, "bijection", "bijection between two models");
  bij->add_option("--source", o.source, "park, labeled or locus");
  bij->add_option("--target", o.target, "park, labeled or locus");
  bij->add_option("--theta", o.theta, "theta document for the locus model");
  auto* g_conj = group("conjecture", "end-to-end pipelines");
  leaf(g_conj, "intermediate", "sample, solve, sieve, certify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif

  try {
    Report r;
    if (chosen == "group info") r = group_info(o);
    else if (chosen == "nc enumerate") r = nc_enumerate(o);
    else if (chosen == "park enumerate") r = park_enumerate(o);
    else if (chosen.rfind("verify ", 0) == 0) r = verify(o, chosen.substr(7));
    else if (chosen == "hsop dim") r = hsop_dim(o);
    else if (chosen == "hsop basis") r = hsop_basis(o);
    else if (chosen == "hsop sample") r = hsop_sample(o);
    else if (chosen == "locus solve") r = locus_solve(o);
    else if (chosen == "locus transport") r = locus_transport(o);
    else if (chosen == "sieve bijection") r = sieve_bijection(o);
    else if (chosen == "conjecture intermediate") r = conjecture_intermediate(o);
    else throw UsageError("no command");
    emit(r, o);
    if (r.code == kMismatch) log(1, chosen + ": mismatch reported");
    return r.code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOperational;
  }
}
