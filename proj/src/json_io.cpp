#include "parking/json_io.hpp"

namespace parking {

namespace {

Json complex_vector(const CVec& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

CVec complex_vector_from(const Json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  CVec v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(i) = cd(re[i].get<double>(), im[i].get<double>());
  return v;
}

Json subgroup_json(const GSet& s, const Subgroup& h) {
  Json out = Json::array();
  for (GCode c : h) out.push_back({code_element(s, c).value, code_rotation(s, c)});
  return out;
}

}  // namespace

Json element_to_json(const ReflectionGroup& g, ElementId w) {
  const GroupElement& e = g.element(w);
  Json j{{"id", w.value}, {"string", g.element_string(w)}};
  if (g.family() == Family::I2) {
    j["rotation"] = e.rotation;
    j["reflection"] = e.reflection;
  } else {
    Json one_line = Json::array();
    for (std::size_t i = 0; i < e.images.size(); ++i) one_line.push_back(e.signs[i] * (e.images[i] + 1));
    j["one_line"] = one_line;
  }
  return j;
}

Json group_to_json(const ReflectionGroup& g) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "group";
  j["spec"] = g.spec().str();
  j["family"] = family_name(g.family());
  j["n"] = g.family() == Family::I2 ? 2 : g.letters();
  if (g.family() == Family::I2) j["m"] = g.m();
  j["rank"] = g.rank();
  j["h"] = g.coxeter_number();
  j["degrees"] = g.degrees();
  j["order"] = g.order();
  j["reflections"] = g.reflections().size();
  j["flats"] = g.num_flats();
  Json gens = Json::array();
  for (ElementId s : g.simple_generators()) gens.push_back(element_to_json(g, s));
  j["generators"] = gens;
  j["coxeter_element"] = element_to_json(g, g.coxeter_element());
  return j;
}

Json flat_to_json(const ReflectionGroup& g, FlatId x) {
  return Json{{"id", x.value}, {"code", g.flat(x).code}, {"dim", g.flat(x).dim}, {"string", g.flat_string(x)}};
}

Json chains_to_json(const ReflectionGroup& g, int k, const std::vector<MultiChain>& chains) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "nc_chains";
  j["group"] = g.spec().str();
  j["k"] = k;
  j["count"] = chains.size();
  Json list = Json::array();
  for (const auto& c : chains) {
    Json item = Json::array();
    for (ElementId w : c.w) item.push_back(element_to_json(g, w));
    list.push_back(item);
  }
  j["chains"] = list;
  return j;
}

Json park_to_json(const ParkSpace& park) {
  const ReflectionGroup& g = park.group();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "park";
  j["group"] = g.spec().str();
  j["k"] = park.k();
  j["count"] = park.size();
  Json list = Json::array();
  for (std::size_t i = 0; i < park.size(); ++i) {
    Json flats = Json::array();
    for (FlatId x : park.flat_chain(i).flats) flats.push_back(flat_to_json(g, x));
    list.push_back(Json{{"rep", element_to_json(g, park.element(i).rep)}, {"flats", flats}});
  }
  j["elements"] = list;
  return j;
}

Json theta_to_json(const PolynomialMap& m, const GroupSpec& spec, int k, std::uint64_t seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "theta";
  j["group"] = spec.str();
  j["k"] = k;
  j["seed"] = seed;
  j["vars"] = m.vars;
  j["degree"] = m.degree;
  Json coords = Json::array();
  for (const auto& c : m.coords) {
    Json terms = Json::array();
    for (const auto& [e, v] : c) terms.push_back(Json{{"exponent", e}, {"re", v.real()}, {"im", v.imag()}});
    coords.push_back(terms);
  }
  j["coords"] = coords;
  return j;
}

PolynomialMap theta_from_json(const Json& j) {
  if (j.value("kind", "") != "theta") throw ConfigError("not a theta document");
  PolynomialMap m = PolynomialMap::zero(j.at("vars").get<int>(), j.at("degree").get<int>());
  const auto& coords = j.at("coords");
  if (static_cast<int>(coords.size()) != m.vars) throw ConfigError("theta coordinate count mismatch");
  for (int i = 0; i < m.vars; ++i)
    for (const auto& t : coords[i]) {
      Exponent e = t.at("exponent").get<Exponent>();
      m.coords[i][e] = cd(t.at("re").get<double>(), t.at("im").get<double>());
    }
  if (!m.is_homogeneous()) throw ConfigError("theta is not homogeneous");
  return m;
}

GroupSpec theta_group(const Json& j) { return GroupSpec::parse(j.at("group").get<std::string>()); }
int theta_k(const Json& j) { return j.at("k").get<int>(); }

Json locus_to_json(const ReflectionGroup& g, const LocusSolution& sol) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "locus";
  j["group"] = g.spec().str();
  j["k"] = sol.k;
  j["theta_ref"] = sol.theta_ref;
  j["expected"] = sol.expected;
  j["count"] = sol.points.size();
  j["certified"] = sol.certified;
  j["failure"] = sol.failure;
  j["gamma_attempts"] = sol.gamma_attempts;
  j["min_separation"] = sol.min_separation;
  j["max_residual"] = sol.max_residual;
  j["min_sigma"] = sol.min_sigma;
  Json pts = Json::array();
  for (const auto& p : sol.points) {
    Json q = complex_vector(p.x);
    q["residual"] = p.residual;
    q["sigma_min"] = p.sigma_min;
    q["origin"] = p.origin;
    pts.push_back(q);
  }
  j["points"] = pts;
  j["action_closed"] = sol.action_closed;
  j["generator_tables"] = sol.generator_tables;
  j["rotation_table"] = sol.rotation_table;
  return j;
}

LocusSolution locus_from_json(const Json& j) {
  if (j.value("kind", "") != "locus") throw ConfigError("not a locus document");
  LocusSolution sol;
  sol.k = j.at("k").get<int>();
  sol.theta_ref = j.value("theta_ref", "");
  sol.expected = j.at("expected").get<std::size_t>();
  sol.certified = j.at("certified").get<bool>();
  sol.failure = j.value("failure", "");
  sol.gamma_attempts = j.value("gamma_attempts", 0);
  sol.min_separation = j.value("min_separation", 0.0);
  sol.max_residual = j.value("max_residual", 0.0);
  sol.min_sigma = j.value("min_sigma", 0.0);
  for (const auto& q : j.at("points")) {
    LocusPoint p;
    p.x = complex_vector_from(q);
    p.residual = q.value("residual", 0.0);
    p.sigma_min = q.value("sigma_min", 0.0);
    p.origin = q.value("origin", false);
    sol.points.push_back(p);
  }
  sol.action_closed = j.value("action_closed", false);
  sol.generator_tables = j.at("generator_tables").get<std::vector<std::vector<std::uint32_t>>>();
  sol.rotation_table = j.at("rotation_table").get<std::vector<std::uint32_t>>();
  return sol;
}

Json character_report_to_json(const ReflectionGroup& g, const CharacterReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "weak";
  j["pass"] = r.pass;
  j["set_size"] = r.set_size;
  j["mismatches"] = r.mismatches;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"class_rep", g.element_string(row.rep)},
                        {"class_size", row.class_size},
                        {"d", row.d},
                        {"observed", row.observed},
                        {"predicted", row.predicted}});
  j["rows"] = rows;
  return j;
}

Json csp_report_to_json(const CspReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "csp";
  j["pass"] = r.pass;
  j["total"] = r.total;
  j["orbits_direct"] = r.orbits_direct;
  j["orbits_burnside"] = r.orbits_burnside;
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(Json{{"d", row.d}, {"fixed", row.fixed}, {"predicted", row.predicted}});
  j["rows"] = rows;
  return j;
}

Json kreweras_report_to_json(const ReflectionGroup& g, const KrewerasReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "kreweras";
  j["pass"] = r.pass;
  j["antichains"] = r.antichains;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"representative", g.flat_string(row.representative)},
                        {"orbit_size", row.orbit_size},
                        {"noncrossing", row.noncrossing},
                        {"nonnesting", row.nonnesting}});
  j["rows"] = rows;
  return j;
}

Json bijection_to_json(const GSet& source, const EquivariantBijection& b) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "bijection";
  j["success"] = b.success;
  j["equivariant"] = b.equivariant;
  j["subgroups_checked"] = b.subgroups_checked;
  j["map"] = b.map;
  Json orbits = Json::array();
  for (const auto& o : b.orbits)
    orbits.push_back(Json{{"source", o.s0}, {"target", o.t0}, {"size", o.size},
                          {"stabilizer", subgroup_json(source, o.stabilizer)}});
  j["orbits"] = orbits;
  Json mm = Json::array();
  for (const auto& m : b.mismatches)
    mm.push_back(Json{{"kind", m.kind},
                      {"subgroup", subgroup_json(source, m.subgroup)},
                      {"source_count", m.source_count},
                      {"target_count", m.target_count}});
  j["mismatches"] = mm;
  return j;
}

Json transport_to_json(const TransportResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "transport";
  j["success"] = r.success;
  j["equivariant"] = r.equivariant;
  j["profiles_match"] = r.profiles_match;
  j["min_path_distance"] = r.min_path_distance;
  j["min_sigma"] = r.min_sigma;
  j["detours"] = r.detours;
  j["checkpoints"] = r.checkpoints;
  j["failure"] = r.failure;
  j["map"] = r.map;
  return j;
}

Json descriptor_to_json(const ReflectionGroup& g, const StabilizerDescriptor& d) {
  return Json{{"flat", flat_to_json(g, d.x)},
              {"w", g.element_string(d.w)},
              {"d", d.d},
              {"matches_bruteforce", d.matches_bruteforce}};
}

}  // namespace parking
