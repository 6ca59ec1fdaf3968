#include "report.hpp"

#include <sstream>
#include <stdexcept>

namespace crn::cli {

using json = nlohmann::ordered_json;

namespace {

json rationals(const RationalVector& v)
{
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

RationalVector rationals_from(const json& j)
{
  RationalVector out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

json names(const std::vector<std::string>& species, const SpeciesSet& set)
{
  json out = json::array();
  for (int i : set) out.push_back(species.at(static_cast<std::size_t>(i)));
  return out;
}

SpeciesSet set_from(const std::vector<std::string>& species, const json& j)
{
  SpeciesSet out;
  for (const auto& name : j) {
    const auto it = std::find(species.begin(), species.end(), name.get<std::string>());
    if (it == species.end()) throw std::invalid_argument("unknown species " + name.get<std::string>());
    out.push_back(static_cast<int>(it - species.begin()));
  }
  return make_species_set(std::move(out));
}

template <class T, class F>
void put_optional(json& j, const char* key, const std::optional<T>& value, F convert)
{
  if (value) j[key] = convert(*value);
}

json verdict_json(const std::vector<std::string>& species, const RelevanceVerdict& v)
{
  json j{{"relevant", v.relevant}, {"route", to_string(v.route)}, {"cross_checked", v.cross_checked}};
  json w = json::object();
  put_optional(w, "conservation", v.conservation_witness, rationals);
  if (v.facet) w["facet"] = {{"generators", names(species, v.facet->generators)}, {"normal", rationals(v.facet->normal)}};
  put_optional(w, "face_point", v.face_point, rationals);
  put_optional(w, "farkas", v.farkas, rationals);
  put_optional(w, "sample_index", v.sample_index, [](int x) { return x; });
  j["witnesses"] = std::move(w);
  return j;
}

RelevanceRoute route_from(const std::string& s)
{
  for (auto r : {RelevanceRoute::StarLp, RelevanceRoute::Facet, RelevanceRoute::FaceLp}) {
    if (s == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown relevance route " + s);
}

json siphon_json(const std::vector<std::string>& species, const SiphonReport& r)
{
  json j = verdict_json(species, r.verdict);
  j["members"] = names(species, r.members);
  put_optional(j, "c0_relevant", r.c0_relevant, [](bool b) { return b; });
  put_optional(j, "face_dim", r.face_dimension, [](int d) { return d; });
  if (!r.omega_relevant_samples.empty()) j["omega_relevant_samples"] = r.omega_relevant_samples;
  put_optional(j, "component_dim", r.component_dimension, [](int d) { return d; });
  return j;
}

SiphonReport siphon_from(const std::vector<std::string>& species, const json& j)
{
  SiphonReport r;
  r.members = set_from(species, j.at("members"));
  auto& v = r.verdict;
  v.siphon = r.members;
  v.relevant = j.at("relevant").get<bool>();
  v.route = route_from(j.at("route").get<std::string>());
  v.cross_checked = j.at("cross_checked").get<bool>();
  const auto& w = j.at("witnesses");
  if (w.contains("conservation")) v.conservation_witness = rationals_from(w["conservation"]);
  if (w.contains("facet")) v.facet = Facet{set_from(species, w["facet"].at("generators")), rationals_from(w["facet"].at("normal"))};
  if (w.contains("face_point")) v.face_point = rationals_from(w["face_point"]);
  if (w.contains("farkas")) v.farkas = rationals_from(w["farkas"]);
  if (w.contains("sample_index")) v.sample_index = w["sample_index"].get<int>();
  if (j.contains("c0_relevant")) r.c0_relevant = j["c0_relevant"].get<bool>();
  if (j.contains("face_dim")) r.face_dimension = j["face_dim"].get<int>();
  if (j.contains("omega_relevant_samples")) r.omega_relevant_samples = j["omega_relevant_samples"].get<std::vector<int>>();
  if (j.contains("component_dim")) r.component_dimension = j["component_dim"].get<int>();
  return r;
}

}  // namespace

json to_json(const AnalysisReport& r)
{
  const auto& sp = r.species;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["network"] = {{"species", sp}, {"complexes", r.num_complexes}, {"reactions", r.num_reactions}};
  j["connectivity"] = {{"strongly_connected", r.strongly_connected},
                       {"weakly_reversible", r.components_strongly_connected},
                       {"linkage_classes", r.num_linkage_classes},
                       {"strong_components", r.num_strong_components}};
  j["conservation_basis"] = json::array();
  for (const auto& row : r.conservation_basis) j["conservation_basis"].push_back(rationals(row));

  json facets = json::array();
  for (const auto& f : r.facets) {
    facets.push_back({{"generators", names(sp, f.generators)}, {"complement", names(sp, f.complement)}, {"normal", rationals(f.normal)}});
  }
  j["cone"] = {{"dimension", r.cone_dimension}, {"pointed", r.cone_pointed}, {"facets", std::move(facets)}};

  if (r.c0) j["c0"] = rationals(*r.c0);
  if (!r.omega.empty()) {
    j["omega"] = json::array();
    for (const auto& c : r.omega) j["omega"].push_back(rationals(c));
  }

  j["enumeration"] = {{"route", r.enumeration_route}, {"exhaustive", r.exhaustive}};
  j["minimal_siphons"] = json::array();
  for (const auto& s : r.siphons) j["minimal_siphons"].push_back(siphon_json(sp, s));
  if (!r.siphon_orbits.empty()) j["siphon_orbits"] = r.siphon_orbits;
  if (!r.components.empty()) {
    j["boundary_components"] = json::array();
    for (const auto& s : r.components) j["boundary_components"].push_back(siphon_json(sp, s));
    if (!r.component_orbits.empty()) j["component_orbits"] = r.component_orbits;
  }

  json verdicts{{"all_non_relevant", r.all_non_relevant}, {"toric_note", r.toric_note}};
  put_optional(verdicts, "boundary_steady_state_certificate", r.certificate, [](const std::string& s) { return s; });
  put_optional(verdicts, "steady_face_note", r.steady_face_note, [](const std::string& s) { return s; });
  j["verdicts"] = std::move(verdicts);

  j["lp"] = {{"solves", r.lp_solves}, {"verified", r.lp_verified}};
  if (r.elapsed_ms) j["timing"] = {{"elapsed_ms", *r.elapsed_ms}};
  return j;
}

AnalysisReport report_from_json(const json& j)
{
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
    AnalysisReport r;
    r.species = j.at("network").at("species").get<std::vector<std::string>>();
    const auto& sp = r.species;
    r.num_complexes = j["network"].at("complexes").get<int>();
    r.num_reactions = j["network"].at("reactions").get<int>();
    const auto& c = j.at("connectivity");
    r.strongly_connected = c.at("strongly_connected").get<bool>();
    r.components_strongly_connected = c.at("weakly_reversible").get<bool>();
    r.num_linkage_classes = c.at("linkage_classes").get<int>();
    r.num_strong_components = c.at("strong_components").get<int>();
    for (const auto& row : j.at("conservation_basis")) r.conservation_basis.push_back(rationals_from(row));
    const auto& cone = j.at("cone");
    r.cone_dimension = cone.at("dimension").get<int>();
    r.cone_pointed = cone.at("pointed").get<bool>();
    for (const auto& f : cone.at("facets")) {
      r.facets.push_back({set_from(sp, f.at("generators")), set_from(sp, f.at("complement")), rationals_from(f.at("normal"))});
    }
    if (j.contains("c0")) r.c0 = rationals_from(j["c0"]);
    if (j.contains("omega")) {
      for (const auto& o : j["omega"]) r.omega.push_back(rationals_from(o));
    }
    r.enumeration_route = j.at("enumeration").at("route").get<std::string>();
    r.exhaustive = j["enumeration"].at("exhaustive").get<bool>();
    for (const auto& s : j.at("minimal_siphons")) r.siphons.push_back(siphon_from(sp, s));
    if (j.contains("siphon_orbits")) r.siphon_orbits = j["siphon_orbits"].get<std::vector<std::vector<int>>>();
    if (j.contains("boundary_components")) {
      for (const auto& s : j["boundary_components"]) r.components.push_back(siphon_from(sp, s));
    }
    if (j.contains("component_orbits")) r.component_orbits = j["component_orbits"].get<std::vector<std::vector<int>>>();
    const auto& v = j.at("verdicts");
    r.all_non_relevant = v.at("all_non_relevant").get<bool>();
    r.toric_note = v.at("toric_note").get<std::string>();
    if (v.contains("boundary_steady_state_certificate")) r.certificate = v["boundary_steady_state_certificate"].get<std::string>();
    if (v.contains("steady_face_note")) r.steady_face_note = v["steady_face_note"].get<std::string>();
    r.lp_solves = j.at("lp").at("solves").get<long long>();
    r.lp_verified = j["lp"].at("verified").get<long long>();
    if (j.contains("timing")) r.elapsed_ms = j["timing"].at("elapsed_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string join(const std::vector<std::string>& species, const SpeciesSet& set)
{
  std::string out;
  for (int i : set) {
    if (!out.empty()) out += ' ';
    out += species[static_cast<std::size_t>(i)];
  }
  return out;
}

void siphon_lines(std::ostream& out, const AnalysisReport& r, const std::vector<SiphonReport>& list)
{
  for (const auto& s : list) {
    out << "  {" << join(r.species, s.members) << "}  " << (s.verdict.relevant ? "relevant" : "non-relevant");
    if (s.verdict.conservation_witness) out << "  witness " << to_string(*s.verdict.conservation_witness);
    if (s.component_dimension) out << "  component dim " << *s.component_dimension;
    if (s.c0_relevant) {
      out << "  c0: " << (*s.c0_relevant ? "relevant" : "not relevant");
      if (s.face_dimension) out << " (face dim " << *s.face_dimension << ")";
    }
    if (!r.omega.empty()) {
      out << "  omega samples:";
      if (s.omega_relevant_samples.empty()) out << " none";
      for (int k : s.omega_relevant_samples) out << ' ' << k;
    }
    out << '\n';
  }
}

}  // namespace

std::string format_text(const AnalysisReport& r)
{
  std::ostringstream out;
  out << "species: " << r.species.size() << "  complexes: " << r.num_complexes << "  reactions: " << r.num_reactions << '\n';
  out << "strongly connected: " << (r.strongly_connected ? "yes" : "no")
      << "  weakly reversible: " << (r.components_strongly_connected ? "yes" : "no") << '\n';
  out << "conservation basis:\n";
  for (const auto& row : r.conservation_basis) out << "  " << to_string(row) << '\n';
  out << "cone Q: dim " << r.cone_dimension << ", " << (r.cone_pointed ? "pointed" : "not pointed") << ", " << r.facets.size()
      << " facets\n";
  for (const auto& f : r.facets) out << "  complement {" << join(r.species, f.complement) << "}  normal " << to_string(f.normal) << '\n';
  out << "minimal siphons (" << r.siphons.size() << ", " << r.enumeration_route << (r.exhaustive ? "" : ", partial") << "):\n";
  siphon_lines(out, r, r.siphons);
  if (!r.siphon_orbits.empty()) out << "siphon orbits: " << r.siphon_orbits.size() << '\n';
  if (!r.components.empty()) {
    out << "boundary components (" << r.components.size() << "):\n";
    siphon_lines(out, r, r.components);
    if (!r.component_orbits.empty()) out << "component orbits: " << r.component_orbits.size() << '\n';
  }
  if (r.certificate) out << "certificate: " << *r.certificate << '\n';
  if (r.steady_face_note) out << "note: " << *r.steady_face_note << '\n';
  out << "note: " << r.toric_note << '\n';
  out << "lp solves: " << r.lp_solves << " (verified " << r.lp_verified << ")\n";
  if (r.elapsed_ms) out << "elapsed: " << *r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace crn::cli
