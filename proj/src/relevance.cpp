#include "crn/relevance.hpp"

#include <omp.h>

#include <chrono>
#include <exception>
#include <map>
#include <numeric>

namespace crn {

const char* to_string(RelevanceRoute route)
{
  switch (route) {
    case RelevanceRoute::StarLp: return "star_lp";
    case RelevanceRoute::Facet: return "facet";
    case RelevanceRoute::FaceLp: return "face_lp";
  }
  return "?";
}

RelevanceContext::RelevanceContext(const ReactionNetwork& network)
    : net(&network), conservation(conservation_basis(network)), cone(build_cone(conservation))
{
}

namespace {

bool point_on_face(const RelevanceContext& ctx, const RationalVector& c0, const SpeciesSet& z, const RationalVector& x)
{
  const auto p = make_polytope(ctx.conservation, c0);
  if (static_cast<int>(x.size()) != ctx.num_species()) return false;
  for (const auto& xi : x) {
    if (xi < 0) return false;
  }
  for (int i : z) {
    if (x[i] != 0) return false;
  }
  return p.A.multiply(x) == p.b;
}

}  // namespace

LinearSystem star_system(const SubspaceBasis& conservation, const SpeciesSet& z)
{
  const int s = conservation.ambient_dim;
  const int d = conservation.dim();
  LinearSystem sys(s + d);
  for (int i = 0; i < s; ++i) {
    RationalVector row(static_cast<std::size_t>(s + d));
    row[i] = 1;
    for (int k = 0; k < d; ++k) row[s + k] = -conservation.basis_rows(k, i);
    sys.add_equation(row, 0);
  }
  for (int k = 0; k < d; ++k) sys.set_free(s + k);
  RationalVector norm(static_cast<std::size_t>(s + d));
  std::size_t next = 0;
  for (int i = 0; i < s; ++i) {
    if (next < z.size() && z[next] == i) {
      norm[i] = 1;
      ++next;
    } else {
      sys.set_zero(i);
    }
  }
  sys.normalization = std::move(norm);
  return sys;
}

RelevanceVerdict is_relevant_star(const RelevanceContext& ctx, const SpeciesSet& z)
{
  require_siphon(*ctx.net, z);
  RelevanceVerdict v;
  v.siphon = z;
  v.route = RelevanceRoute::StarLp;
  auto res = feasible(star_system(ctx.conservation, z));
  if (res.feasible()) {
    const int s = ctx.num_species();
    v.relevant = false;
    v.conservation_witness = primitive_integer(std::span<const Rational>(res.witness).first(static_cast<std::size_t>(s)));
  } else {
    v.relevant = true;
    v.farkas = std::move(res.certificate);
  }
  return v;
}

RelevanceVerdict is_relevant_facet(const RelevanceContext& ctx, const SpeciesSet& z)
{
  require_siphon(*ctx.net, z);
  RelevanceVerdict v;
  v.siphon = z;
  v.route = RelevanceRoute::Facet;
  v.relevant = true;
  for (const auto& f : cone_facets(ctx.cone)) {
    if (is_subset(f.complement(ctx.num_species()), z)) {
      v.relevant = false;
      v.facet = f;
      break;
    }
  }
  return v;
}

RelevanceVerdict is_c0_relevant(const RelevanceContext& ctx, const InvariantPolytope& p, const SpeciesSet& z)
{
  require_siphon(*ctx.net, z);
  RelevanceVerdict v;
  v.siphon = z;
  v.route = RelevanceRoute::FaceLp;
  auto res = feasible(face_system(p, z));
  v.relevant = res.feasible();
  if (v.relevant) v.face_point = std::move(res.witness);
  else v.farkas = std::move(res.certificate);
  return v;
}

RelevanceVerdict is_c0_relevant(const RelevanceContext& ctx, const RationalVector& c0, const SpeciesSet& z)
{
  return is_c0_relevant(ctx, make_polytope(ctx.conservation, c0), z);
}

RelevanceVerdict omega_relevant(const RelevanceContext& ctx, const std::vector<RationalVector>& samples, const SpeciesSet& z)
{
  if (samples.empty()) throw std::invalid_argument("omega sample list is empty");
  RelevanceVerdict last;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    last = is_c0_relevant(ctx, samples[k], z);
    if (last.relevant) {
      last.sample_index = static_cast<int>(k);
      return last;
    }
  }
  return last;
}

RelevanceVerdict checked_relevance(const RelevanceContext& ctx, const SpeciesSet& z)
{
  auto v = is_relevant_star(ctx, z);
  if (!ctx.cone.pointed) return v;
  const auto f = is_relevant_facet(ctx, z);
  if (f.relevant != v.relevant) {
    throw InvariantViolation("relevance routes disagree on " + ctx.net->species().format(z));
  }
  v.facet = f.facet;
  v.cross_checked = true;
  return v;
}

bool verify_verdict(const RelevanceContext& ctx, const RelevanceVerdict& v, const std::optional<RationalVector>& c0)
{
  const int s = ctx.num_species();
  const auto& z = v.siphon;
  if (v.conservation_witness) {
    const auto& l = *v.conservation_witness;
    if (v.relevant || static_cast<int>(l.size()) != s) return false;
    bool nonzero = false;
    for (int i = 0; i < s; ++i) {
      if (l[i] < 0) return false;
      if (l[i] > 0) {
        nonzero = true;
        if (!std::binary_search(z.begin(), z.end(), i)) return false;
      }
    }
    if (!nonzero) return false;
    if (ctx.conservation.dim() == 0 || !in_row_space(ctx.conservation, l)) return false;
  }
  if (v.facet) {
    if (!verify_facet(ctx.cone, *v.facet)) return false;
    if (!is_subset(v.facet->complement(s), z)) return false;
  }
  if (v.route == RelevanceRoute::Facet && v.relevant) {
    for (const auto& f : ctx.cone.facets) {
      if (is_subset(f.complement(s), z)) return false;
    }
  }
  if (v.route == RelevanceRoute::StarLp && v.relevant) {
    if (!v.farkas || !verify_certificate(star_system(ctx.conservation, z), *v.farkas)) return false;
  }
  if (v.route == RelevanceRoute::FaceLp) {
    if (!c0) return false;
    if (v.relevant) {
      if (!v.face_point || !point_on_face(ctx, *c0, z, *v.face_point)) return false;
    } else {
      const auto p = make_polytope(ctx.conservation, *c0);
      if (!v.farkas || !verify_certificate(face_system(p, z), *v.farkas)) return false;
    }
  }
  return true;
}

std::vector<SpeciesSet> relevant_minimal_siphons(const ReactionNetwork& net)
{
  const RelevanceContext ctx(net);
  std::vector<SpeciesSet> out;
  for (const auto& z : minimal_siphons(net).siphons) {
    if (is_relevant_star(ctx, z).relevant) out.push_back(z);
  }
  return out;
}

std::vector<std::vector<int>> orbits(const std::vector<SpeciesSet>& sets, const std::vector<std::vector<int>>& permutations)
{
  const int n = static_cast<int>(sets.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<SpeciesSet, int> index;
  for (int k = 0; k < n; ++k) index.emplace(sets[k], k);
  for (const auto& perm : permutations) {
    for (int k = 0; k < n; ++k) {
      SpeciesSet image;
      for (int i : sets[k]) image.push_back(perm.at(static_cast<std::size_t>(i)));
      auto it = index.find(make_species_set(std::move(image)));
      if (it == index.end()) continue;
      const int a = find(k), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int k = 0; k < n; ++k) groups[find(k)].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

namespace {

/// Verdicts for a list of sets, computed concurrently; the first exception
/// thrown by any worker is rethrown after the loop.
std::vector<SiphonReport> assess(const RelevanceContext& ctx, const std::vector<SpeciesSet>& sets, const AnalysisOptions& options)
{
  std::optional<InvariantPolytope> polytope;
  if (options.c0) polytope = make_polytope(ctx.conservation, *options.c0);
  std::vector<InvariantPolytope> samples;
  for (const auto& c : options.omega) samples.push_back(make_polytope(ctx.conservation, c));

  const int n = static_cast<int>(sets.size());
  std::vector<SiphonReport> out(sets.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    try {
      SiphonReport r;
      r.members = sets[k];
      r.verdict = checked_relevance(ctx, sets[k]);
      if (!verify_verdict(ctx, r.verdict)) throw InvariantViolation("relevance witness failed to re-verify");
      if (polytope) {
        const auto v = is_c0_relevant(ctx, *polytope, sets[k]);
        if (!verify_verdict(ctx, v, options.c0)) throw InvariantViolation("face witness failed to re-verify");
        if (v.relevant && !r.verdict.relevant) throw InvariantViolation("c0-relevant siphon judged non-relevant");
        r.c0_relevant = v.relevant;
        if (v.relevant) r.face_dimension = face_dimension(*polytope, sets[k]);
      }
      for (std::size_t j = 0; j < samples.size(); ++j) {
        if (is_c0_relevant(ctx, samples[j], sets[k]).relevant) r.omega_relevant_samples.push_back(static_cast<int>(j));
      }
      out[k] = std::move(r);
    } catch (...) {
#pragma omp critical(crn_assess_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

AnalysisReport analyze(const ReactionNetwork& net, const AnalysisOptions& options)
{
  const auto start = std::chrono::steady_clock::now();
  const auto counters_before = solve_counters();
  const RelevanceContext ctx(net);
  const auto info = connectivity(net);

  AnalysisReport r;
  r.species = net.species().names();
  r.num_complexes = net.num_complexes();
  r.num_reactions = net.num_reactions();
  r.strongly_connected = info.is_strongly_connected;
  r.components_strongly_connected = info.components_strongly_connected;
  r.num_linkage_classes = static_cast<int>(info.linkage_classes.size());
  r.num_strong_components = static_cast<int>(info.strong_components.size());
  for (int k = 0; k < ctx.conservation.dim(); ++k) {
    const auto row = ctx.conservation.basis_rows.row(k);
    r.conservation_basis.emplace_back(row.begin(), row.end());
  }
  r.cone_dimension = ctx.cone.dim;
  r.cone_pointed = ctx.cone.pointed;
  for (const auto& f : ctx.cone.facets) r.facets.push_back({f.generators, f.complement(net.num_species()), f.normal});
  r.c0 = options.c0;
  r.omega = options.omega;

  const auto enumeration = minimal_siphons(net, options.enumeration);
  r.enumeration_route = to_string(enumeration.route);
  r.exhaustive = enumeration.exhaustive;
  r.siphons = assess(ctx, enumeration.siphons, options);

  if (options.components) {
    const auto comps = boundary_components(net, ComponentConfig{options.enumeration.time_budget});
    r.exhaustive = r.exhaustive && comps.exhaustive;
    std::vector<SpeciesSet> zero_sets;
    for (const auto& c : comps.components) zero_sets.push_back(c.zero_set);
    r.components = assess(ctx, zero_sets, options);
    for (std::size_t k = 0; k < comps.components.size(); ++k) r.components[k].component_dimension = comps.components[k].dimension;
    if (!options.symmetries.empty()) r.component_orbits = orbits(zero_sets, options.symmetries);
  }
  if (!options.symmetries.empty()) r.siphon_orbits = orbits(enumeration.siphons, options.symmetries);

  r.all_non_relevant = std::none_of(r.siphons.begin(), r.siphons.end(), [](const SiphonReport& s) { return s.verdict.relevant; });
  if (r.all_non_relevant && r.exhaustive) {
    r.certificate =
        "no minimal siphon is relevant: each one contains the support of a non-negative conservation relation "
        "(witnesses attached), so no invariant polyhedron P_c0 contains a boundary steady state";
  }
  if (r.strongly_connected) {
    r.steady_face_note =
        "reaction graph is strongly connected: a boundary point is a steady state iff its zero set is a siphon, "
        "and every point of a siphon face is a steady state";
  }
  r.toric_note =
      "persistence from the absence of relevant siphons needs a dynamical hypothesis such as complex balancing, "
      "which this analysis does not check";

  const auto counters_after = solve_counters();
  r.lp_solves = counters_after.solves - counters_before.solves;
  r.lp_verified = counters_after.verified - counters_before.verified;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace crn
