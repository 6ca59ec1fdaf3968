#include "cli.hpp"

#include "cas.hpp"
#include "report.hpp"

#include "crn/components.hpp"
#include "crn/dynamics.hpp"
#include "crn/geometry.hpp"
#include "crn/relevance.hpp"
#include "crn/siphons.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace crn::cli {

namespace {

struct Options {
  std::string network_path;
  std::string c0_text;
  std::vector<std::string> assigns;
  std::string omega_path;
  std::string symmetry_path;
  std::string siphon_text;
  std::string kappa_path;
  std::string flavor = "IG";
  std::string format = "json";
  bool count_only = false;
  bool histogram = false;
  bool brute_force = false;
  bool components = false;
  bool timing = false;
  bool steady = false;
  int trials = 20;
  std::uint64_t seed = 1;
  long budget_ms = 0;
  int threads = 0;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> content_lines(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> split_names(const std::string& text)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

RationalVector parse_point(const ReactionNetwork& net, const std::string& text)
{
  auto v = parse_rational_list(text);
  if (static_cast<int>(v.size()) != net.num_species()) {
    throw UsageError("expected " + std::to_string(net.num_species()) + " values, got " + std::to_string(v.size()));
  }
  return v;
}

std::optional<RationalVector> resolve_c0(const ReactionNetwork& net, const Options& o)
{
  if (!o.c0_text.empty() && !o.assigns.empty()) throw UsageError("give either --c0 or --assign, not both");
  if (!o.c0_text.empty()) return parse_point(net, o.c0_text);
  if (o.assigns.empty()) return std::nullopt;
  RationalVector c0(static_cast<std::size_t>(net.num_species()));
  std::vector<char> set(c0.size(), 0);
  for (const auto& a : o.assigns) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("--assign expects name=value, got '" + a + "'");
    const auto id = net.species().find(a.substr(0, eq));
    if (!id) throw UsageError("unknown species '" + a.substr(0, eq) + "'");
    c0[*id] = parse_rational(a.substr(eq + 1));
    set[*id] = 1;
  }
  for (int i = 0; i < net.num_species(); ++i) {
    if (!set[i]) throw UsageError("--assign gives no value for " + net.species().name(i));
  }
  return c0;
}

std::vector<RationalVector> load_omega(const ReactionNetwork& net, const std::string& path)
{
  std::vector<RationalVector> out;
  for (const auto& line : content_lines(read_file(path))) out.push_back(parse_point(net, line));
  if (out.empty()) throw UsageError("omega file '" + path + "' has no samples");
  return out;
}

std::vector<std::vector<int>> load_symmetries(const ReactionNetwork& net, const std::string& path)
{
  std::vector<std::vector<int>> out;
  for (const auto& line : content_lines(read_file(path))) {
    const auto names = split_names(line);
    if (static_cast<int>(names.size()) != net.num_species()) throw UsageError("symmetry line has the wrong length: " + line);
    std::vector<int> perm;
    std::vector<char> hit(names.size(), 0);
    for (const auto& n : names) {
      const auto id = net.species().find(n);
      if (!id || hit[*id]) throw UsageError("symmetry line is not a permutation: " + line);
      hit[*id] = 1;
      perm.push_back(*id);
    }
    out.push_back(std::move(perm));
  }
  return out;
}

SpeciesSet parse_siphon(const ReactionNetwork& net, const std::string& text)
{
  if (text.empty()) throw UsageError("--siphon is required");
  return net.species().resolve(split_names(text));
}

std::optional<std::chrono::milliseconds> budget(const Options& o)
{
  if (o.budget_ms > 0) return std::chrono::milliseconds(o.budget_ms);
  return std::nullopt;
}

void print_sets(std::ostream& out, const ReactionNetwork& net, const std::vector<SpeciesSet>& sets)
{
  for (const auto& z : sets) out << net.species().format(z) << '\n';
}

void print_histogram(std::ostream& out, const std::map<int, std::uint64_t>& by_size)
{
  for (const auto& [size, count] : by_size) out << "size " << size << ": " << count << '\n';
}

int cmd_siphons(const ReactionNetwork& net, const Options& o, std::ostream& out)
{
  if (o.components) {
    const auto comps = boundary_components(net, ComponentConfig{budget(o)});
    for (const auto& c : comps.components) out << net.species().format(c.zero_set) << "  dim " << c.dimension << '\n';
    if (!comps.exhaustive) throw BudgetExceeded("component search stopped at the time budget");
    return kExitOk;
  }
  if (o.brute_force) {
    print_sets(out, net, brute_force_minimal_siphons(net));
    return kExitOk;
  }
  std::map<int, std::uint64_t> by_size;
  std::uint64_t total = 0;
  bool exhaustive = true;
  if (o.count_only && connectivity(net).is_strongly_connected) {
    const auto c = count_minimal_siphons_fast(net, TransversalConfig{std::nullopt, budget(o)});
    by_size = c.by_size;
    total = c.total;
    exhaustive = c.exhaustive;
  } else {
    EnumerationConfig cfg;
    cfg.time_budget = budget(o);
    const auto e = minimal_siphons(net, cfg);
    if (!o.count_only) print_sets(out, net, e.siphons);
    for (const auto& z : e.siphons) ++by_size[static_cast<int>(z.size())];
    total = e.siphons.size();
    exhaustive = e.exhaustive;
  }
  if (o.count_only) out << "total " << total << '\n';
  if (o.histogram) print_histogram(out, by_size);
  if (!exhaustive) throw BudgetExceeded("enumeration stopped at the time budget; output is partial");
  return kExitOk;
}

int cmd_facets(const ReactionNetwork& net, std::ostream& out)
{
  const auto cone = build_cone(net);
  out << "dimension " << cone.dim << '\n';
  for (const auto& f : cone_facets(cone)) {
    out << "complement " << net.species().format(f.complement(net.num_species())) << "  normal " << to_string(f.normal) << '\n';
  }
  return kExitOk;
}

std::string describe(const ReactionNetwork& net, const RelevanceVerdict& v)
{
  std::string line = net.species().format(v.siphon) + "  ";
  if (v.route == RelevanceRoute::FaceLp) {
    line += v.relevant ? "c0-relevant" : "not c0-relevant";
    if (v.sample_index) line += "  sample " + std::to_string(*v.sample_index);
    if (v.face_point) line += "  point " + to_string(*v.face_point);
    return line;
  }
  line += v.relevant ? "relevant" : "non-relevant";
  if (v.conservation_witness) line += "  witness " + to_string(*v.conservation_witness);
  return line;
}

int cmd_relevance(const ReactionNetwork& net, const Options& o, std::ostream& out)
{
  const RelevanceContext ctx(net);
  const auto c0 = resolve_c0(net, o);
  std::vector<RationalVector> omega;
  if (!o.omega_path.empty()) omega = load_omega(net, o.omega_path);
  if (c0 && !omega.empty()) throw UsageError("give either --c0 or --omega, not both");

  std::vector<SpeciesSet> sets;
  bool exhaustive = true;
  if (!o.siphon_text.empty()) {
    sets.push_back(parse_siphon(net, o.siphon_text));
  } else {
    EnumerationConfig cfg;
    cfg.time_budget = budget(o);
    auto e = minimal_siphons(net, cfg);
    sets = std::move(e.siphons);
    exhaustive = e.exhaustive;
  }
  for (const auto& z : sets) {
    RelevanceVerdict v;
    std::optional<RationalVector> used_c0 = c0;
    if (c0) {
      v = is_c0_relevant(ctx, *c0, z);
    } else if (!omega.empty()) {
      v = omega_relevant(ctx, omega, z);
      used_c0 = omega[v.sample_index ? static_cast<std::size_t>(*v.sample_index) : omega.size() - 1];
    } else {
      v = checked_relevance(ctx, z);
    }
    if (!verify_verdict(ctx, v, used_c0)) throw InvariantViolation("witness failed to re-verify for " + net.species().format(z));
    out << describe(net, v) << '\n';
  }
  if (!exhaustive) throw BudgetExceeded("enumeration stopped at the time budget; output is partial");
  return kExitOk;
}

int cmd_face_dim(const ReactionNetwork& net, const Options& o, std::ostream& out)
{
  const auto c0 = resolve_c0(net, o);
  if (!c0) throw UsageError("face-dim needs --c0 or --assign");
  const auto z = parse_siphon(net, o.siphon_text);
  require_siphon(net, z);
  const auto d = face_dimension(make_polytope(net, *c0), z);
  if (d) out << *d << '\n';
  else out << "empty\n";
  return kExitOk;
}

int cmd_analyze(const ReactionNetwork& net, const Options& o, std::ostream& out)
{
  if (o.format != "json" && o.format != "text") throw UsageError("--format must be json or text");
  AnalysisOptions opts;
  opts.c0 = resolve_c0(net, o);
  if (!o.omega_path.empty()) opts.omega = load_omega(net, o.omega_path);
  if (!o.symmetry_path.empty()) opts.symmetries = load_symmetries(net, o.symmetry_path);
  opts.enumeration.time_budget = budget(o);
  opts.components = o.components;
  auto report = analyze(net, opts);
  if (!o.timing) report.elapsed_ms.reset();
  if (o.format == "json") out << to_json(report).dump(2) << '\n';
  else out << format_text(report);
  if (!report.exhaustive) throw BudgetExceeded("enumeration stopped at the time budget; report is partial");
  return kExitOk;
}

int cmd_ode(const ReactionNetwork& net, const Options& o, std::ostream& out)
{
  if (o.kappa_path.empty()) {
    out << format_symbolic(net, symbolic_rhs(net));
    return kExitOk;
  }
  const MassActionSystem sys(net, parse_kappa(net, read_file(o.kappa_path)));
  out << format_field(net, build_rhs(sys));
  return kExitOk;
}

int cmd_invariance(const ReactionNetwork& net, const Options& o, std::ostream& out)
{
  const auto z = parse_siphon(net, o.siphon_text);
  if (o.trials < 0) throw UsageError("--trials must be non-negative");
  const auto cx = o.steady ? check_steady_face(net, z, o.trials, o.seed) : check_face_invariance(net, z, o.trials, o.seed);
  if (!cx) {
    out << "pass " << net.species().format(z) << " (" << o.trials << " trials, seed " << o.seed << ")\n";
    return kExitOk;
  }
  out << "counterexample: " << cx->message << '\n';
  if (!cx->point.empty()) out << "  point " << to_string(cx->point) << "\n  rates " << to_string(cx->kappa) << '\n';
  return kExitInvariant;
}

int cmd_export(const ReactionNetwork& net, const Options& o, std::ostream& out)
{
  const auto flavor = parse_flavor(o.flavor);
  if (!flavor) throw UsageError("--flavor must be IG, JG or MG");
  out << export_cas_script(net, *flavor);
  return kExitOk;
}

void apply_environment(Options& o)
{
  if (o.budget_ms == 0) {
    if (const char* env = std::getenv("SIPHON_BUDGET_MS")) o.budget_ms = std::atol(env);
  }
  if (o.threads == 0) {
    if (const char* env = std::getenv("SIPHON_THREADS")) o.threads = std::atoi(env);
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"Siphons, relevance and boundary steady states of mass-action networks", "siphon"};
  app.require_subcommand(1);
  app.add_option("--budget-ms", o.budget_ms, "time budget for enumeration (ms, 0 = none)");
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");

  auto with_network = [&](CLI::App* sub) { sub->add_option("network", o.network_path, "reaction file")->required(); };
  auto with_c0 = [&](CLI::App* sub) {
    sub->add_option("--c0", o.c0_text, "initial point, comma-separated rationals in species order");
    sub->add_option("--assign", o.assigns, "initial point as name=value (repeat for every species)");
  };

  auto* parse = app.add_subcommand("parse", "echo the network in canonical form");
  with_network(parse);

  auto* siphons = app.add_subcommand("siphons", "minimal siphons");
  with_network(siphons);
  siphons->add_flag("--count-only", o.count_only, "print the total only");
  siphons->add_flag("--histogram", o.histogram, "print the size histogram");
  siphons->add_flag("--brute-force", o.brute_force, "exhaustive subset sweep (small networks)");
  siphons->add_flag("--components", o.components, "boundary components of a weakly reversible network");

  auto* facets = app.add_subcommand("facets", "facets of the cone spanned by the conservation columns");
  with_network(facets);

  auto* vertices = app.add_subcommand("vertices", "vertex supports of the invariant polyhedron");
  with_network(vertices);
  with_c0(vertices);

  auto* relevance = app.add_subcommand("relevance", "relevance of each minimal siphon");
  with_network(relevance);
  with_c0(relevance);
  relevance->add_option("--omega", o.omega_path, "file of c0 samples, one per line");
  relevance->add_option("--siphon", o.siphon_text, "check one siphon only");

  auto* face_dim = app.add_subcommand("face-dim", "dimension of the face of a siphon");
  with_network(face_dim);
  with_c0(face_dim);
  face_dim->add_option("--siphon", o.siphon_text, "siphon members")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full report");
  with_network(analyze_cmd);
  with_c0(analyze_cmd);
  analyze_cmd->add_option("--omega", o.omega_path, "file of c0 samples, one per line");
  analyze_cmd->add_option("--symmetry", o.symmetry_path, "file of species permutations, one per line");
  analyze_cmd->add_flag("--components", o.components, "also report boundary components");
  analyze_cmd->add_option("--format", o.format, "json or text");
  analyze_cmd->add_flag("--timing", o.timing, "include wall-clock time");

  auto* ode = app.add_subcommand("ode", "mass-action right-hand side");
  with_network(ode);
  ode->add_option("--kappa", o.kappa_path, "rate file, label = value per line");

  auto* invariance = app.add_subcommand("invariance-check", "sampled and structural face checks");
  with_network(invariance);
  invariance->add_option("--siphon", o.siphon_text, "siphon members")->required();
  invariance->add_option("--trials", o.trials, "random trials");
  invariance->add_option("--seed", o.seed, "master seed");
  invariance->add_flag("--steady", o.steady, "check that the whole face is steady (strongly connected networks)");

  auto* cas = app.add_subcommand("export-cas", "Macaulay2 script for external cross-checks");
  with_network(cas);
  cas->add_option("--flavor", o.flavor, "IG, JG or MG");

  std::vector<const char*> argv{"siphon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "siphon: " << e.what() << '\n';
    return kExitUsage;
  }
  apply_environment(o);

  std::optional<ReactionNetwork> net;
  try {
    net.emplace(load_network(o.network_path));
  } catch (const ParseError& e) {
    err << o.network_path << ":" << e.line() << ":" << e.column() << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "siphon: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (parse->parsed()) {
      out << to_text(*net);
      return kExitOk;
    }
    if (siphons->parsed()) return cmd_siphons(*net, o, out);
    if (facets->parsed()) return cmd_facets(*net, out);
    if (vertices->parsed()) {
      const auto c0 = resolve_c0(*net, o);
      if (!c0) throw UsageError("vertices needs --c0 or --assign");
      print_sets(out, *net, vertex_supports(make_polytope(*net, *c0)));
      return kExitOk;
    }
    if (relevance->parsed()) return cmd_relevance(*net, o, out);
    if (face_dim->parsed()) return cmd_face_dim(*net, o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(*net, o, out);
    if (ode->parsed()) return cmd_ode(*net, o, out);
    if (invariance->parsed()) return cmd_invariance(*net, o, out);
    if (cas->parsed()) return cmd_export(*net, o, out);
  } catch (const BudgetExceeded& e) {
    err << "siphon: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    err << "siphon: internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "siphon: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace crn::cli
