#include "crn/geometry.hpp"

#include <omp.h>

#include <map>
#include <set>

namespace crn {

namespace {

/// Row-echelon basis of span{columns added so far}, grown and shrunk in
/// depth-first order.
class Echelon {
public:
  explicit Echelon(int dim) : dim_(dim) {}

  bool try_add(const RationalVector& v)
  {
    RationalVector x = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = x[pivots_[k]];
      if (f == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (rows_[k][j] != 0) x[j] -= f * rows_[k][j];
      }
    }
    int p = 0;
    while (p < dim_ && x[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = x[p];
    for (auto& e : x) e /= lead;
    rows_.push_back(std::move(x));
    pivots_.push_back(p);
    return true;
  }

  void pop()
  {
    rows_.pop_back();
    pivots_.pop_back();
  }

  int size() const { return static_cast<int>(rows_.size()); }

  /// Spans the orthogonal complement when size() == dim - 1.
  RationalVector normal() const
  {
    std::vector<bool> is_pivot(dim_, false);
    for (int p : pivots_) is_pivot[p] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    RationalVector v(dim_);
    v[free_col] = 1;
    for (int k = size() - 1; k >= 0; --k) {
      Rational acc = 0;
      for (int j = 0; j < dim_; ++j) {
        if (j != pivots_[k] && rows_[k][j] != 0) acc += rows_[k][j] * v[j];
      }
      v[pivots_[k]] = -acc;
    }
    return v;
  }

private:
  int dim_;
  std::vector<RationalVector> rows_;
  std::vector<int> pivots_;
};

std::vector<RationalVector> columns_of(const RationalMatrix& a)
{
  std::vector<RationalVector> cols;
  for (int c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
  return cols;
}

bool is_zero_vector(const RationalVector& v)
{
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Evaluates a candidate hyperplane through d-1 independent generators.
std::optional<Facet> facet_from_normal(const RationalVector& raw, const std::vector<RationalVector>& cols)
{
  const auto v = primitive_integer(raw);
  int sign = 0;
  Facet f;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Rational val = dot(v, cols[i]);
    if (val == 0) {
      f.generators.push_back(static_cast<int>(i));
      continue;
    }
    const int sg = val > 0 ? 1 : -1;
    if (sign == 0) sign = sg;
    else if (sign != sg) return std::nullopt;
  }
  if (sign == 0) return std::nullopt;  // cannot happen for a full-rank A
  f.normal = v;
  if (sign < 0) {
    for (auto& x : f.normal) x = -x;
  }
  return f;
}

/// All facets whose defining generator subset starts with `first` (or every
/// facet when first < 0 and the cone is one-dimensional).
void facet_search(const std::vector<RationalVector>& cols, const std::vector<int>& nonzero, std::size_t start,
                  Echelon& ech, int target, std::map<SpeciesSet, Facet>& found)
{
  if (ech.size() == target) {
    if (auto f = facet_from_normal(ech.normal(), cols)) found.emplace(f->generators, std::move(*f));
    return;
  }
  const std::size_t needed = static_cast<std::size_t>(target - ech.size());
  for (std::size_t k = start; k + needed <= nonzero.size(); ++k) {
    if (!ech.try_add(cols[nonzero[k]])) continue;
    facet_search(cols, nonzero, k + 1, ech, target, found);
    ech.pop();
  }
}

std::vector<Facet> sorted_facets(std::map<SpeciesSet, Facet> found)
{
  std::vector<Facet> out;
  for (auto& [gens, f] : found) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const Facet& x, const Facet& y) { return CanonicalLess{}(x.generators, y.generators); });
  return out;
}

void vertex_search(const InvariantPolytope& p, const std::vector<RationalVector>& cols, std::size_t start, Echelon& ech,
                   std::vector<int>& chosen, std::set<SpeciesSet>& found)
{
  const int d = p.A.rows();
  if (ech.size() == d) {
    const auto x = solve_square(p.A.select_columns(chosen), p.b);
    if (!x) return;
    SpeciesSet support;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      if ((*x)[k] < 0) return;
      if ((*x)[k] > 0) support.push_back(chosen[k]);
    }
    found.insert(make_species_set(std::move(support)));
    return;
  }
  const std::size_t needed = static_cast<std::size_t>(d - ech.size());
  for (std::size_t k = start; k + needed <= cols.size(); ++k) {
    if (!ech.try_add(cols[k])) continue;
    chosen.push_back(static_cast<int>(k));
    vertex_search(p, cols, k + 1, ech, chosen, found);
    chosen.pop_back();
    ech.pop();
  }
}

std::vector<SpeciesSet> to_sorted(const std::set<SpeciesSet>& found)
{
  std::vector<SpeciesSet> out(found.begin(), found.end());
  canonical_sort(out);
  return out;
}

std::vector<int> nonzero_columns(const std::vector<RationalVector>& cols)
{
  std::vector<int> nz;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (!is_zero_vector(cols[i])) nz.push_back(static_cast<int>(i));
  }
  return nz;
}

}  // namespace

// ---------------------------------------------------------------------------
// Serial reference kernels

namespace serial {

std::vector<Facet> enumerate_facets(const ConeQ& q)
{
  if (q.dim == 0) return {};
  const auto cols = columns_of(q.generators);
  const auto nonzero = nonzero_columns(cols);
  Echelon ech(q.dim);
  std::map<SpeciesSet, Facet> found;
  facet_search(cols, nonzero, 0, ech, q.dim - 1, found);
  return sorted_facets(std::move(found));
}

std::vector<SpeciesSet> enumerate_vertex_supports(const InvariantPolytope& p)
{
  const auto cols = columns_of(p.A);
  Echelon ech(p.A.rows());
  std::vector<int> chosen;
  std::set<SpeciesSet> found;
  vertex_search(p, cols, 0, ech, chosen, found);
  return to_sorted(found);
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP kernels: the subset space is split on the first chosen column.

namespace parallel {

std::vector<Facet> enumerate_facets(const ConeQ& q)
{
  if (q.dim <= 1) return serial::enumerate_facets(q);
  const auto cols = columns_of(q.generators);
  const auto nonzero = nonzero_columns(cols);
  const int target = q.dim - 1;
  const int branches = static_cast<int>(nonzero.size());
  std::vector<std::map<SpeciesSet, Facet>> partial(branches);

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < branches; ++k) {
    Echelon ech(q.dim);
    ech.try_add(cols[nonzero[k]]);
    facet_search(cols, nonzero, static_cast<std::size_t>(k) + 1, ech, target, partial[k]);
  }

  std::map<SpeciesSet, Facet> merged;
  for (auto& part : partial) merged.merge(part);
  return sorted_facets(std::move(merged));
}

std::vector<SpeciesSet> enumerate_vertex_supports(const InvariantPolytope& p)
{
  const int d = p.A.rows();
  if (d == 0) return serial::enumerate_vertex_supports(p);
  const auto cols = columns_of(p.A);
  const int branches = static_cast<int>(cols.size());
  std::vector<std::set<SpeciesSet>> partial(branches);

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < branches; ++k) {
    Echelon ech(d);
    if (!ech.try_add(cols[k])) continue;
    std::vector<int> chosen{k};
    vertex_search(p, cols, static_cast<std::size_t>(k) + 1, ech, chosen, partial[k]);
  }

  std::set<SpeciesSet> merged;
  for (auto& part : partial) merged.merge(part);
  return to_sorted(merged);
}

}  // namespace parallel

// ---------------------------------------------------------------------------

ConeQ build_cone(const SubspaceBasis& conservation)
{
  ConeQ q;
  q.generators = conservation.basis_rows;
  q.num_species = conservation.ambient_dim;
  q.dim = conservation.dim();
  if (q.dim == 0) return q;

  // Pointed iff some functional is strictly positive on every nonzero generator.
  const auto cols = columns_of(q.generators);
  const auto nonzero = nonzero_columns(cols);
  const int nvars = q.dim + static_cast<int>(nonzero.size());
  LinearSystem sys(nvars);
  for (int j = 0; j < q.dim; ++j) sys.set_free(j);
  for (std::size_t k = 0; k < nonzero.size(); ++k) {
    RationalVector row(nvars);
    for (int j = 0; j < q.dim; ++j) row[j] = cols[nonzero[k]][j];
    row[q.dim + k] = -1;
    sys.add_equation(row, 1);
  }
  q.pointed = feasible(sys).feasible();
  if (q.pointed) q.facets = parallel::enumerate_facets(q);
  return q;
}

ConeQ build_cone(const ReactionNetwork& net) { return build_cone(conservation_basis(net)); }

std::vector<Facet> cone_facets(const ConeQ& q)
{
  if (!q.pointed) throw NotPointedError();
  return q.facets;
}

bool verify_facet(const ConeQ& q, const Facet& f)
{
  if (static_cast<int>(f.normal.size()) != q.dim) return false;
  std::size_t k = 0;
  for (int i = 0; i < q.generators.cols(); ++i) {
    const Rational val = dot(f.normal, q.generators.column(i));
    const bool on_facet = k < f.generators.size() && f.generators[k] == i;
    if (on_facet) {
      ++k;
      if (val != 0) return false;
    } else if (val <= 0) {
      return false;
    }
  }
  return k == f.generators.size();
}

InvariantPolytope make_polytope(const SubspaceBasis& conservation, RationalVector c0)
{
  if (static_cast<int>(c0.size()) != conservation.ambient_dim) {
    throw std::invalid_argument("initial condition has " + std::to_string(c0.size()) + " entries, expected " +
                                std::to_string(conservation.ambient_dim));
  }
  for (const auto& x : c0) {
    if (x <= 0) throw std::invalid_argument("initial condition must be strictly positive");
  }
  InvariantPolytope p;
  p.A = conservation.basis_rows;
  if (p.A.cols() != conservation.ambient_dim) p.A = RationalMatrix(0, conservation.ambient_dim);
  p.b = p.A.multiply(c0);
  p.c0 = std::move(c0);
  return p;
}

InvariantPolytope make_polytope(const ReactionNetwork& net, RationalVector c0)
{
  return make_polytope(conservation_basis(net), std::move(c0));
}

std::vector<SpeciesSet> vertex_supports(const InvariantPolytope& p) { return parallel::enumerate_vertex_supports(p); }

LinearSystem face_system(const InvariantPolytope& p, const SpeciesSet& zero_set)
{
  const int s = p.num_species();
  LinearSystem sys(s);
  for (int r = 0; r < p.A.rows(); ++r) sys.add_equation(p.A.row(r), p.b[r]);
  for (int z : zero_set) sys.set_zero(z);
  return sys;
}

std::optional<RationalVector> face_nonempty(const InvariantPolytope& p, const SpeciesSet& zero_set)
{
  if (zero_set.empty()) return p.c0;
  auto res = feasible(face_system(p, zero_set));
  if (!res.feasible()) return std::nullopt;
  return std::move(res.witness);
}

std::optional<int> face_dimension(const InvariantPolytope& p, const SpeciesSet& zero_set)
{
  return affine_dim(face_system(p, zero_set));
}

std::vector<SpeciesSet> chamber_signature(const ReactionNetwork& net, const RationalVector& c0)
{
  return vertex_supports(make_polytope(net, c0));
}

}  // namespace crn
