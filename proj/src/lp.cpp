#include "crn/lp.hpp"

#include <atomic>
#include <stdexcept>

namespace crn {

namespace {

std::atomic<long long> g_solves{0};
std::atomic<long long> g_verified{0};

struct Column {
  int var;
  int sign;  // +1 or -1 (negative part of a free variable)
};

}  // namespace

LinearSystem::LinearSystem(int num_vars)
    : eq_rows(0, num_vars), kinds(static_cast<std::size_t>(num_vars), VarKind::NonNegative)
{
}

void LinearSystem::add_equation(std::span<const Rational> coefficients, const Rational& value)
{
  eq_rows.append_row(coefficients);
  rhs.push_back(value);
}

void LinearSystem::set_free(int var)
{
  auto& k = kinds.at(static_cast<std::size_t>(var));
  if (k != VarKind::Zero) k = VarKind::Free;
}

void LinearSystem::set_nonnegative(int var)
{
  auto& k = kinds.at(static_cast<std::size_t>(var));
  if (k != VarKind::Zero) k = VarKind::NonNegative;
}

void LinearSystem::set_zero(int var) { kinds.at(static_cast<std::size_t>(var)) = VarKind::Zero; }

RationalMatrix LinearSystem::all_rows() const
{
  RationalMatrix m(0, num_vars());
  for (int r = 0; r < eq_rows.rows(); ++r) m.append_row(eq_rows.row(r));
  if (normalization) m.append_row(*normalization);
  return m;
}

RationalVector LinearSystem::all_rhs() const
{
  RationalVector b = rhs;
  if (normalization) b.emplace_back(1);
  return b;
}

bool verify_witness(const LinearSystem& sys, std::span<const Rational> x)
{
  if (static_cast<int>(x.size()) != sys.num_vars()) return false;
  for (int j = 0; j < sys.num_vars(); ++j) {
    const auto& v = x[static_cast<std::size_t>(j)];
    switch (sys.kinds[static_cast<std::size_t>(j)]) {
      case VarKind::Zero:
        if (v != 0) return false;
        break;
      case VarKind::NonNegative:
        if (v < 0) return false;
        break;
      case VarKind::Free:
        break;
    }
  }
  const auto m = sys.all_rows();
  const auto b = sys.all_rhs();
  for (int r = 0; r < m.rows(); ++r) {
    if (dot(m.row(r), x) != b[static_cast<std::size_t>(r)]) return false;
  }
  return true;
}

bool verify_certificate(const LinearSystem& sys, std::span<const Rational> y)
{
  const auto m = sys.all_rows();
  const auto b = sys.all_rhs();
  if (static_cast<int>(y.size()) != m.rows()) return false;
  if (dot(y, b) >= 0) return false;
  const auto combo = m.left_multiply(y);
  for (int j = 0; j < sys.num_vars(); ++j) {
    const auto& v = combo[static_cast<std::size_t>(j)];
    switch (sys.kinds[static_cast<std::size_t>(j)]) {
      case VarKind::Zero:
        break;
      case VarKind::NonNegative:
        if (v < 0) return false;
        break;
      case VarKind::Free:
        if (v != 0) return false;
        break;
    }
  }
  return true;
}

FeasibilityResult feasible(const LinearSystem& sys)
{
  const RationalMatrix M = sys.all_rows();
  const RationalVector b = sys.all_rhs();
  const int m = M.rows();
  const int n = sys.num_vars();

  std::vector<Column> cols;
  for (int j = 0; j < n; ++j) {
    switch (sys.kinds[static_cast<std::size_t>(j)]) {
      case VarKind::NonNegative: cols.push_back({j, 1}); break;
      case VarKind::Free: cols.push_back({j, 1}); cols.push_back({j, -1}); break;
      case VarKind::Zero: break;
    }
  }
  const int N = static_cast<int>(cols.size());
  const int W = N + m;  // structural columns followed by one artificial per row

  std::vector<int> flip(static_cast<std::size_t>(m), 1);
  std::vector<RationalVector> T(static_cast<std::size_t>(m), RationalVector(static_cast<std::size_t>(W)));
  RationalVector beta(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto& row = T[static_cast<std::size_t>(i)];
    if (b[static_cast<std::size_t>(i)] < 0) flip[static_cast<std::size_t>(i)] = -1;
    const int f = flip[static_cast<std::size_t>(i)];
    for (int k = 0; k < N; ++k) {
      const auto& c = cols[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = M(i, c.var) * (c.sign * f);
    }
    row[static_cast<std::size_t>(N + i)] = 1;
    beta[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] * f;
  }
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = N + i;

  // Phase-one objective: minimize the sum of artificials.
  RationalVector rc(static_cast<std::size_t>(W));
  Rational w = 0;
  for (int i = 0; i < m; ++i) {
    w += beta[static_cast<std::size_t>(i)];
    for (int k = 0; k < N; ++k) rc[static_cast<std::size_t>(k)] -= T[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }

  while (true) {
    // Bland: lowest-index improving column, lowest-index basic variable on ties.
    int enter = -1;
    for (int k = 0; k < W; ++k) {
      if (rc[static_cast<std::size_t>(k)] < 0) { enter = k; break; }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      const auto& a = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (a <= 0) continue;
      Rational ratio = beta[static_cast<std::size_t>(i)] / a;
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave < 0) throw std::logic_error("phase-one simplex: unbounded direction (impossible)");

    auto& prow = T[static_cast<std::size_t>(leave)];
    const Rational pivot = prow[static_cast<std::size_t>(enter)];
    for (auto& v : prow) {
      if (v != 0) v /= pivot;
    }
    beta[static_cast<std::size_t>(leave)] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      auto& row = T[static_cast<std::size_t>(i)];
      const Rational f = row[static_cast<std::size_t>(enter)];
      if (f == 0) continue;
      for (int k = 0; k < W; ++k) {
        const auto& p = prow[static_cast<std::size_t>(k)];
        if (p != 0) row[static_cast<std::size_t>(k)] -= f * p;
      }
      beta[static_cast<std::size_t>(i)] -= f * beta[static_cast<std::size_t>(leave)];
    }
    const Rational f = rc[static_cast<std::size_t>(enter)];
    for (int k = 0; k < W; ++k) {
      const auto& p = prow[static_cast<std::size_t>(k)];
      if (p != 0) rc[static_cast<std::size_t>(k)] -= f * p;
    }
    w += f * beta[static_cast<std::size_t>(leave)];
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  FeasibilityResult result;
  if (w == 0) {
    result.status = Feasibility::Feasible;
    result.witness.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < m; ++i) {
      const int k = basis[static_cast<std::size_t>(i)];
      if (k >= N) continue;
      const auto& c = cols[static_cast<std::size_t>(k)];
      result.witness[static_cast<std::size_t>(c.var)] += beta[static_cast<std::size_t>(i)] * c.sign;
    }
  } else {
    // Duals of the flipped system are y_i = 1 - rc(artificial_i); negating
    // and undoing the flip gives the Farkas multipliers.
    result.status = Feasibility::Infeasible;
    result.certificate.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const Rational y = 1 - rc[static_cast<std::size_t>(N + i)];
      result.certificate[static_cast<std::size_t>(i)] = -y * flip[static_cast<std::size_t>(i)];
    }
  }

  ++g_solves;
  const bool ok = result.feasible() ? verify_witness(sys, result.witness) : verify_certificate(sys, result.certificate);
  if (!ok) throw std::logic_error("exact simplex produced an unverifiable result");
  ++g_verified;
  return result;
}

std::optional<int> affine_dim(const LinearSystem& sys)
{
  const auto first = feasible(sys);
  if (!first.feasible()) return std::nullopt;
  const int n = sys.num_vars();

  std::vector<char> can_be_positive(static_cast<std::size_t>(n), 0);
  auto absorb = [&](std::span<const Rational> x) {
    for (int j = 0; j < n; ++j) {
      if (sys.kinds[static_cast<std::size_t>(j)] == VarKind::NonNegative && x[static_cast<std::size_t>(j)] > 0) {
        can_be_positive[static_cast<std::size_t>(j)] = 1;
      }
    }
  };
  absorb(first.witness);

  // x_i is not identically zero on P iff {M x = t b, x_i = 1, t >= 0} is
  // feasible: t > 0 rescales into P, t = 0 is a recession direction.
  const RationalMatrix M = sys.all_rows();
  const RationalVector b = sys.all_rhs();
  for (int i = 0; i < n; ++i) {
    if (sys.kinds[static_cast<std::size_t>(i)] != VarKind::NonNegative || can_be_positive[static_cast<std::size_t>(i)]) continue;
    LinearSystem probe(n + 1);
    for (int j = 0; j < n; ++j) probe.kinds[static_cast<std::size_t>(j)] = sys.kinds[static_cast<std::size_t>(j)];
    for (int r = 0; r < M.rows(); ++r) {
      RationalVector row(M.row(r).begin(), M.row(r).end());
      row.push_back(-b[static_cast<std::size_t>(r)]);
      probe.add_equation(row, 0);
    }
    RationalVector unit(static_cast<std::size_t>(n + 1));
    unit[static_cast<std::size_t>(i)] = 1;
    probe.add_equation(unit, 1);
    const auto res = feasible(probe);
    if (res.feasible()) absorb(res.witness);
  }

  std::vector<int> live;
  for (int j = 0; j < n; ++j) {
    const auto k = sys.kinds[static_cast<std::size_t>(j)];
    if (k == VarKind::Free || (k == VarKind::NonNegative && can_be_positive[static_cast<std::size_t>(j)])) live.push_back(j);
  }
  return static_cast<int>(live.size()) - rank(M.select_columns(live));
}

SolveCounters solve_counters() { return {g_solves.load(), g_verified.load()}; }

void reset_solve_counters()
{
  g_solves = 0;
  g_verified = 0;
}

}  // namespace crn
