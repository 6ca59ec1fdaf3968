#include "crn/linalg.hpp"

#include <stdexcept>

namespace crn {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, int cols)
{
  RationalMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RationalMatrix RationalMatrix::identity(int n)
{
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::column(int c) const
{
  RationalVector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = (*this)(r, c);
  return out;
}

void RationalMatrix::append_row(std::span<const Rational> values)
{
  if (static_cast<int>(values.size()) != cols_) throw std::invalid_argument("append_row: dimension mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix RationalMatrix::transpose() const
{
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<int>& cols) const
{
  RationalMatrix out(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, static_cast<int>(k)) = (*this)(r, cols[k]);
  }
  return out;
}

RationalVector RationalMatrix::multiply(std::span<const Rational> x) const
{
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  RationalVector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = dot(row(r), x);
  return out;
}

RationalVector RationalMatrix::left_multiply(std::span<const Rational> y) const
{
  if (static_cast<int>(y.size()) != rows_) throw std::invalid_argument("left_multiply: dimension mismatch");
  RationalVector out(static_cast<std::size_t>(cols_));
  for (int r = 0; r < rows_; ++r) {
    if (y[static_cast<std::size_t>(r)] == 0) continue;
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] += y[static_cast<std::size_t>(r)] * (*this)(r, c);
  }
  return out;
}

RowReduction row_reduce(const RationalMatrix& m)
{
  const int R = m.rows();
  const int C = m.cols();

  // Row-wise integer scaling does not change the row space.
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(R), std::vector<Integer>(static_cast<std::size_t>(C)));
  for (int r = 0; r < R; ++r) {
    Integer lcm = 1;
    for (int c = 0; c < C; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (int c = 0; c < C; ++c) a[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
  }

  // Fraction-free forward elimination: every intermediate entry is a minor
  // of the scaled matrix, so the division by the previous pivot is exact.
  RowReduction out;
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;

  // Normalize to reduced echelon form over Q.
  RationalMatrix rref(out.rank, C);
  for (int i = 0; i < out.rank; ++i) {
    for (int j = 0; j < C; ++j) rref(i, j) = Rational(a[i][j]);
  }
  for (int i = out.rank - 1; i >= 0; --i) {
    const int pc = out.pivot_cols[static_cast<std::size_t>(i)];
    const Rational pivot = rref(i, pc);
    for (int j = pc; j < C; ++j) rref(i, j) /= pivot;
    for (int k = 0; k < i; ++k) {
      const Rational f = rref(k, pc);
      if (f == 0) continue;
      for (int j = pc; j < C; ++j) rref(k, j) -= f * rref(i, j);
    }
  }
  // Keep the zero rows so rref has the shape of M.
  out.rref = RationalMatrix(R, C);
  for (int i = 0; i < out.rank; ++i) {
    for (int j = 0; j < C; ++j) out.rref(i, j) = rref(i, j);
  }
  return out;
}

int rank(const RationalMatrix& m) { return row_reduce(m).rank; }

RationalVector integer_normalize(std::span<const Rational> v)
{
  RationalVector out = primitive_integer(v);
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : out) y = -y;
    }
    break;
  }
  return out;
}

SubspaceBasis null_space(const RationalMatrix& m)
{
  const auto rr = row_reduce(m);
  const int C = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(C), false);
  for (int pc : rr.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;

  SubspaceBasis out{RationalMatrix(0, C), C};
  for (int f = 0; f < C; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RationalVector v(static_cast<std::size_t>(C));
    v[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < rr.rank; ++i) v[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(i)])] = -rr.rref(i, f);
    out.basis_rows.append_row(integer_normalize(v));
  }
  return out;
}

SubspaceBasis row_space(const RationalMatrix& m)
{
  const auto rr = row_reduce(m);
  SubspaceBasis out{RationalMatrix(0, m.cols()), m.cols()};
  for (int i = 0; i < rr.rank; ++i) out.basis_rows.append_row(integer_normalize(rr.rref.row(i)));
  return out;
}

RationalMatrix stoichiometric_matrix(const ReactionNetwork& net)
{
  RationalMatrix m(0, net.num_species());
  for (const auto& g : stoichiometric_generators(net)) {
    RationalVector row(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) row[a] = Rational(g[a]);
    m.append_row(row);
  }
  return m;
}

SubspaceBasis stoichiometric_basis(const ReactionNetwork& net) { return row_space(stoichiometric_matrix(net)); }

SubspaceBasis conservation_basis(const ReactionNetwork& net) { return null_space(stoichiometric_matrix(net)); }

bool in_row_space(const SubspaceBasis& b, std::span<const Rational> v)
{
  if (static_cast<int>(v.size()) != b.ambient_dim || b.basis_rows.cols() != b.ambient_dim) {
    throw std::invalid_argument("in_row_space: dimension mismatch");
  }
  RationalMatrix extended = b.basis_rows;
  extended.append_row(v);
  return rank(extended) == rank(b.basis_rows);
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b)
{
  if (a.cols() != b.cols()) return false;
  RationalMatrix stacked = a;
  for (int r = 0; r < b.rows(); ++r) stacked.append_row(b.row(r));
  const int ra = rank(a);
  return ra == rank(b) && ra == rank(stacked);
}

std::optional<RationalVector> solve_square(const RationalMatrix& m, std::span<const Rational> rhs)
{
  const int n = m.rows();
  if (m.cols() != n || static_cast<int>(rhs.size()) != n) throw std::invalid_argument("solve_square: dimension mismatch");
  RationalMatrix aug(n, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[static_cast<std::size_t>(r)];
  }
  const auto rr = row_reduce(aug);
  if (rr.rank < n || rr.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  RationalVector x(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) x[static_cast<std::size_t>(r)] = rr.rref(r, n);
  return x;
}

}  // namespace crn
