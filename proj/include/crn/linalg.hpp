#pragma once

#include "crn/network.hpp"
#include "crn/rational.hpp"

#include <span>
#include <vector>

namespace crn {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  /// All rows must have `cols` entries.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  std::span<Rational> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const Rational> row(int r) const { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
  RationalVector column(int c) const;

  void append_row(std::span<const Rational> values);
  RationalMatrix transpose() const;
  RationalMatrix select_columns(const std::vector<int>& cols) const;
  RationalVector multiply(std::span<const Rational> x) const;  // M x
  RationalVector left_multiply(std::span<const Rational> y) const;  // y^T M

  bool operator==(const RationalMatrix&) const = default;

private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct RowReduction {
  int rank = 0;
  RationalMatrix rref;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form. Elimination runs fraction-free (Bareiss) on the
/// row-wise integer scaling of M; only the final normalization divides.
RowReduction row_reduce(const RationalMatrix& m);
int rank(const RationalMatrix& m);

/// A subspace of Q^n given by linearly independent rows.
struct SubspaceBasis {
  RationalMatrix basis_rows;
  int ambient_dim = 0;

  int dim() const noexcept { return basis_rows.rows(); }
};

/// Integer basis of {x : M x = 0}: one row per free column of rref(M),
/// each row primitive with its first nonzero entry positive.
SubspaceBasis null_space(const RationalMatrix& m);
/// Integer-normalized rows of rref(M) spanning its row space.
SubspaceBasis row_space(const RationalMatrix& m);

/// Stacked stoichiometric generators (one row per reaction), s columns.
RationalMatrix stoichiometric_matrix(const ReactionNetwork& net);
SubspaceBasis stoichiometric_basis(const ReactionNetwork& net);
/// L_cons: the orthogonal complement of the stoichiometric subspace.
SubspaceBasis conservation_basis(const ReactionNetwork& net);

/// True iff v lies in the row space of B. Throws std::invalid_argument on a
/// dimension mismatch.
bool in_row_space(const SubspaceBasis& b, std::span<const Rational> v);
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive.
RationalVector integer_normalize(std::span<const Rational> v);

/// Solves the square system M x = rhs; nullopt if M is singular.
std::optional<RationalVector> solve_square(const RationalMatrix& m, std::span<const Rational> rhs);

}  // namespace crn
