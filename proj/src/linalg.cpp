#include "linalg.hpp"

namespace kelc::detail {
namespace {

struct Reduced {
  std::vector<std::size_t> pivot_cols;  // pivot column of each leading row
  bool consistent = true;
};

// Reduced row echelon form of [A | b] in place.
Reduced rref(const Modulus& mod, DenseMatrix& a, std::vector<Residue>& b) {
  Reduced out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(pivot, c), a.at(row, c));
      std::swap(b[pivot], b[row]);
    }
    const Residue inv = mod.inv(a.at(row, col));
    for (std::size_t c = col; c < a.cols; ++c) a.at(row, c) = mod.mul(a.at(row, c), inv);
    b[row] = mod.mul(b[row], inv);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Residue factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols; ++c) {
        a.at(r, c) = mod.sub(a.at(r, c), mod.mul(factor, a.at(row, c)));
      }
      b[r] = mod.sub(b[r], mod.mul(factor, b[row]));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < a.rows; ++r) {
    if (b[r] != 0) out.consistent = false;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Residue>> solve(const Modulus& mod, DenseMatrix a,
                                          std::vector<Residue> b) {
  const Reduced red = rref(mod, a, b);
  if (!red.consistent) return std::nullopt;
  std::vector<Residue> x(a.cols, 0);
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) x[red.pivot_cols[r]] = b[r];
  return x;
}

std::optional<AffineSolution> solve_affine(const Modulus& mod, DenseMatrix a,
                                           std::vector<Residue> b) {
  const Reduced red = rref(mod, a, b);
  if (!red.consistent) return std::nullopt;
  AffineSolution out;
  out.particular.assign(a.cols, 0);
  std::vector<bool> is_pivot(a.cols, false);
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
    out.particular[red.pivot_cols[r]] = b[r];
    is_pivot[red.pivot_cols[r]] = true;
  }
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(a.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
      v[red.pivot_cols[r]] = mod.neg(a.at(r, free));
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace kelc::detail
