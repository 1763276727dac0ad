#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kelc/modular.hpp"

namespace kelc::detail {

/// Row-major dense matrix over F_p.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Residue> data;

  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Residue& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Some x with A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Residue>> solve(const Modulus& mod, DenseMatrix a,
                                          std::vector<Residue> b);

/// Affine solution set {particular + span(kernel)} of A x = b.
struct AffineSolution {
  std::vector<Residue> particular;
  std::vector<std::vector<Residue>> kernel;
};
std::optional<AffineSolution> solve_affine(const Modulus& mod, DenseMatrix a,
                                           std::vector<Residue> b);

}  // namespace kelc::detail
