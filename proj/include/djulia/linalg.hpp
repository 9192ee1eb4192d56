// Copyright 2026 the djulia authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "djulia/fq.hpp"

namespace djulia {

// Dense row-major matrix over F_q; small sizes only (residue fields,
// digit vectors), so plain Gaussian elimination throughout.
class FqMatrix {
 public:
  FqMatrix(const FqCtx* F, size_t rows, size_t cols)
      : F_(F), rows_(rows), cols_(cols),
        a_(rows * cols, FqElem::zero(F)) {}

  const FqCtx* field() const { return F_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  FqElem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const FqElem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  // In-place reduced row echelon form; returns the pivot column of each
  // pivot row (so the rank is the returned size).
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t piv = row;
      while (piv < rows_ && at(piv, col).is_zero()) ++piv;
      if (piv == rows_) continue;
      for (size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
      FqElem inv = at(row, col).inv();
      for (size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        FqElem f = at(i, col);
        for (size_t j = col; j < cols_; ++j)
          at(i, j) = at(i, j) - f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

 private:
  const FqCtx* F_;
  size_t rows_, cols_;
  std::vector<FqElem> a_;
};

struct AffineSolution {
  bool solvable = false;
  std::vector<FqElem> particular;             // one solution when solvable
  std::vector<std::vector<FqElem>> kernel;    // basis of the solution space
};

// All solutions of M x = b as particular + span(kernel).
inline AffineSolution solve_affine(const FqMatrix& M,
                                   const std::vector<FqElem>& b) {
  const FqCtx* F = M.field();
  size_t n = M.cols();
  FqMatrix aug(F, M.rows(), n + 1);
  for (size_t i = 0; i < M.rows(); ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<size_t> piv = aug.rref();
  AffineSolution sol;
  for (size_t c : piv)
    if (c == n) return sol;  // row (0 ... 0 | 1): inconsistent
  sol.solvable = true;
  std::vector<long long> pivot_of_col(n, -1);
  for (size_t r = 0; r < piv.size(); ++r) pivot_of_col[piv[r]] = (long long)r;
  sol.particular.assign(n, FqElem::zero(F));
  for (size_t r = 0; r < piv.size(); ++r)
    sol.particular[piv[r]] = aug.at(r, n);
  for (size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<FqElem> v(n, FqElem::zero(F));
    v[c] = FqElem::one(F);
    for (size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -aug.at(r, c);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

// Enumerates particular + span(kernel); caller's functor sees each solution
// once.  Count is q^(dim kernel), so keep kernels small.
template <class Fn>
void for_each_solution(const AffineSolution& sol, const FqCtx* F, Fn&& fn) {
  if (!sol.solvable) return;
  size_t k = sol.kernel.size();
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<FqElem> x = sol.particular;
    for (size_t j = 0; j < k; ++j) {
      if (idx[j] == 0) continue;
      FqElem c(F, idx[j]);
      for (size_t i = 0; i < x.size(); ++i)
        x[i] = x[i] + c * sol.kernel[j][i];
    }
    fn(x);
    size_t j = 0;
    while (j < k) {
      if (++idx[j] < F->q) break;
      idx[j] = 0;
      ++j;
    }
    if (j == k) break;
  }
}

// Incremental row space over F_q: add() returns true when the vector was
// independent of everything added before (and absorbs it).
class RowSpace {
 public:
  RowSpace(const FqCtx* F, size_t dim) : F_(F), dim_(dim) {}

  size_t rank() const { return rows_.size(); }

  bool add(std::vector<FqElem> v) {
    reduce(v);
    size_t lead = leading(v);
    if (lead == dim_) return false;  // dependent
    FqElem inv = v[lead].inv();
    for (auto& c : v) c = c * inv;
    rows_.push_back({lead, std::move(v)});
    return true;
  }

  // Is v in the span (without inserting)?
  bool contains(std::vector<FqElem> v) const {
    reduce(v);
    return leading(v) == dim_;
  }

 private:
  void reduce(std::vector<FqElem>& v) const {
    for (const auto& [lead, row] : rows_) {
      if (v[lead].is_zero()) continue;
      FqElem f = v[lead];
      for (size_t i = lead; i < dim_; ++i) v[i] = v[i] - f * row[i];
    }
  }
  size_t leading(const std::vector<FqElem>& v) const {
    for (size_t i = 0; i < dim_; ++i)
      if (!v[i].is_zero()) return i;
    return dim_;
  }

  const FqCtx* F_;
  size_t dim_;
  std::vector<std::pair<size_t, std::vector<FqElem>>> rows_;
};

}  // namespace djulia
