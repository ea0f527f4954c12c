// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Smith normal form of small integer matrices with unimodular transforms.

#ifndef FOXHOM_SMITH_HPP_
#define FOXHOM_SMITH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "checked_int.hpp"

namespace foxhom {

  using IntMatrix = std::vector<std::vector<std::int64_t>>;

  [[nodiscard]] inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  [[nodiscard]] inline IntMatrix matmul(IntMatrix const& a, IntMatrix const& b,
                                        std::size_t inner) {
    std::size_t const rows = a.size();
    std::size_t const cols = b.empty() ? 0 : b[0].size();
    IntMatrix         out(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < inner; ++k) {
        for (std::size_t j = 0; j < cols; ++j) {
          out[i][j] = checked::add(out[i][j], checked::mul(a[i][k], b[k][j]));
        }
      }
    }
    return out;
  }

  struct SmithForm {
    //! Same shape as the input; diagonal d_0 | d_1 | ..., all >= 0, zeros last.
    IntMatrix diagonal;
    //! rows x rows, unimodular.
    IntMatrix left;
    //! cols x cols, unimodular; left * input * right == diagonal.
    IntMatrix right;
    //! Number of nonzero diagonal entries.
    std::size_t rank = 0;
  };

  //! `cols` is needed when the matrix has no rows.
  [[nodiscard]] inline SmithForm smith_normal_form(IntMatrix m, std::size_t cols) {
    std::size_t const rows = m.size();
    IntMatrix         u    = identity_matrix(rows);
    IntMatrix         v    = identity_matrix(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
      std::swap(m[i], m[j]);
      std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
      for (auto& row : m) {
        std::swap(row[i], row[j]);
      }
      for (auto& row : v) {
        std::swap(row[i], row[j]);
      }
    };
    // row_i -= q * row_j
    auto row_op = [&](std::size_t i, std::size_t j, std::int64_t q) {
      for (std::size_t k = 0; k < cols; ++k) {
        m[i][k] = checked::sub(m[i][k], checked::mul(q, m[j][k]));
      }
      for (std::size_t k = 0; k < rows; ++k) {
        u[i][k] = checked::sub(u[i][k], checked::mul(q, u[j][k]));
      }
    };
    // col_i -= q * col_j
    auto col_op = [&](std::size_t i, std::size_t j, std::int64_t q) {
      for (std::size_t k = 0; k < rows; ++k) {
        m[k][i] = checked::sub(m[k][i], checked::mul(q, m[k][j]));
      }
      for (std::size_t k = 0; k < cols; ++k) {
        v[k][i] = checked::sub(v[k][i], checked::mul(q, v[k][j]));
      }
    };

    std::size_t rank = 0;
    for (std::size_t t = 0; t < rows && t < cols; ++t) {
      while (true) {
        // Move the smallest nonzero entry of the trailing block to (t, t).
        std::size_t  pi = rows, pj = cols;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            auto a = checked::abs(m[i][j]);
            if (a != 0 && (best == 0 || a < best)) {
              best = a;
              pi   = i;
              pj   = j;
            }
          }
        }
        if (best == 0) {
          break;
        }
        if (pi != t) {
          swap_rows(pi, t);
        }
        if (pj != t) {
          swap_cols(pj, t);
        }
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (m[i][t] != 0) {
            row_op(i, t, m[i][t] / m[t][t]);
            dirty |= m[i][t] != 0;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[t][j] != 0) {
            col_op(j, t, m[t][j] / m[t][t]);
            dirty |= m[t][j] != 0;
          }
        }
        if (dirty) {
          continue;
        }
        // Pivot must divide the rest of the block; fold an offending row in.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              row_op(t, i, -1);
              divides = false;
              break;
            }
          }
        }
        if (!divides) {
          continue;
        }
        if (m[t][t] < 0) {
          for (auto& x : m[t]) {
            x = checked::neg(x);
          }
          for (auto& x : u[t]) {
            x = checked::neg(x);
          }
        }
        ++rank;
        break;
      }
      if (rank == t) {
        break;
      }
    }
    return {std::move(m), std::move(u), std::move(v), rank};
  }

}  // namespace foxhom

#endif  // FOXHOM_SMITH_HPP_
