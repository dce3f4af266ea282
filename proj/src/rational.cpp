#include "satake/rational.hpp"

#include <algorithm>
#include <sstream>

namespace satake {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_finite_type: return "NotFiniteType";
    case errc::pinning_violated: return "PinningViolated";
    case errc::not_finite_order: return "NotFiniteOrder";
    case errc::not_dominant: return "NotDominant";
    case errc::not_sigma_fixed: return "NotSigmaFixed";
    case errc::not_antidominant: return "NotAntidominant";
    case errc::orbit_too_large: return "OrbitTooLarge";
    case errc::method_mismatch: return "MethodMismatch";
    case errc::mode_mismatch: return "ModeMismatch";
    case errc::not_in_span: return "NotInSpan";
    case errc::sigma_nontrivial: return "SigmaNontrivial";
    case errc::weyl_group_too_large: return "WeylGroupTooLarge";
    case errc::not_prime_power: return "NotPrimePower";
    case errc::mismatch: return "Mismatch";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::singular: return "Singular";
    case errc::envelope_exceeded: return "EnvelopeExceeded";
    case errc::support_violation: return "SupportViolation";
    case errc::constraint_violated: return "ConstraintViolated";
    case errc::unknown_name: return "UnknownName";
    case errc::non_polynomial: return "NonPolynomial";
    case errc::not_integral: return "NotIntegral";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

std::optional<RatVec> solve_linear(RatMat A, RatVec b) {
  size_t m = A.size();
  size_t n = m == 0 ? 0 : A[0].size();
  std::vector<int> pivot_col(m, -1);
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && A[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    Rat inv = Rat(1) / A[row][col];
    for (size_t j = col; j < n; ++j) A[row][j] = A[row][j] * inv;
    b[row] = b[row] * inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || A[i][col].is_zero()) continue;
      Rat f = A[i][col];
      for (size_t j = col; j < n; ++j) A[i][j] = A[i][j] - f * A[row][j];
      b[i] = b[i] - f * b[row];
    }
    pivot_col[row] = (int)col;
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  RatVec x(n, Rat(0));
  for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
  return x;
}

Rat rat_det(RatMat A) {
  size_t n = A.size();
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && A[p][col].is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      std::swap(A[p], A[col]);
      det = -det;
    }
    det = det * A[col][col];
    Rat inv = Rat(1) / A[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      Rat f = A[i][col] * inv;
      if (f.is_zero()) continue;
      for (size_t j = col; j < n; ++j) A[i][j] = A[i][j] - f * A[col][j];
    }
  }
  return det;
}

// Column-style Hermite reduction: find unimodular U with M U = [H | 0];
// the columns of U matching zero columns of M U form a kernel basis.
std::vector<Weight> integer_kernel(const IntMat& M) {
  size_t m = M.size();
  size_t n = m == 0 ? 0 : M[0].size();
  IntMat A = M;
  IntMat U(n, Weight(n, 0));
  for (size_t i = 0; i < n; ++i) U[i][i] = 1;

  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
    for (size_t i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
  };
  auto col_axpy = [&](size_t dst, size_t src, i64 f) { // col_dst += f*col_src
    for (size_t i = 0; i < m; ++i) A[i][dst] += f * A[i][src];
    for (size_t i = 0; i < n; ++i) U[i][dst] += f * U[i][src];
  };
  auto col_neg = [&](size_t cidx) {
    for (size_t i = 0; i < m; ++i) A[i][cidx] = -A[i][cidx];
    for (size_t i = 0; i < n; ++i) U[i][cidx] = -U[i][cidx];
  };

  size_t c = 0;
  for (size_t r = 0; r < m && c < n; ++r) {
    // reduce row r over columns c..n-1 to a single nonzero entry
    while (true) {
      size_t best = n;
      for (size_t j = c; j < n; ++j) {
        if (A[r][j] != 0 && (best == n || std::abs(A[r][j]) < std::abs(A[r][best]))) best = j;
      }
      if (best == n) break; // whole row zero from column c on
      col_swap(c, best);
      bool clean = true;
      for (size_t j = c + 1; j < n; ++j) {
        if (A[r][j] == 0) continue;
        i64 f = A[r][j] / A[r][c];
        col_axpy(j, c, -f);
        if (A[r][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (A[r][c] != 0) {
      if (A[r][c] < 0) col_neg(c);
      ++c;
    }
  }
  std::vector<Weight> basis;
  for (size_t j = c; j < n; ++j) {
    Weight v(n);
    bool zero_col = true;
    for (size_t i = 0; i < m; ++i)
      if (A[i][j] != 0) zero_col = false;
    if (!zero_col) continue;
    for (size_t i = 0; i < n; ++i) v[i] = U[i][j];
    basis.push_back(v);
  }
  return basis;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  size_t n = A.size(), k = B.size(), p = B.empty() ? 0 : B[0].size();
  IntMat C(n, Weight(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (A[i][j] == 0) continue;
      for (size_t l = 0; l < p; ++l) C[i][l] += A[i][j] * B[j][l];
    }
  return C;
}

Weight mat_apply(const IntMat& M, const Weight& v) {
  Weight r(M.size(), 0);
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += M[i][j] * v[j];
  return r;
}

IntMat mat_identity(int n) {
  IntMat I(n, Weight(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

bool mat_equal(const IntMat& A, const IntMat& B) { return A == B; }

i64 mat_det(const IntMat& A) {
  RatMat R(A.size());
  for (size_t i = 0; i < A.size(); ++i)
    for (i64 x : A[i]) R[i].push_back(Rat(x));
  Rat d = rat_det(R);
  if (!d.is_integer()) fail(errc::singular, "non-integer determinant of integer matrix");
  return d.num;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << ")";
  return os.str();
}

} // namespace satake
