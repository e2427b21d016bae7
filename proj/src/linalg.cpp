#include "qlev/linalg.hpp"

#include <stdexcept>

namespace qlev {

QqMatrix QqMatrix::augmented(const QqMatrix& o) const {
  if (o.rows_ != rows_) throw std::invalid_argument("augmented: row mismatch");
  QqMatrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.a_[i][j] = a_[i][j];
    for (int j = 0; j < o.cols_; ++j) r.a_[i][cols_ + j] = o.a_[i][j];
  }
  return r;
}

int QqMatrix::rank() const {
  std::vector<std::vector<RatFuncQ>> w = a_;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    // pick the smallest nonzero pivot to limit coefficient growth
    int piv = -1;
    long best = 0;
    for (int i = rank; i < rows_; ++i) {
      if (w[i][col].is_zero()) continue;
      long size = w[i][col].num().degree() + w[i][col].den().degree();
      if (piv < 0 || size < best) {
        piv = i;
        best = size;
      }
    }
    if (piv < 0) continue;
    std::swap(w[rank], w[piv]);
    RatFuncQ inv = w[rank][col].inverse();
    for (int j = col; j < cols_; ++j) w[rank][j] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || w[i][col].is_zero()) continue;
      RatFuncQ f = w[i][col];
      for (int j = col; j < cols_; ++j) w[i][j] -= f * w[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool in_column_span(const QqMatrix& m, const std::vector<RatFuncQ>& v) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("in_column_span: size mismatch");
  QqMatrix vm(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) vm.at(i, 0) = v[i];
  return m.rank() == m.augmented(vm).rank();
}

}  // namespace qlev
