#pragma once

#include <vector>

#include "qlev/ratfunc.hpp"

namespace qlev {

// Dense matrix over Q(q) with exact Gaussian elimination. Sizes here are
// small (index-truncated slices), so simplicity beats asymptotics.
class QqMatrix {
 public:
  QqMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<RatFuncQ>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatFuncQ& at(int i, int j) { return a_[i][j]; }
  const RatFuncQ& at(int i, int j) const { return a_[i][j]; }

  // appends the columns of `o` on the right
  QqMatrix augmented(const QqMatrix& o) const;

  int rank() const;

 private:
  int rows_, cols_;
  std::vector<std::vector<RatFuncQ>> a_;
};

// Is v in the column span of M?  Decided by a rank comparison.
bool in_column_span(const QqMatrix& m, const std::vector<RatFuncQ>& v);

}  // namespace qlev
