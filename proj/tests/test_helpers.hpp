#ifndef DWOP_TEST_HELPERS_HPP
#define DWOP_TEST_HELPERS_HPP

#include <complex>
#include <initializer_list>

#include "dwop/types.hpp"

namespace dwop_test {

using dwop::Matrixcd;
using cplx = std::complex<double>;

inline Matrixcd scalar(cplx a) { return Matrixcd::Constant(1, 1, a); }

inline Matrixcd mat(std::initializer_list<std::initializer_list<cplx>> rows) {
  const auto n = static_cast<dwop::Index>(rows.size());
  const auto m = static_cast<dwop::Index>(rows.begin()->size());
  Matrixcd A(n, m);
  dwop::Index i = 0;
  for (const auto& row : rows) {
    dwop::Index j = 0;
    for (cplx v : row) A(i, j++) = v;
    ++i;
  }
  return A;
}

inline Matrixcd diag(std::initializer_list<cplx> values) {
  const auto n = static_cast<dwop::Index>(values.size());
  Matrixcd A = Matrixcd::Zero(n, n);
  dwop::Index i = 0;
  for (cplx v : values) A(i, i) = v, ++i;
  return A;
}

}  // namespace dwop_test

#endif  // DWOP_TEST_HELPERS_HPP
