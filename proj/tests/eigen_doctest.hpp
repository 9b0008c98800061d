#pragma once

#include <sstream>

#include <doctest.h>

#include "codim2/scalar.hpp"

namespace doctest {

template <typename S, int R, int C, int O, int MR, int MC>
struct StringMaker<Eigen::Matrix<S, R, C, O, MR, MC>>
{
  static String convert(Eigen::Matrix<S, R, C, O, MR, MC> const &m)
  {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
      if (i + 1 < m.rows()) os << "; ";
    }
    os << "]";
    return os.str().c_str();
  }
};

} // namespace doctest
