#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "alpharep/rational.hpp"

namespace alpharep {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;

template <class T>
inline bool is_zero_scalar(const T &x)
{
  return x == T(0);
}

template <class T>
struct Echelon {
  Mat<T> matrix;
  std::vector<Eigen::Index> pivots; // pivot column of each nonzero row
};

// Reduced row echelon form by exact elimination (first nonzero pivot).
template <class T>
Echelon<T> rref(Mat<T> m)
{
  Echelon<T> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!is_zero_scalar(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != row)
      m.row(piv).swap(m.row(row));
    T inv = T(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c)
      if (!is_zero_scalar(m(row, c)))
        m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero_scalar(m(r, col)))
        continue;
      T f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        if (!is_zero_scalar(m(row, c)))
          m(r, c) = m(r, c) - f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

template <class T>
Eigen::Index rank(const Mat<T> &m)
{
  return static_cast<Eigen::Index>(rref<T>(m).pivots.size());
}

// Columns form a basis of {x : m x = 0}.
template <class T>
Mat<T> nullspace(const Mat<T> &m)
{
  auto e = rref<T>(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c])
      free.push_back(c);
  Mat<T> ns = Mat<T>::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    ns(free[k], k) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      ns(e.pivots[r], k) = -e.matrix(r, free[k]);
  }
  return ns;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T> &m)
{
  if (m.rows() != m.cols())
    return std::nullopt;
  Eigen::Index n = m.rows();
  Mat<T> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat<T>::Identity(n, n);
  auto e = rref<T>(aug);
  if (e.pivots.size() < static_cast<std::size_t>(n) || e.pivots[n - 1] != n - 1)
    return std::nullopt;
  return Mat<T>(e.matrix.rightCols(n));
}

// Some x with a x = b, if one exists.
template <class T>
std::optional<Vec<T>> solve(const Mat<T> &a, const Vec<T> &b)
{
  Mat<T> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto e = rref<T>(aug);
  Vec<T> x = Vec<T>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols())
      return std::nullopt;
    x(e.pivots[r]) = e.matrix(r, a.cols());
  }
  return x;
}

template <class T>
bool is_zero_matrix(const Mat<T> &m)
{
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!is_zero_scalar(m(r, c)))
        return false;
  return true;
}

} // namespace alpharep
