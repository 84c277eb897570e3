#ifndef ZK_MATRIX_HPP
#define ZK_MATRIX_HPP

#include <Eigen/Core>

#include "zk/integer.hpp"

namespace zk {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

using Index = Eigen::Index;

/// True iff every entry is exactly zero (isZero() compares against a
/// precision, which is meaningless for integers).
template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != typename Derived::Scalar(0))
                return false;
    return true;
}

/// A * B, skipping zero entries of B.  Boundary matrices are mostly zero,
/// and Eigen's generic product copies every coefficient.
template <typename Scalar>
Matrix<Scalar> product(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
        for (Index k = 0; k < b.rows(); ++k)
        {
            const Scalar& x = b(k, j);
            if (x == Scalar(0))
                continue;
            for (Index i = 0; i < a.rows(); ++i)
                if (a(i, k) != Scalar(0))
                    out(i, j) += a(i, k) * x;
        }
    return out;
}

template <typename Scalar>
Vector<Scalar> product(const Matrix<Scalar>& a, const Vector<Scalar>& v)
{
    return product(a, Matrix<Scalar>(v)).col(0);
}

}   // namespace zk

#endif
