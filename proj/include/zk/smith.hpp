/**
 * Smith normal form over the integers, for any exact integer scalar
 * (zk::Integer for production use, built-in integers in tests).
 *
 * Pivoting takes the entry of smallest nonzero absolute value in the active
 * block; the diagonal is canonical, so the pivot rule only affects speed and
 * the particular U, V returned.
 */
#ifndef ZK_SMITH_HPP
#define ZK_SMITH_HPP

#include <cstdlib>
#include <utility>
#include <vector>

#include "zk/matrix.hpp"

namespace zk {

template <typename Scalar>
struct SmithDecomposition
{
    /// U * A * V == D.  U_inv, V_inv are the exact inverses (empty unless
    /// transforms were requested).
    Matrix<Scalar> U, U_inv, D, V, V_inv;
    /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
    std::vector<Scalar> diagonal;

    Index rank() const { return static_cast<Index>(diagonal.size()); }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x)
{
    using std::abs;
    return abs(x);
}

template <typename Scalar>
class SmithReducer
{
    public:
        SmithReducer(Matrix<Scalar> a, bool track) : a_(std::move(a)), track_(track)
        {
            if (track_)
            {
                u_ = Matrix<Scalar>::Identity(a_.rows(), a_.rows());
                u_inv_ = u_;
                v_ = Matrix<Scalar>::Identity(a_.cols(), a_.cols());
                v_inv_ = v_;
            }
        }

        SmithDecomposition<Scalar> run()
        {
            const Index steps = std::min(a_.rows(), a_.cols());
            std::vector<Scalar> diagonal;
            for (Index t = 0; t < steps; ++t)
            {
                Index pi, pj;
                if (!smallest_in_block(t, pi, pj))
                    break;
                swap_rows(t, pi);
                swap_cols(t, pj);
                reduce_pivot(t);
                if (a_(t, t) < Scalar(0))
                    negate_row(t);
                diagonal.push_back(a_(t, t));
            }
            SmithDecomposition<Scalar> out;
            out.D = std::move(a_);
            out.U = std::move(u_);
            out.U_inv = std::move(u_inv_);
            out.V = std::move(v_);
            out.V_inv = std::move(v_inv_);
            out.diagonal = std::move(diagonal);
            return out;
        }

    private:
        Matrix<Scalar> a_, u_, u_inv_, v_, v_inv_;
        bool track_;

        bool smallest_in_block(Index t, Index& pi, Index& pj) const
        {
            bool found = false;
            Scalar best{};
            for (Index j = t; j < a_.cols(); ++j)
                for (Index i = t; i < a_.rows(); ++i)
                {
                    if (a_(i, j) == Scalar(0))
                        continue;
                    Scalar v = abs_value(a_(i, j));
                    if (!found || v < best)
                    {
                        found = true;
                        best = v;
                        pi = i;
                        pj = j;
                        if (best == Scalar(1))
                            return true;
                    }
                }
            return found;
        }

        // Clear row t and column t outside the pivot, then enforce that the
        // pivot divides the whole remaining block.
        void reduce_pivot(Index t)
        {
            for (;;)
            {
                bool clean = true;
                for (Index i = t + 1; i < a_.rows(); ++i)
                {
                    if (a_(i, t) == Scalar(0))
                        continue;
                    Scalar q = a_(i, t) / a_(t, t);
                    if (q != Scalar(0))
                        add_row(i, t, -q);
                    if (a_(i, t) != Scalar(0))
                        clean = false;
                }
                for (Index j = t + 1; j < a_.cols(); ++j)
                {
                    if (a_(t, j) == Scalar(0))
                        continue;
                    Scalar q = a_(t, j) / a_(t, t);
                    if (q != Scalar(0))
                        add_col(j, t, -q);
                    if (a_(t, j) != Scalar(0))
                        clean = false;
                }
                if (!clean)
                {
                    move_smallest_remainder_to_pivot(t);
                    continue;
                }
                Index bad_row = -1;
                for (Index j = t + 1; j < a_.cols() && bad_row < 0; ++j)
                    for (Index i = t + 1; i < a_.rows(); ++i)
                        if (a_(i, j) % a_(t, t) != Scalar(0))
                        {
                            bad_row = i;
                            break;
                        }
                if (bad_row < 0)
                    return;
                add_row(t, bad_row, Scalar(1));
            }
        }

        void move_smallest_remainder_to_pivot(Index t)
        {
            Index best_i = t, best_j = t;
            Scalar best = abs_value(a_(t, t));
            for (Index i = t + 1; i < a_.rows(); ++i)
                if (a_(i, t) != Scalar(0) && abs_value(a_(i, t)) < best)
                {
                    best = abs_value(a_(i, t));
                    best_i = i;
                    best_j = t;
                }
            for (Index j = t + 1; j < a_.cols(); ++j)
                if (a_(t, j) != Scalar(0) && abs_value(a_(t, j)) < best)
                {
                    best = abs_value(a_(t, j));
                    best_i = t;
                    best_j = j;
                }
            swap_rows(t, best_i);
            swap_cols(t, best_j);
        }

        // row_i += c * row_j
        void add_row(Index i, Index j, const Scalar& c)
        {
            for (Index k = 0; k < a_.cols(); ++k)
                if (a_(j, k) != Scalar(0))
                    a_(i, k) += c * a_(j, k);
            if (!track_)
                return;
            for (Index k = 0; k < u_.cols(); ++k)
                if (u_(j, k) != Scalar(0))
                    u_(i, k) += c * u_(j, k);
            for (Index k = 0; k < u_inv_.rows(); ++k)
                if (u_inv_(k, i) != Scalar(0))
                    u_inv_(k, j) -= c * u_inv_(k, i);
        }

        // col_i += c * col_j
        void add_col(Index i, Index j, const Scalar& c)
        {
            for (Index k = 0; k < a_.rows(); ++k)
                if (a_(k, j) != Scalar(0))
                    a_(k, i) += c * a_(k, j);
            if (!track_)
                return;
            for (Index k = 0; k < v_.rows(); ++k)
                if (v_(k, j) != Scalar(0))
                    v_(k, i) += c * v_(k, j);
            for (Index k = 0; k < v_inv_.cols(); ++k)
                if (v_inv_(i, k) != Scalar(0))
                    v_inv_(j, k) -= c * v_inv_(i, k);
        }

        void swap_rows(Index i, Index j)
        {
            if (i == j)
                return;
            a_.row(i).swap(a_.row(j));
            if (!track_)
                return;
            u_.row(i).swap(u_.row(j));
            u_inv_.col(i).swap(u_inv_.col(j));
        }

        void swap_cols(Index i, Index j)
        {
            if (i == j)
                return;
            a_.col(i).swap(a_.col(j));
            if (!track_)
                return;
            v_.col(i).swap(v_.col(j));
            v_inv_.row(i).swap(v_inv_.row(j));
        }

        void negate_row(Index i)
        {
            for (Index k = 0; k < a_.cols(); ++k)
                a_(i, k) = -a_(i, k);
            if (!track_)
                return;
            for (Index k = 0; k < u_.cols(); ++k)
                u_(i, k) = -u_(i, k);
            for (Index k = 0; k < u_inv_.rows(); ++k)
                u_inv_(k, i) = -u_inv_(k, i);
        }
};

}   // namespace detail

/**
 * Smith normal form U * A * V = D with unimodular U, V.  With
 * with_transforms == false only D and the diagonal are filled in.
 */
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& a, bool with_transforms = true)
{
    return detail::SmithReducer<Scalar>(a, with_transforms).run();
}

/// Nonzero invariant factors of A.
template <typename Scalar>
std::vector<Scalar> invariant_factors(const Matrix<Scalar>& a)
{
    return smith_normal_form(a, false).diagonal;
}

}   // namespace zk

#endif
