#pragma once

#include <Eigen/Core>

#include <limits>
#include <type_traits>

namespace intervalk {

// Dense (min, +) algebra over an ordered scalar. `unreachable<Scalar>()` is the
// semiring zero; sums never overflow because any term touching it is skipped.

template <typename Scalar>
using WalkMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IndexMatrix = Eigen::Matrix<Eigen::Index, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
constexpr Scalar unreachable() {
    return std::numeric_limits<Scalar>::max();
}

/// C = A (x) B in the (min, +) semiring; `via(i, j)` receives the middle index
/// of the optimal term, smallest index on ties, or -1 if C(i, j) is unreachable.
template <typename DerivedA, typename DerivedB>
WalkMatrix<typename DerivedA::Scalar> min_plus(const Eigen::MatrixBase<DerivedA>& a,
                                               const Eigen::MatrixBase<DerivedB>& b, IndexMatrix& via) {
    using Scalar = typename DerivedA::Scalar;
    static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>, "mixed scalar types");
    eigen_assert(a.cols() == b.rows());
    constexpr Scalar inf = unreachable<Scalar>();

    WalkMatrix<Scalar> c = WalkMatrix<Scalar>::Constant(a.rows(), b.cols(), inf);
    via = IndexMatrix::Constant(a.rows(), b.cols(), -1);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index mid = 0; mid < a.cols(); ++mid) {
            const Scalar head = a(i, mid);
            if (head == inf) {
                continue;
            }
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                const Scalar tail = b(mid, j);
                if (tail == inf) {
                    continue;
                }
                const Scalar cand = head + tail;
                if (cand < c(i, j)) {
                    c(i, j) = cand;
                    via(i, j) = mid;
                }
            }
        }
    }
    return c;
}

template <typename DerivedA, typename DerivedB>
WalkMatrix<typename DerivedA::Scalar> min_plus(const Eigen::MatrixBase<DerivedA>& a,
                                               const Eigen::MatrixBase<DerivedB>& b) {
    IndexMatrix via;
    return min_plus(a, b, via);
}

} // namespace intervalk
