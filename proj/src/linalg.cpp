#include "bfaelm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace bfaelm {

Matrix least_squares_solve(const Matrix& H, const Matrix& T) {
    if (H.rows() != T.rows())
        throw std::invalid_argument("least_squares_solve: H and T row counts differ");
    H.require_finite();
    T.require_finite();

    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMajor> h(H.data().data(), static_cast<Eigen::Index>(H.rows()),
                                 static_cast<Eigen::Index>(H.cols()));
    Eigen::Map<const RowMajor> t(T.data().data(), static_cast<Eigen::Index>(T.rows()),
                                 static_cast<Eigen::Index>(T.cols()));

    Eigen::BDCSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double eps = std::numeric_limits<double>::epsilon();
    svd.setThreshold(static_cast<double>(std::max(H.rows(), H.cols())) * eps);
    Eigen::MatrixXd beta = svd.solve(t);

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(beta.size()));
    for (Eigen::Index i = 0; i < beta.rows(); ++i)
        for (Eigen::Index j = 0; j < beta.cols(); ++j) out.push_back(beta(i, j));
    return Matrix(H.cols(), T.cols(), std::move(out));
}

}  // namespace bfaelm
