#include "sdi/state.hpp"

#include "sdi/errors.hpp"

#include <cmath>
#include <sstream>

namespace sdi {

int packed_size(int order) {
    return order * (order + 1) / 2;
}

int order_from_packed(int m) {
    const int n = static_cast<int>((std::sqrt(8.0 * m + 1.0) - 1.0) / 2.0 + 0.5);
    if (packed_size(n) != m) {
        throw ModelError("packed length " + std::to_string(m) +
                         " is not triangular");
    }
    return n;
}

StateVector StateVector::vector(Eigen::VectorXd coords) {
    if (coords.size() < 1) {
        throw ModelError("state dimension must be >= 1");
    }
    StateVector s;
    s.coords_ = std::move(coords);
    s.kind_ = StateKind::Vector;
    return s;
}

StateVector StateVector::scalar(double x) {
    return vector(Eigen::VectorXd::Constant(1, x));
}

StateVector StateVector::symmetric_matrix(const Eigen::MatrixXd& X, double sym_tol) {
    if (X.rows() != X.cols() || X.rows() < 1) {
        throw ModelError("matrix state must be square and nonempty");
    }
    const int n = static_cast<int>(X.rows());
    if ((X - X.transpose()).cwiseAbs().maxCoeff() > sym_tol) {
        throw ModelError("matrix state is not symmetric within tolerance");
    }
    StateVector s;
    s.kind_ = StateKind::SymmetricMatrix;
    s.order_ = n;
    s.coords_.resize(packed_size(n));
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            s.coords_[idx++] = 0.5 * (X(i, j) + X(j, i));
        }
    }
    return s;
}

double StateVector::scalar_value() const {
    if (dim() != 1 || kind_ != StateKind::Vector) {
        throw ModelError("state is not scalar");
    }
    return coords_[0];
}

Eigen::MatrixXd StateVector::to_matrix() const {
    if (kind_ != StateKind::SymmetricMatrix) {
        throw ModelError("state is not matrix-tagged");
    }
    Eigen::MatrixXd X(order_, order_);
    int idx = 0;
    for (int i = 0; i < order_; ++i) {
        for (int j = i; j < order_; ++j) {
            X(i, j) = coords_[idx];
            X(j, i) = coords_[idx];
            ++idx;
        }
    }
    return X;
}

double StateVector::trace() const {
    if (kind_ != StateKind::SymmetricMatrix) {
        throw ModelError("trace requested for non-matrix state");
    }
    double t = 0.0;
    int idx = 0;
    for (int i = 0; i < order_; ++i) {
        t += coords_[idx];
        idx += order_ - i;
    }
    return t;
}

bool StateVector::is_positive_definite() const {
    const Eigen::MatrixXd X = to_matrix();
    for (int k = 1; k <= order_; ++k) {
        if (X.topLeftCorner(k, k).determinant() <= 0.0) {
            return false;
        }
    }
    return true;
}

std::string StateVector::to_string() const {
    std::ostringstream os;
    os << (is_matrix() ? "sym" : "vec") << "[";
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << coords_[i];
    }
    os << "]";
    return os.str();
}

} // namespace sdi
