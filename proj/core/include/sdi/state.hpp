#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>

namespace sdi {

class RngStream;

enum class StateKind { Vector, SymmetricMatrix };

// State of the inclusion. Plain vectors are stored as-is; symmetric matrix
// states are stored as the row-major upper-triangular flattening of X
// (n(n+1)/2 entries) plus a shape tag, so every downstream module handles a
// single state type.
class StateVector {
public:
    StateVector() = default;

    static StateVector vector(Eigen::VectorXd coords);
    static StateVector scalar(double x);

    // Packs a symmetric matrix; rejects asymmetry beyond sym_tol.
    static StateVector symmetric_matrix(const Eigen::MatrixXd& X,
                                        double sym_tol = 1e-12);

    StateKind kind() const { return kind_; }
    bool is_matrix() const { return kind_ == StateKind::SymmetricMatrix; }

    // Length of the packed coordinate vector.
    int dim() const { return static_cast<int>(coords_.size()); }

    // Matrix order n for matrix-tagged states; 0 otherwise.
    int matrix_order() const { return order_; }

    const Eigen::VectorXd& coords() const { return coords_; }
    double scalar_value() const;

    Eigen::MatrixXd to_matrix() const;
    double trace() const;

    // All leading principal minors strictly positive.
    bool is_positive_definite() const;

    std::string to_string() const;

private:
    Eigen::VectorXd coords_;
    StateKind kind_ = StateKind::Vector;
    int order_ = 0;
};

// Packed length n(n+1)/2 for an n x n symmetric matrix.
int packed_size(int order);

// Inverse of packed_size; throws ModelError if m is not triangular.
int order_from_packed(int m);

using StateSampler = std::function<StateVector(RngStream&)>;

} // namespace sdi
