#pragma once

#include <Eigen/Dense>

#include "rpnn/activation.hpp"
#include "rpnn/interval.hpp"

namespace rpnn {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Single-hidden-layer network with fixed internal parameters. Only the
/// readout (weights, offset) is trained. When `normalized` is set, inputs
/// are mapped to [-1,1] over `domain` before the hidden layer and outputs
/// are mapped back through `output_range`.
struct RpnnModel {
    Vector alphas;
    Vector betas;
    Vector weights;
    double offset = 0.0;
    Interval domain{-1.0, 1.0};
    Interval output_range{-1.0, 1.0};
    bool normalized = false;
    Activation activation{};

    Eigen::Index size() const { return alphas.size(); }

    /// Centers -beta_j/alpha_j of the sigmoid transitions.
    Vector centers() const;

    /// Checks length consistency and the pairwise independence condition
    /// (alpha_j, beta_j) != +/-(alpha_j', beta_j'). Throws on violation.
    void validate() const;
};

/// Collocation matrix: column 0 is all ones (offset column), column j >= 1
/// holds psi(alpha_j * x_i + beta_j) for each sample point x_i.
struct DesignMatrix {
    Matrix entries;
    Vector sample_points;
};

/// Hidden-layer response matrix (no offset column): B(i,j) = psi(a_j x_i + b_j).
Matrix basis_matrix(const Vector& alphas, const Vector& betas,
                    const Vector& points, const Activation& act = {});

/// Assembles the (n+1) x (N+1) collocation matrix. Sample points must be
/// pairwise distinct.
DesignMatrix build_design_matrix(const Vector& alphas, const Vector& betas,
                                 const Vector& sample_points,
                                 const Activation& act = {});

/// Network output at a single point. Throws std::domain_error for
/// non-finite x.
double evaluate(const RpnnModel& model, double x);

/// Network output on a batch of points (vectorized basis evaluation).
Vector evaluate_grid(const RpnnModel& model, const Vector& xs);

/// Equispaced grid of m points on [iv.lo, iv.hi], endpoints included.
Vector linspace(const Interval& iv, Eigen::Index m);

} // namespace rpnn
