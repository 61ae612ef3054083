#pragma once

#include <cstdint>
#include <vector>

#include "rpnn/model.hpp"

namespace rpnn {

/// Stacked fixed-layer variant. Layer 1 applies (alphas, betas) to the
/// scalar input; layers 2..L apply fixed matrices hidden_weights[i] and
/// biases hidden_biases[i]. Only the final affine readout is trainable.
struct DeepRpnnModel {
    Vector alphas;
    Vector betas;
    std::vector<Matrix> hidden_weights; // W_i: N_{i+1} x N_i
    std::vector<Vector> hidden_biases;  // beta^(i+1)
    Vector weights;
    double offset = 0.0;
    Activation activation{};

    std::vector<Eigen::Index> layer_sizes() const;

    /// Throws std::invalid_argument when the layer shapes are inconsistent.
    void validate() const;
};

/// Feed-forward pass; the final layer is the affine readout.
double evaluate_deep(const DeepRpnnModel& model, double x);

/// Outputs of the last hidden layer (the deep basis functions) at x.
Vector deep_basis(const DeepRpnnModel& model, double x);

/// Builds a deep model with all fixed parameters drawn uniformly, scaled
/// by 1/sqrt(fan-in) per stacked layer. Readout starts at zero.
DeepRpnnModel make_deep_naive(const std::vector<Eigen::Index>& layer_sizes,
                              std::uint64_t seed);

} // namespace rpnn
