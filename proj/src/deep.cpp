#include "rpnn/deep.hpp"

#include <cmath>
#include <stdexcept>

#include "rpnn/random.hpp"

namespace rpnn {

std::vector<Eigen::Index> DeepRpnnModel::layer_sizes() const {
    std::vector<Eigen::Index> sizes{alphas.size()};
    for (const auto& w : hidden_weights) sizes.push_back(w.rows());
    return sizes;
}

void DeepRpnnModel::validate() const {
    if (alphas.size() < 1 || alphas.size() != betas.size())
        throw std::invalid_argument("deep model: bad first-layer shape");
    if (hidden_weights.size() != hidden_biases.size())
        throw std::invalid_argument("deep model: weight/bias layer count mismatch");
    Eigen::Index prev = alphas.size();
    for (std::size_t i = 0; i < hidden_weights.size(); ++i) {
        if (hidden_weights[i].cols() != prev)
            throw std::invalid_argument("deep model: layer input size mismatch");
        if (hidden_biases[i].size() != hidden_weights[i].rows())
            throw std::invalid_argument("deep model: bias size mismatch");
        prev = hidden_weights[i].rows();
    }
    if (weights.size() != prev)
        throw std::invalid_argument("deep model: readout size mismatch");
}

Vector deep_basis(const DeepRpnnModel& model, double x) {
    Vector o(model.alphas.size());
    for (Eigen::Index j = 0; j < o.size(); ++j)
        o[j] = model.activation.value(model.alphas[j] * x + model.betas[j]);
    for (std::size_t i = 0; i < model.hidden_weights.size(); ++i) {
        Vector z = model.hidden_weights[i] * o + model.hidden_biases[i];
        o.resize(z.size());
        for (Eigen::Index j = 0; j < z.size(); ++j) o[j] = model.activation.value(z[j]);
    }
    return o;
}

double evaluate_deep(const DeepRpnnModel& model, double x) {
    if (!std::isfinite(x)) throw std::domain_error("evaluate_deep: x is not finite");
    return model.weights.dot(deep_basis(model, x)) + model.offset;
}

DeepRpnnModel make_deep_naive(const std::vector<Eigen::Index>& layer_sizes,
                              std::uint64_t seed) {
    if (layer_sizes.empty()) throw std::invalid_argument("deep model needs at least one layer");
    UniformSampler rng(seed);
    DeepRpnnModel m;
    m.alphas.resize(layer_sizes[0]);
    m.betas.resize(layer_sizes[0]);
    for (Eigen::Index j = 0; j < layer_sizes[0]; ++j) {
        m.alphas[j] = rng.symmetric(1.0);
        m.betas[j] = rng.symmetric(1.0);
    }
    for (std::size_t i = 1; i < layer_sizes.size(); ++i) {
        const Eigen::Index rows = layer_sizes[i], cols = layer_sizes[i - 1];
        const double scale = 1.0 / std::sqrt(static_cast<double>(cols));
        Matrix w(rows, cols);
        Vector b(rows);
        for (Eigen::Index r = 0; r < rows; ++r) {
            for (Eigen::Index c = 0; c < cols; ++c) w(r, c) = rng.symmetric(scale);
            b[r] = rng.symmetric(1.0);
        }
        m.hidden_weights.push_back(std::move(w));
        m.hidden_biases.push_back(std::move(b));
    }
    m.weights = Vector::Zero(layer_sizes.back());
    m.validate();
    return m;
}

} // namespace rpnn
