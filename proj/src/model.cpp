#include "rpnn/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rpnn {

Vector RpnnModel::centers() const {
    Vector c(alphas.size());
    for (Eigen::Index j = 0; j < alphas.size(); ++j) c[j] = -betas[j] / alphas[j];
    return c;
}

void RpnnModel::validate() const {
    const Eigen::Index n = alphas.size();
    if (n < 1) throw std::invalid_argument("model has no neurons");
    if (betas.size() != n || weights.size() != n)
        throw std::invalid_argument("alphas/betas/weights length mismatch");
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const bool same = alphas[i] == alphas[j] && betas[i] == betas[j];
            const bool mirrored = alphas[i] == -alphas[j] && betas[i] == -betas[j];
            if (same || mirrored)
                throw std::invalid_argument("internal parameter pairs are not independent");
        }
}

Matrix basis_matrix(const Vector& alphas, const Vector& betas,
                    const Vector& points, const Activation& act) {
    if (alphas.size() != betas.size())
        throw std::invalid_argument("alphas/betas length mismatch");
    (void)act; // only the logistic sigmoid ships
    Matrix z = points * alphas.transpose();
    z.rowwise() += betas.transpose();
    // stable sigmoid, vectorized: exp is taken of -|z| only
    Eigen::ArrayXXd e = (-z.array().abs()).exp();
    return (z.array() >= 0.0).select(1.0 / (1.0 + e), e / (1.0 + e));
}

DesignMatrix build_design_matrix(const Vector& alphas, const Vector& betas,
                                 const Vector& sample_points, const Activation& act) {
    std::vector<double> sorted(sample_points.data(), sample_points.data() + sample_points.size());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("sample points must be pairwise distinct");

    DesignMatrix dm;
    dm.sample_points = sample_points;
    dm.entries.resize(sample_points.size(), alphas.size() + 1);
    dm.entries.col(0).setOnes();
    dm.entries.rightCols(alphas.size()) = basis_matrix(alphas, betas, sample_points, act);
    return dm;
}

double evaluate(const RpnnModel& model, double x) {
    if (!std::isfinite(x)) throw std::domain_error("evaluate: x is not finite");
    const double t = model.normalized ? to_unit(model.domain, x) : x;
    double acc = model.offset;
    for (Eigen::Index j = 0; j < model.size(); ++j)
        acc += model.weights[j] * model.activation.value(model.alphas[j] * t + model.betas[j]);
    return model.normalized ? from_unit(model.output_range, acc) : acc;
}

Vector evaluate_grid(const RpnnModel& model, const Vector& xs) {
    Vector t = xs;
    if (model.normalized)
        for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = to_unit(model.domain, t[i]);
    Vector out = basis_matrix(model.alphas, model.betas, t, model.activation) * model.weights;
    out.array() += model.offset;
    if (model.normalized)
        for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = from_unit(model.output_range, out[i]);
    return out;
}

Vector linspace(const Interval& iv, Eigen::Index m) {
    if (m < 2) {
        Vector single(1);
        single[0] = iv.midpoint();
        return single;
    }
    Vector v(m);
    const double h = iv.width() / static_cast<double>(m - 1);
    for (Eigen::Index i = 0; i < m; ++i) v[i] = iv.lo + h * static_cast<double>(i);
    v[m - 1] = iv.hi;
    return v;
}

} // namespace rpnn
