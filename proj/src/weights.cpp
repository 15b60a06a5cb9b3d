#include "tangle/weights.hpp"

#include <cmath>

#include "tangle/errors.hpp"

namespace tangle {

WeightTable WeightTable::from_raw(std::span<const double> raw) {
    if (raw.empty()) throw AllZeroWeights();
    double sum = 0.0;
    for (double w : raw) {
        if (w < 0.0) throw NegativeWeight();
        sum += w;
    }
    if (sum <= 0.0) throw AllZeroWeights();
    std::vector<double> normalized(raw.begin(), raw.end());
    for (double& w : normalized) w /= sum;
    return WeightTable(std::move(normalized));
}

WeightTable WeightTable::zipf(std::size_t n_nodes, double s) {
    if (n_nodes == 0) throw AllZeroWeights();
    std::vector<double> raw(n_nodes);
    for (std::size_t r = 1; r <= n_nodes; ++r)
        raw[r - 1] = std::pow(static_cast<double>(r), -s);
    return from_raw(raw);
}

double WeightTable::weight(NodeId i) const {
    if (i >= weights_.size()) throw UnknownNode();
    return weights_[i];
}

double WeightTable::weight_of_set(std::span<const NodeId> nodes) const {
    double sum = 0.0;
    for (NodeId i : nodes) sum += weight(i);
    return sum;
}

double WeightTable::weight_of_mask(const Bitset& mask) const {
    double sum = 0.0;
    mask.for_each([&](std::size_t i) {
        if (i >= weights_.size()) throw UnknownNode();
        sum += weights_[i];
    });
    return sum;
}

}  // namespace tangle
