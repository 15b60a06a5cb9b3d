#pragma once

#include <span>
#include <vector>

#include "tangle/bitset.hpp"
#include "tangle/ids.hpp"

namespace tangle {

// Normalized per-node voting weights. Immutable after construction; the same
// table drives both validation weight and issuance rates.
class WeightTable {
public:
    // Normalizes the raw entries; node i maps to entry i.
    static WeightTable from_raw(std::span<const double> raw);

    // Rank-r node (r = index + 1) gets weight r^-s / sum_j j^-s.
    static WeightTable zipf(std::size_t n_nodes, double s);

    std::size_t size() const { return weights_.size(); }

    double weight(NodeId i) const;

    double weight_of_set(std::span<const NodeId> nodes) const;

    // Sum of weights over the set bits; the mask must not exceed size().
    double weight_of_mask(const Bitset& mask) const;

    std::span<const double> weights() const { return weights_; }

private:
    explicit WeightTable(std::vector<double> normalized) : weights_(std::move(normalized)) {}
    std::vector<double> weights_;
};

inline constexpr double kWeightNormalizationTolerance = 1e-12;

}  // namespace tangle
