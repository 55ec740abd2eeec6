#pragma once

namespace swarmsim {

/// Exploration (w1) versus recruitment (w2) importance; w1 + w2 = 1.
struct Weights {
    double w1 = 0.5;
    double w2 = 0.5;

    static Weights from_w1(double w1) { return {w1, 1.0 - w1}; }

    /// Throws SimError(WeightConstraint) unless both are non-negative and
    /// sum to one within 1e-9.
    void validate() const;

    friend bool operator==(const Weights&, const Weights&) = default;
};

}  // namespace swarmsim
