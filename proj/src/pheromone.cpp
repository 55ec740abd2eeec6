#include "swarmsim/pheromone.hpp"

#include <ostream>

#include "swarmsim/error.hpp"
#include "swarmsim/format.hpp"

namespace swarmsim {

void PheromoneParams::validate() const {
    if (!(rho >= 0.0 && rho <= 1.0)) throw SimError(ErrorKind::Validation, "pheromone.rho must lie in [0,1]");
    if (!(delta_tau0 > 0.0)) throw SimError(ErrorKind::Validation, "pheromone.delta_tau0 must be positive");
    if (!(a1 > 0.0)) throw SimError(ErrorKind::Validation, "pheromone.a1 must be positive");
    if (!(a2 > 0.0)) throw SimError(ErrorKind::Validation, "pheromone.a2 must be positive");
    if (sensing_range < 0) throw SimError(ErrorKind::Validation, "pheromone.sensing_range must be >= 0");
}

PheromoneField::PheromoneField(int m, int n, PheromoneParams params)
    : m_(m), n_(n), params_(params), levels_(static_cast<std::size_t>(m) * n, 0.0) {
    params_.validate();
}

void PheromoneField::evaporate() {
    const double keep = 1.0 - params_.rho;
    for (double& v : levels_) v *= keep;
}

void PheromoneField::step_update(std::span<const Increments> deposits) {
    evaporate();
    for (const Increments& inc : deposits) {
        for (const Deposit& d : inc) levels_[index(d.cell)] += d.amount;
    }
}

void PheromoneField::write_csv(std::ostream& os) const {
    for (int y = 1; y <= n_; ++y) {
        for (int x = 1; x <= m_; ++x) {
            if (x > 1) os << ',';
            os << format_double(levels_[index({x, y})]);
        }
        os << '\n';
    }
}

}  // namespace swarmsim
