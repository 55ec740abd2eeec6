#include "swarmsim/energy.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "swarmsim/error.hpp"
#include "swarmsim/format.hpp"

namespace swarmsim {

void EnergyParams::validate() const {
    auto non_negative = [](double v, const char* key) {
        if (!(v >= 0.0)) throw SimError(ErrorKind::Validation, std::string(key) + " must be >= 0");
    };
    non_negative(move_cost, "energy.move_cost");
    non_negative(stop_cost, "energy.stop_cost");
    for (double t : turn_costs) non_negative(t, "energy.turn_costs");
    non_negative(disarm_cost, "energy.disarm_cost");
    non_negative(packet_bits, "energy.packet_bits");
    non_negative(e_tx, "energy.e_tx");
    non_negative(e_cct, "energy.e_cct");
    non_negative(e_rc, "energy.e_rc");
    non_negative(joule_to_unit, "energy.joule_to_unit");
    non_negative(bit_rate, "energy.bit_rate");
    non_negative(budget, "energy.budget");
    if (!(psi >= 2.0 && psi <= 6.0)) throw SimError(ErrorKind::Validation, "energy.psi must lie in [2,6]");
}

const char* to_string(DebitCategory c) noexcept {
    switch (c) {
        case DebitCategory::Mobility: return "mobility";
        case DebitCategory::Tx: return "tx";
        case DebitCategory::Rx: return "rx";
        case DebitCategory::Disarm: return "disarm";
    }
    return "?";
}

double movement_cost(const EnergyParams& params, Heading prev, Heading next, bool moved) {
    if (!moved) return params.stop_cost;
    return params.move_cost + params.turn_costs[static_cast<std::size_t>(turn_steps(prev, next))];
}

double tx_cost(const EnergyParams& params, double transmission_range) {
    const double joules =
        params.packet_bits * (std::pow(transmission_range, params.psi) * params.e_tx + params.e_cct);
    return joules * params.joule_to_unit;
}

double rx_cost(const EnergyParams& params) { return params.packet_bits * params.e_rc * params.joule_to_unit; }

void EnergyLedger::record(int step, int robot, DebitCategory category, double amount) {
    if (amount < 0.0) throw std::logic_error("negative debit");
    const auto k = static_cast<std::size_t>(robot);
    if (category == DebitCategory::Mobility) {
        mobility_[k] += amount;
    } else {
        coordination_[k] += amount;
    }
    records_.push_back({step, robot, category, amount});
}

void EnergyLedger::write_csv(std::ostream& os) const {
    os << "step,robot_id,category,amount\n";
    for (const DebitRecord& r : records_) {
        os << r.step << ',' << r.robot << ',' << to_string(r.category) << ',' << format_double(r.amount) << '\n';
    }
}

double debit(EnergyLedger& ledger, Robot& robot, double amount, DebitCategory category, int step,
             bool finite_budget) {
    if (!robot.alive()) throw std::logic_error("debit on a dead robot");
    ledger.record(step, robot.id, category, amount);
    if (finite_budget) robot.energy = std::max(0.0, robot.energy - amount);
    return robot.energy;
}

double tesc(const EnergyLedger& ledger) {
    double mob = 0.0;
    double coord = 0.0;
    for (std::size_t k = 0; k < ledger.robot_count(); ++k) {
        mob += ledger.mobility(static_cast<int>(k));
        coord += ledger.coordination(static_cast<int>(k));
    }
    return mob + coord;
}

}  // namespace swarmsim
