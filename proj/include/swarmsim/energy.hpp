#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "swarmsim/robot.hpp"

namespace swarmsim {

struct EnergyParams {
    double move_cost = 1.0;
    double stop_cost = 0.5;
    std::array<double, 5> turn_costs{0.0, 0.4, 0.6, 0.8, 1.0};  // 0, 45, 90, 135, 180 degrees
    double disarm_cost = 5.0;  // per coalition member, spread over the Execution steps
    int packet_bits = 256;
    double e_tx = 1e-12;   // J/bit/m^psi
    double e_cct = 1e-7;   // J/bit
    double e_rc = 1e-7;    // J/bit
    double psi = 2.0;
    double joule_to_unit = 1.0;
    double bit_rate = 3.0;  // carried for completeness; no cost depends on it
    double budget = 1000.0;

    void validate() const;

    friend bool operator==(const EnergyParams&, const EnergyParams&) = default;
};

enum class DebitCategory : std::uint8_t { Mobility, Tx, Rx, Disarm };

const char* to_string(DebitCategory c) noexcept;

/// Units for one step: a move costs move_cost plus the turn cost between
/// headings, staying costs stop_cost.
double movement_cost(const EnergyParams& params, Heading prev, Heading next, bool moved);

/// Transmit energy for one packet, l * (R_t^psi * e_tx + e_cct), in units.
double tx_cost(const EnergyParams& params, double transmission_range);

/// Receive energy for one packet, l * e_rc, in units.
double rx_cost(const EnergyParams& params);

struct DebitRecord {
    int step = 0;
    int robot = 0;
    DebitCategory category = DebitCategory::Mobility;
    double amount = 0.0;
};

class EnergyLedger {
public:
    explicit EnergyLedger(std::size_t robots = 0) : mobility_(robots, 0.0), coordination_(robots, 0.0) {}

    void record(int step, int robot, DebitCategory category, double amount);

    double mobility(int robot) const { return mobility_[static_cast<std::size_t>(robot)]; }
    double coordination(int robot) const { return coordination_[static_cast<std::size_t>(robot)]; }
    std::size_t robot_count() const noexcept { return mobility_.size(); }
    const std::vector<DebitRecord>& records() const noexcept { return records_; }

    /// CSV: step,robot_id,category,amount
    void write_csv(std::ostream& os) const;

private:
    std::vector<double> mobility_;
    std::vector<double> coordination_;
    std::vector<DebitRecord> records_;
};

/// Charges `amount` to the robot. With a finite budget the robot's energy is
/// decremented and clamped at zero; the caller retires robots at zero energy
/// at the end of the step. Returns the remaining energy.
double debit(EnergyLedger& ledger, Robot& robot, double amount, DebitCategory category, int step,
             bool finite_budget);

/// Total swarm consumption: sum of mobility and coordination totals.
double tesc(const EnergyLedger& ledger);

}  // namespace swarmsim
