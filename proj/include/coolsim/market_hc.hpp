#pragma once

#include <span>
#include <vector>

#include "coolsim/rng.hpp"

namespace coolsim {

enum class HcVariant { Original, NoMoney, NoTemperature, NoAuction };

struct HcParams {
    double alpha = 64.0;  // auction strength; scales total traded volume
    double u1 = 20.0;
    double u2 = 200.0;
    double u3 = 2000.0;
    double f_max = 3.0;
    HcVariant variant = HcVariant::Original;
};

struct Bid {
    int office = 0;
    bool sell = false;
    double volume = 0.0;
    double price = 0.0;
};

/// Cleared trade for one office; positive volume buys cooling power,
/// negative sells it. The marginal agent's volume may be fractional.
struct Fill {
    int office = 0;
    double signed_volume = 0.0;
};

struct AuctionOutcome {
    bool traded = false;
    double clearing_price = 0.0;  // seller acceptance cutoff
    double buyer_cutoff = 0.0;    // buyer acceptance cutoff (see clear_auction)
    std::vector<Fill> fills;
};

/// Everything a market step reads: latest temperatures, setpoints and
/// control signals, all indexed by office.
struct MarketSnapshot {
    std::span<const double> temps;
    std::span<const double> setpoints;
    std::span<const double> control;
};

/// Buy/sell classifier t = (setpoint/temp) * (mean_temp/mean_setpoint);
/// t > 1 sells, t < 1 buys, t = 1 abstains. Throws std::invalid_argument
/// ("degenerate temperature") when temp or mean_setpoint is zero.
double compute_t(double temp, double setpoint, double mean_temp, double mean_setpoint);

/// Request volumes v_o = alpha * |1 - t_o| / sum |1 - t|; they add up to
/// alpha whenever anyone wants to trade, and are all zero otherwise.
std::vector<double> trade_volumes(std::span<const double> t_values, double alpha);

/// Round money recomputed from the control signal, linear from 100 (valve
/// closed) to 200 (valve fully open). Nothing carries over between rounds.
double money(double f, double f_max);

/// U(0,m) = u3 - (u3-u1) e^(-gamma m) with gamma = ln((u3-u1)/(u3-u2)).
/// The NoMoney variant pins it to 2000. Throws std::invalid_argument
/// ("invalid utility constants") unless u1 < u2 < u3.
double u_zero(double m, const HcParams& params);

/// Bid price U(0,m)^(1 - t/setpoint).
double marginal_utility(double t, double setpoint, double m, const HcParams& params);

/// Builds the round's bids from a snapshot. Original prices come from
/// marginal_utility; NoMoney pins U(0,m); NoTemperature prices sellers at 10
/// and buyers at 100. Offices with t = 1 submit nothing.
std::vector<Bid> make_bids(const MarketSnapshot& snapshot, const HcParams& params);

/// Uniform-price call auction. Candidate prices are the distinct bid prices;
/// the chosen price minimizes the imbalance between sell volume at or below
/// it and buy volume at or above the next lower candidate (ties break to the
/// lowest price). Sellers with price <= clearing_price and buyers with
/// price >= buyer_cutoff trade; any residual imbalance is absorbed by
/// fractional fills of agents drawn uniformly from the surplus side. With
/// bids on only one side (or none) no trade happens.
AuctionOutcome clear_auction(std::span<const Bid> bids, SplitMix64& rng);

/// F' = F +/- filled volume, clamped to the valve bounds.
std::vector<double> apply_fills(std::span<const double> f_prev, std::span<const Fill> fills,
                                double f_min, double f_max);

/// The auction-free variant: every office applies its own request volume
/// directly, buyers adding and sellers subtracting, clamped to the bounds.
std::vector<double> no_auction_update(std::span<const double> f_prev,
                                      std::span<const double> t_values, double alpha,
                                      double f_min, double f_max);

} // namespace coolsim
