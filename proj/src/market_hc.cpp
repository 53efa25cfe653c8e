#include "coolsim/market_hc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coolsim {

namespace {

constexpr double kBalanceTol = 1e-12;

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

} // namespace

double compute_t(double temp, double setpoint, double mean_temp, double mean_setpoint) {
    if (temp == 0.0 || mean_setpoint == 0.0)
        throw std::invalid_argument("degenerate temperature");
    return (setpoint / temp) * (mean_temp / mean_setpoint);
}

std::vector<double> trade_volumes(std::span<const double> t_values, double alpha) {
    double total = 0.0;
    for (double t : t_values) total += std::abs(1.0 - t);
    std::vector<double> v(t_values.size(), 0.0);
    if (total == 0.0) return v;  // nobody wants to trade this round
    for (std::size_t o = 0; o < t_values.size(); ++o)
        v[o] = alpha * std::abs(1.0 - t_values[o]) / total;
    return v;
}

double money(double f, double f_max) {
    return 100.0 * (2.0 - (f_max - f) / f_max);
}

double u_zero(double m, const HcParams& params) {
    if (params.variant == HcVariant::NoMoney) return 2000.0;
    if (!(params.u1 < params.u2 && params.u2 < params.u3))
        throw std::invalid_argument("invalid utility constants");
    const double gamma = std::log((params.u3 - params.u1) / (params.u3 - params.u2));
    return params.u3 - (params.u3 - params.u1) * std::exp(-gamma * m);
}

double marginal_utility(double t, double setpoint, double m, const HcParams& params) {
    return std::pow(u_zero(m, params), 1.0 - t / setpoint);
}

std::vector<Bid> make_bids(const MarketSnapshot& snapshot, const HcParams& params) {
    const double mean_temp = mean_of(snapshot.temps);
    const double mean_setp = mean_of(snapshot.setpoints);

    std::vector<double> t(snapshot.temps.size());
    for (std::size_t o = 0; o < t.size(); ++o)
        t[o] = compute_t(snapshot.temps[o], snapshot.setpoints[o], mean_temp, mean_setp);
    const std::vector<double> volumes = trade_volumes(t, params.alpha);

    std::vector<Bid> bids;
    bids.reserve(t.size());
    for (std::size_t o = 0; o < t.size(); ++o) {
        if (t[o] == 1.0) continue;
        Bid b;
        b.office = static_cast<int>(o);
        b.sell = t[o] > 1.0;
        b.volume = volumes[o];
        if (params.variant == HcVariant::NoTemperature) {
            b.price = b.sell ? 10.0 : 100.0;
        } else {
            const double m = money(snapshot.control[o], params.f_max);
            b.price = marginal_utility(t[o], snapshot.setpoints[o], m, params);
        }
        bids.push_back(b);
    }
    return bids;
}

AuctionOutcome clear_auction(std::span<const Bid> bids, SplitMix64& rng) {
    AuctionOutcome out;

    bool any_sell = false, any_buy = false;
    for (const Bid& b : bids) (b.sell ? any_sell : any_buy) = true;
    if (!any_sell || !any_buy) return out;  // one-sided market: no trade

    std::vector<double> prices;
    prices.reserve(bids.size());
    for (const Bid& b : bids) prices.push_back(b.price);
    std::sort(prices.begin(), prices.end());
    prices.erase(std::unique(prices.begin(), prices.end()), prices.end());

    // For each candidate price, sellers at or below it are matched against
    // buyers at or above the next lower candidate. Pairing the buy cutoff one
    // step below the sell cutoff is what balances supply and demand when the
    // schedules cross between two bid prices.
    double best_imbalance = 0.0;
    std::size_t best = prices.size();
    for (std::size_t j = 0; j < prices.size(); ++j) {
        const double sell_cut = prices[j];
        const double buy_cut = j > 0 ? prices[j - 1] : prices[0];
        double supply = 0.0, demand = 0.0;
        for (const Bid& b : bids) {
            if (b.sell && b.price <= sell_cut) supply += b.volume;
            if (!b.sell && b.price >= buy_cut) demand += b.volume;
        }
        const double imbalance = std::abs(supply - demand);
        if (best == prices.size() || imbalance < best_imbalance) {
            best = j;
            best_imbalance = imbalance;
        }
    }

    out.clearing_price = prices[best];
    out.buyer_cutoff = best > 0 ? prices[best - 1] : prices[0];

    double supply = 0.0, demand = 0.0;
    for (const Bid& b : bids) {
        if (b.sell && b.price <= out.clearing_price) {
            out.fills.push_back({b.office, -b.volume});
            supply += b.volume;
        } else if (!b.sell && b.price >= out.buyer_cutoff) {
            out.fills.push_back({b.office, b.volume});
            demand += b.volume;
        }
    }
    if (out.fills.empty()) return out;

    // Ration the surplus side down to exact balance: draw an agent uniformly
    // from those still holding volume and shave off what it can absorb. In
    // the normal case of a small residual this touches a single agent, which
    // then delivers only a fraction of its bid.
    const bool surplus_is_sell = supply > demand;
    double residual = std::abs(supply - demand);
    while (residual > kBalanceTol) {
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < out.fills.size(); ++i) {
            const bool is_sell = out.fills[i].signed_volume < 0.0;
            if (is_sell == surplus_is_sell && std::abs(out.fills[i].signed_volume) > 0.0)
                candidates.push_back(i);
        }
        if (candidates.empty()) break;  // cannot happen with residual > 0
        Fill& f = out.fills[candidates[rng.next_index(candidates.size())]];
        const double cut = std::min(std::abs(f.signed_volume), residual);
        f.signed_volume += f.signed_volume < 0.0 ? cut : -cut;
        residual -= cut;
    }

    std::erase_if(out.fills, [](const Fill& f) { return f.signed_volume == 0.0; });
    out.traded = !out.fills.empty();
    return out;
}

std::vector<double> apply_fills(std::span<const double> f_prev, std::span<const Fill> fills,
                                double f_min, double f_max) {
    std::vector<double> f(f_prev.begin(), f_prev.end());
    for (const Fill& fill : fills) {
        const auto o = static_cast<std::size_t>(fill.office);
        f[o] = std::clamp(f[o] + fill.signed_volume, f_min, f_max);
    }
    return f;
}

std::vector<double> no_auction_update(std::span<const double> f_prev,
                                      std::span<const double> t_values, double alpha,
                                      double f_min, double f_max) {
    const std::vector<double> v = trade_volumes(t_values, alpha);
    std::vector<double> f(f_prev.begin(), f_prev.end());
    for (std::size_t o = 0; o < f.size(); ++o) {
        if (t_values[o] > 1.0)
            f[o] -= v[o];
        else if (t_values[o] < 1.0)
            f[o] += v[o];
        f[o] = std::clamp(f[o], f_min, f_max);
    }
    return f;
}

} // namespace coolsim
