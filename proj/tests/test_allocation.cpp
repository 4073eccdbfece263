#include <catch2/catch_amalgamated.hpp>

#include "ris/allocation.hpp"
#include "support.hpp"

using namespace ris;
using testsup::rel_diff;
namespace ex = testsup::expected;

namespace {
const SystemParams kDefaults = default_params();
const ChannelGains kGains = channel_gains(kDefaults);
const double kC = available_power(kDefaults);

// the two noise-gain products the optimizer balances
double product_x(const SystemParams& p, const ChannelGains& g) { return p.sigma_r2 * g.h_rd2; }
double product_y(const SystemParams& p, const ChannelGains& g) { return p.sigma2 * g.h_sr2; }
}  // namespace

TEST_CASE("equal noise-gain products split the power in half", "[allocation]") {
  const ChannelGains symmetric{1e-7, 1e-7};
  const auto r = optimal_bs_power(2.0, kDefaults, symmetric);
  CHECK(r.branch == AllocationBranch::equal_split);
  CHECK(r.p_bs_star == 1.0);
  CHECK(r.p_ris_star == 1.0);
}

TEST_CASE("optimal split at the defaults", "[allocation]") {
  const auto r = optimal_bs_power(kC, kDefaults, kGains);
  CHECK(r.branch == AllocationBranch::closed_form);
  CHECK(rel_diff(r.p_bs_star, ex::p_bs_star) < 1e-12);
  CHECK(rel_diff(r.p_ris_star, ex::p_ris_star) < 1e-12);
  CHECK(rel_diff(r.rho2_star, ex::rho2_star) < 1e-9);
  CHECK(rel_diff(r.snr_star, ex::gamma_act) < 1e-9);
  CHECK(rel_diff(r.p_bs_star + r.p_ris_star, kC) < 1e-12);
}

TEST_CASE("non-positive available power is infeasible, not an error", "[allocation]") {
  const auto r = optimal_bs_power(0.0, kDefaults, kGains);
  CHECK(r.branch == AllocationBranch::infeasible);
  CHECK(r.p_bs_star == 0.0);
  CHECK(r.snr_star == 0.0);
}

TEST_CASE("closed form stays continuous through the degeneracy", "[allocation]") {
  // shrink the product gap toward zero: the closed form must approach c/2
  const double c = 2.0;
  for (double gap : {1e-3, 1e-5, 1e-7}) {
    const ChannelGains g{1e-7, 1e-7 * (1.0 + gap)};
    const auto r = optimal_bs_power(c, kDefaults, g);
    CHECK(r.branch == AllocationBranch::closed_form);
    CHECK(std::abs(r.p_bs_star - 0.5 * c) < 10.0 * gap * c);
  }
  const ChannelGains below_tol{1e-7, 1e-7 * (1.0 + 1e-10)};
  CHECK(optimal_bs_power(c, kDefaults, below_tol).branch == AllocationBranch::equal_split);
}

TEST_CASE("vanishing RIS noise pushes all power to the RIS", "[allocation]") {
  SystemParams p = kDefaults;
  p.sigma_r2 = 1e-30;
  const auto r = optimal_bs_power(kC, p, kGains);
  CHECK(r.p_bs_star > 0.0);
  CHECK(r.p_bs_star < 1e-6 * kC);
}

TEST_CASE("grid search agrees with the closed form at the defaults", "[allocation]") {
  const auto r = optimal_bs_power(kC, kDefaults, kGains);
  const double coarse = grid_search_bs_power(kC, kDefaults, kGains, 1000000);
  CHECK(std::abs(coarse - r.p_bs_star) <= 1e-4 * kC);
  CHECK(std::abs(coarse - r.p_bs_star) <= kC / 1e6);
  const double standard = grid_search_bs_power(kC, kDefaults, kGains);
  CHECK(std::abs(standard - r.p_bs_star) <= kC / 1e5);
}

TEST_CASE("grid search lands within one step of the symmetric optimum", "[allocation]") {
  const ChannelGains symmetric{1e-7, 1e-7};
  const double c = 1.0;
  const double found = grid_search_bs_power(c, kDefaults, symmetric, 10000);
  CHECK(std::abs(found - 0.5 * c) <= c / 1e4);
}

TEST_CASE("grid search keeps a tiny budget's maximizer interior", "[allocation]") {
  const double c = 1e-6;
  const double found = grid_search_bs_power(c, kDefaults, kGains, 10000);
  CHECK(found > 0.0);
  CHECK(found < c);
}

TEST_CASE("grid search input validation", "[allocation]") {
  CHECK_THROWS_AS(grid_search_bs_power(0.0, kDefaults, kGains), std::invalid_argument);
  CHECK_THROWS_AS(grid_search_bs_power(1.0, kDefaults, kGains, 500), std::invalid_argument);
}

TEST_CASE("doubling the grid never worsens the achieved SNR", "[allocation]") {
  testsup::Rng rng(909);
  for (int i = 0; i < 10; ++i) {
    const auto d = testsup::draw_allocation_problem(rng);
    double prev = -1.0;
    for (int res : {1000, 2000, 4000}) {
      const double p = grid_search_bs_power(d.c, d.params, d.gains, res);
      const double v = active_snr_objective(p, d.c, d.params, d.gains);
      CHECK(v >= prev * (1.0 - 1e-12));
      prev = v;
    }
  }
}

TEST_CASE("closed form matches the oracle over random problems", "[allocation]") {
  testsup::Rng rng(1010);
  for (int i = 0; i < 50; ++i) {
    const auto d = testsup::draw_allocation_problem(rng);
    const auto r = optimal_bs_power(d.c, d.params, d.gains);
    const double oracle = grid_search_bs_power(d.c, d.params, d.gains, 10000);
    CHECK(std::abs(r.p_bs_star - oracle) <= d.c / 1e4);
    const double oracle_v = active_snr_objective(oracle, d.c, d.params, d.gains);
    CHECK(r.snr_star >= oracle_v * (1.0 - 1e-12));
  }
}

TEST_CASE("slope numerator signs at the interval ends", "[allocation]") {
  testsup::Rng rng(1111);
  for (int i = 0; i < 50; ++i) {
    const auto d = testsup::draw_allocation_problem(rng);
    const double x = product_x(d.params, d.gains);
    const double cross = d.params.sigma2 * d.params.sigma_r2;
    const double at_zero = snr_slope_numerator(0.0, d.c, d.params, d.gains);
    CHECK(at_zero > 0.0);
    CHECK(rel_diff(at_zero, d.c * (d.c * x + cross)) < 1e-12);
    const double y = product_y(d.params, d.gains);
    const double at_c = snr_slope_numerator(d.c, d.c, d.params, d.gains);
    CHECK(at_c < 0.0);
    // the evaluation cancels terms of size ~ c * (c*max(x,y) + cross), so
    // compare against that scale rather than the (possibly tiny) result
    const double term_scale = d.c * (d.c * std::max(x, y) + cross);
    CHECK(std::abs(at_c - (-d.c * (d.c * y + cross))) <= 1e-12 * term_scale);
  }
}

TEST_CASE("slope numerator vanishes at the optimum", "[allocation]") {
  const auto r = optimal_bs_power(kC, kDefaults, kGains);
  const double residual = snr_slope_numerator(r.p_bs_star, kC, kDefaults, kGains);
  const double at_zero = snr_slope_numerator(0.0, kC, kDefaults, kGains);
  CHECK(std::abs(residual) <= 1e-9 * std::abs(at_zero));
}

TEST_CASE("slope numerator changes sign exactly once inside (0, c)", "[allocation]") {
  testsup::Rng rng(1212);
  for (int i = 0; i < 50; ++i) {
    const auto d = testsup::draw_allocation_problem(rng);
    int sign_changes = 0;
    double prev = snr_slope_numerator(d.c * 1e-9, d.c, d.params, d.gains);
    const int steps = 10000;
    for (int k = 1; k <= steps; ++k) {
      const double p = d.c * (static_cast<double>(k) / steps) * (1.0 - 1e-9);
      const double v = snr_slope_numerator(p, d.c, d.params, d.gains);
      if ((prev > 0.0) != (v > 0.0)) ++sign_changes;
      prev = v;
    }
    CHECK(sign_changes == 1);
  }
}

TEST_CASE("budget sensitivity at the defaults", "[allocation]") {
  CHECK(rel_diff(bs_power_sensitivity(kC, kDefaults, kGains), ex::dpbs_default) < 1e-12);
}

TEST_CASE("budget sensitivity matches a central finite difference", "[allocation]") {
  const double h = 1e-6 * kC;
  const double up = optimal_bs_power(kC + h, kDefaults, kGains).p_bs_star;
  const double down = optimal_bs_power(kC - h, kDefaults, kGains).p_bs_star;
  const double fd = (up - down) / (2.0 * h);
  CHECK(rel_diff(bs_power_sensitivity(kC, kDefaults, kGains), fd) < 1e-6);
}

TEST_CASE("budget sensitivity limits", "[allocation]") {
  CHECK(std::abs(bs_power_sensitivity(1e-9, kDefaults, kGains) - 0.5) < 1e-3);
  const double limit = bs_power_sensitivity_limit(kDefaults, kGains);
  CHECK(rel_diff(limit, ex::g_limit) < 1e-12);
  CHECK(rel_diff(bs_power_sensitivity(1e8, kDefaults, kGains), limit) < 1e-6);
}

TEST_CASE("budget sensitivity stays inside (0, 1)", "[allocation]") {
  testsup::Rng rng(1313);
  for (int i = 0; i < 100; ++i) {
    const auto d = testsup::draw_allocation_problem(rng);
    const double s = bs_power_sensitivity(d.c, d.params, d.gains);
    CHECK(s > 0.0);
    CHECK(s < 1.0);
  }
}

TEST_CASE("degenerate products give the exact half sensitivities", "[allocation]") {
  const ChannelGains symmetric{1e-7, 1e-7};
  CHECK(bs_power_sensitivity(1.0, kDefaults, symmetric) == 0.5);
  CHECK(allocation_gap_sensitivity(1.0, kDefaults, symmetric) == 0.0);
}

TEST_CASE("gap sensitivity value and identity at the defaults", "[allocation]") {
  const double gap = allocation_gap_sensitivity(kC, kDefaults, kGains);
  CHECK(rel_diff(gap, ex::gap_slope_default) < 1e-12);
  CHECK(rel_diff(gap, 2.0 * bs_power_sensitivity(kC, kDefaults, kGains) - 1.0) < 1e-12);
}

TEST_CASE("gap sensitivity sign follows the deployment side", "[allocation]") {
  // RIS near the user: RIS noise product dominates, BS power pulls ahead
  CHECK(allocation_gap_sensitivity(kC, kDefaults, testsup::gains_at_x(90.0)) > 0.0);
  // RIS near the BS: receiver noise product dominates, RIS power pulls ahead
  CHECK(allocation_gap_sensitivity(kC, kDefaults, testsup::gains_at_x(10.0)) < 0.0);
}

TEST_CASE("gap sensitivity fades out with the budget", "[allocation]") {
  CHECK(std::abs(allocation_gap_sensitivity(1e-9, kDefaults, kGains)) < 1e-3);
}

TEST_CASE("RIS-noise limits of the optimal BS power", "[allocation]") {
  const auto limits = bs_power_ris_noise_limits(kC, kDefaults, kGains);
  CHECK(limits.low == 0.0);
  CHECK(rel_diff(limits.high, ex::ris_noise_high_limit) < 1e-12);

  SystemParams quiet = kDefaults;
  quiet.sigma2 = 1e-14;  // receiver noise negligible next to the budget
  const auto near_c = bs_power_ris_noise_limits(kC, quiet, kGains);
  CHECK(rel_diff(near_c.high, kC) < 1e-4);
}

TEST_CASE("optimal split converges to the RIS-noise limits", "[allocation]") {
  SystemParams p = kDefaults;
  p.sigma_r2 = 1e2;
  CHECK(rel_diff(optimal_bs_power(kC, p, kGains).p_bs_star, ex::p_star_sigma_r2_1e2) <
        1e-9);
  p.sigma_r2 = 1e-22;
  CHECK(rel_diff(optimal_bs_power(kC, p, kGains).p_bs_star, ex::p_star_sigma_r2_1e_22) <
        1e-9);
}

TEST_CASE("allocations move monotonically with budget and elements", "[allocation]") {
  SystemParams p = kDefaults;
  double prev_bs = 0.0;
  double prev_ris = 0.0;
  for (double q_dbm = 20.5; q_dbm <= 40.0; q_dbm += 0.5) {
    p.q_tot = dbm_to_watts(q_dbm);
    const auto r = optimal_bs_power(available_power(p), p, kGains);
    CHECK(r.p_bs_star >= prev_bs * (1.0 - 1e-12));
    CHECK(r.p_ris_star >= prev_ris * (1.0 - 1e-12));
    prev_bs = r.p_bs_star;
    prev_ris = r.p_ris_star;
  }
  p = kDefaults;
  prev_bs = 1e300;
  prev_ris = 1e300;
  for (int n = 16; n <= 2048; n += 64) {
    p.n_elements = n;
    const auto r = optimal_bs_power(available_power(p), p, kGains);
    CHECK(r.p_bs_star <= prev_bs * (1.0 + 1e-12));
    CHECK(r.p_ris_star <= prev_ris * (1.0 + 1e-12));
    prev_bs = r.p_bs_star;
    prev_ris = r.p_ris_star;
  }
}

TEST_CASE("ratio slope anchor at zero available power", "[allocation]") {
  const double anchor = kDefaults.n_elements * kDefaults.p_dc / 2.0;
  CHECK(rel_diff(ratio_slope_numerator(0.0, kDefaults, kGains), anchor) < 1e-12);
  CHECK(rel_diff(ratio_slope_numerator(0.0, kDefaults, testsup::gains_at_x(10.0)), anchor) <
        1e-12);
}

TEST_CASE("ratio slope limit at the defaults", "[allocation]") {
  CHECK(rel_diff(ratio_slope_numerator_limit(kDefaults, kGains), ex::f4_limit_default) <
        1e-12);
}

TEST_CASE("ratio slope limit agrees with its two-term expansion", "[allocation]") {
  testsup::Rng rng(1414);
  for (int i = 0; i < 50; ++i) {
    SystemParams p = kDefaults;
    p.sigma2 = rng.log_uniform(-12.0, -8.0);
    p.sigma_r2 = rng.log_uniform(-12.0, -8.0);
    p.n_elements = rng.uniform_int(1, 1024);
    p.ris_pos.x = rng.uniform(5.0, 95.0);
    const ChannelGains g = channel_gains(p);
    const double x = product_x(p, g);
    const double y = product_y(p, g);
    if (std::abs(x - y) <= 1e-6 * std::max(x, y)) continue;
    const double cross = p.sigma2 * p.sigma_r2;
    const double expanded = cross * ((x + y) / (2.0 * std::sqrt(x * y)) - 1.0) / (x - y) +
                            p.n_elements * p.p_dc * (x - std::sqrt(x * y)) / (x - y);
    CHECK(rel_diff(ratio_slope_numerator_limit(p, g), expanded) < 1e-10);
  }
}
