#pragma once

#include "subvis/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace subvis {

/// Exponent linking the impact factor ratio to the success index.
inline constexpr double kSuccessExponent = 1.23;

enum class SuccessMethod { exact, if_approx, if_simplified };

std::string_view to_string(SuccessMethod method);

/// Probability that a random target paper out-cites a random reference paper,
/// ties counted as one half. Group sizes are 0 for the IF-based methods.
struct SuccessResult {
    double s_tr = 0.5;
    SuccessMethod method = SuccessMethod::exact;
    std::int64_t n_t = 0;
    std::int64_t n_r = 0;
    std::optional<double> rho;
};

/**
 * Exact success index of target `t` over reference `r`:
 *
 *     S_tr = sum_c ( P_t(c) + p_t(c) / 2 ) p_r(c)
 *
 * with p the fraction of papers at exactly c citations and P the fraction
 * above c. Evaluated in integer arithmetic over ascending c, then divided
 * once, so S_tr + S_rt == 1 up to a single rounding.
 */
SuccessResult success_exact(const CitationDistribution& t, const CitationDistribution& r);

/**
 * Success index from impact factors and the reference uncited fraction:
 *
 *     S_tr = f0/2 + (1 - f0/2) / (1 + q rho^-k),   rho = i_t / i_r,  q = 1 / (1 - f0)
 *
 * Throws DomainError unless i_t > 0, i_r > 0 and 0 <= f0_r < 1.
 */
SuccessResult success_from_if(double i_t, double i_r, double f0_r);

/// Low-f0 limit 1 / (1 + rho^-k). Throws DomainError unless rho > 0.
SuccessResult success_simplified(double rho);

// =================================================================================================
//      Orientation
// =================================================================================================

enum class Orientation {
    first_over_second,  ///< S_AB won
    second_over_first,  ///< S_BA won
    none                ///< exact tie
};

std::string_view to_string(Orientation orientation);

struct OrientedSuccess {
    SuccessResult result;
    Orientation orientation = Orientation::none;
};

/// The larger of S_AB and S_BA, tagged with which orientation produced it.
OrientedSuccess oriented_max(const SuccessResult& s_ab, const SuccessResult& s_ba);

} // namespace subvis
