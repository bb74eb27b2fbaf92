#include "subvis/success_index.hpp"

#include "subvis/errors.hpp"

#include <cmath>

namespace subvis {

std::string_view to_string(SuccessMethod method)
{
    switch (method) {
    case SuccessMethod::exact:
        return "exact";
    case SuccessMethod::if_approx:
        return "if_approx";
    case SuccessMethod::if_simplified:
        return "if_simplified";
    }
    return "unknown";
}

std::string_view to_string(Orientation orientation)
{
    switch (orientation) {
    case Orientation::first_over_second:
        return "a_over_b";
    case Orientation::second_over_first:
        return "b_over_a";
    case Orientation::none:
        return "none";
    }
    return "unknown";
}

SuccessResult success_exact(const CitationDistribution& t, const CitationDistribution& r)
{
    if (t.n_papers() <= 0 || r.n_papers() <= 0) {
        throw EmptyDistribution("success index needs two nonempty groups");
    }

    // 2 n_t n_r S_tr = sum_c (2 above_t(c) + h_t(c)) h_r(c)
    __int128 numerator = 0;
    auto const hist_r = r.histogram();
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(hist_r.size()); ++c) {
        auto const h_r = hist_r[static_cast<std::size_t>(c)];
        if (h_r == 0) {
            continue;
        }
        numerator += static_cast<__int128>(2 * t.count_above(c) + t.count_at(c)) * h_r;
    }
    auto const denominator = static_cast<__int128>(2) * t.n_papers() * r.n_papers();

    SuccessResult out;
    out.method = SuccessMethod::exact;
    out.n_t = t.n_papers();
    out.n_r = r.n_papers();
    out.s_tr = numerator == denominator / 2
                   ? 0.5
                   : static_cast<double>(numerator) / static_cast<double>(denominator);
    return out;
}

SuccessResult success_from_if(double i_t, double i_r, double f0_r)
{
    if (!(i_t > 0.0) || !(i_r > 0.0) || !std::isfinite(i_t) || !std::isfinite(i_r)) {
        throw DomainError("impact factors must be positive");
    }
    if (!(f0_r >= 0.0 && f0_r < 1.0)) {
        throw DomainError("uncited fraction must lie in [0, 1)");
    }
    auto const rho = i_t / i_r;
    auto const q = 1.0 / (1.0 - f0_r);

    SuccessResult out;
    out.method = SuccessMethod::if_approx;
    out.rho = rho;
    out.s_tr = f0_r / 2.0 + (1.0 - f0_r / 2.0) / (1.0 + q * std::pow(rho, -kSuccessExponent));
    return out;
}

SuccessResult success_simplified(double rho)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw DomainError("impact factor ratio must be positive");
    }
    SuccessResult out;
    out.method = SuccessMethod::if_simplified;
    out.rho = rho;
    out.s_tr = 1.0 / (1.0 + std::pow(rho, -kSuccessExponent));
    return out;
}

OrientedSuccess oriented_max(const SuccessResult& s_ab, const SuccessResult& s_ba)
{
    if (s_ab.s_tr > s_ba.s_tr) {
        return {s_ab, Orientation::first_over_second};
    }
    if (s_ba.s_tr > s_ab.s_tr) {
        return {s_ba, Orientation::second_over_first};
    }
    return {s_ab, Orientation::none};
}

} // namespace subvis
