#include "pcc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmp.h>
#include <mpfr.h>

#include "pcc/errors.hpp"

namespace pcc {

namespace {

void check_gamma(double gamma_c) {
    if (!(gamma_c > 0.0) || !std::isfinite(gamma_c))
        throw std::invalid_argument("bounds: gamma_c must be finite and > 0");
}

// C(n, q) as a double; exact to rounding for n <= 64.
double binom(int n, int q) {
    if (q < 0 || q > n) return 0.0;
    q = std::min(q, n - q);
    double c = 1.0;
    for (int i = 1; i <= q; ++i) c = c * (n - q + i) / i;
    return c;
}

// sum_{k=0}^{m} (-1)^k C(m,k) * numerator / (gamma + k + 1), evaluated in
// MPFR. The terms cancel almost completely (the true value can be ~1e-99
// while individual terms are ~1e18), so the working precision is sized from
// the ratio of the largest term to the closed-form magnitude of the result,
//   sum = m! * numerator / prod_{j=1}^{m+1} (gamma + j),
// plus guard bits. Plain double (even compensated) cannot absorb this
// cancellation for m beyond ~15.
double alternating_reliability_sum(int m, double gamma_c, double numerator) {
    if (m < 0) throw std::invalid_argument("alternating sum: negative order");
    if (m + 1 > kMaxBlockLength)
        throw CapacityError("alternating sum: order " + std::to_string(m + 1) +
                            " exceeds the stability cap of " + std::to_string(kMaxBlockLength));

    double log2_result = -std::log2(gamma_c + 1.0);
    for (int j = 1; j <= m; ++j)
        log2_result += std::log2(static_cast<double>(j)) - std::log2(gamma_c + j + 1.0);
    const double log2_max_term = std::log2(binom(m, m / 2)) - std::log2(gamma_c + 1.0);
    const double cancellation = std::max(0.0, log2_max_term - log2_result);
    const auto precision = static_cast<mpfr_prec_t>(std::clamp(cancellation + 96.0, 96.0, 16384.0));

    mpfr_t sum, term, denom;
    mpfr_inits2(precision, sum, term, denom, static_cast<mpfr_ptr>(nullptr));
    mpz_t coeff;
    mpz_init(coeff);
    mpfr_set_zero(sum, 1);
    for (int k = 0; k <= m; ++k) {
        mpz_bin_uiui(coeff, static_cast<unsigned long>(m), static_cast<unsigned long>(k));
        mpfr_set_z(term, coeff, MPFR_RNDN);
        mpfr_set_d(denom, gamma_c, MPFR_RNDN);
        mpfr_add_ui(denom, denom, static_cast<unsigned long>(k + 1), MPFR_RNDN);
        mpfr_div(term, term, denom, MPFR_RNDN);
        if (k & 1)
            mpfr_sub(sum, sum, term, MPFR_RNDN);
        else
            mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    mpfr_mul_d(sum, sum, numerator, MPFR_RNDN);
    const double out = mpfr_get_d(sum, MPFR_RNDN);
    mpz_clear(coeff);
    mpfr_clears(sum, term, denom, static_cast<mpfr_ptr>(nullptr));
    return out;
}

} // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double beta_param(double gamma_c) {
    check_gamma(gamma_c);
    return std::sqrt(gamma_c / (gamma_c + 1.0));
}

double hard_bound(const CodeParams& params, double gamma_c) {
    check_gamma(gamma_c);
    const int n = params.n();
    const double p = (1.0 - beta_param(gamma_c)) / 2.0;
    const double q = (1.0 + beta_param(gamma_c)) / 2.0;
    double sum = 0.0;
    for (int m = params.t() + 1; m <= n; ++m)
        sum += binom(n, m) * std::pow(p, m) * std::pow(q, n - m);
    return sum;
}

double soft_bound(const CodeParams& params, double gamma_c) {
    check_gamma(gamma_c);
    const double multiplicity = std::exp2(static_cast<double>(params.k())) - 1.0;
    const double base = 4.0 / (2.0 + gamma_c) * (1.0 + gamma_c) / (2.0 + gamma_c);
    return multiplicity * std::pow(base, params.d_min());
}

double chernoff_pbar(double gamma_c) {
    check_gamma(gamma_c);
    return 1.0 / (1.0 + gamma_c);
}

double two_or_more_bound(const CodeParams& params, double gamma_c) {
    check_gamma(gamma_c);
    const int n = params.n();
    const double p = 1.0 / (1.0 + gamma_c);
    const double q = gamma_c / (1.0 + gamma_c);
    double sum = 0.0;
    for (int m = 2; m <= n; ++m)
        sum += binom(n, m) * std::pow(p, m) * std::pow(q, n - m);
    return sum;
}

double order_stat_pdf(OrderStat which, int n_int, double gamma_c, double x) {
    check_gamma(gamma_c);
    if (x < 0.0) throw std::invalid_argument("order_stat_pdf: x must be >= 0");
    if (n_int < 1) throw std::invalid_argument("order_stat_pdf: n must be >= 1");
    if (which == OrderStat::second && n_int < 2)
        throw std::invalid_argument("order_stat_pdf: second order statistic needs n >= 2");
    const double n = n_int;
    const double inv = 1.0 / gamma_c;
    switch (which) {
        case OrderStat::second:
            return n * (n - 1.0) * inv *
                   (std::exp(-x * (n - 1.0) * inv) - std::exp(-x * n * inv));
        case OrderStat::largest: {
            // (1 - e^{-x/gamma})^(n-1) via expm1 to keep accuracy for x << gamma
            const double cdf = -std::expm1(-x * inv);
            return n * inv * std::exp(-x * inv) * std::pow(cdf, n - 1.0);
        }
    }
    throw std::invalid_argument("order_stat_pdf: unknown order statistic");
}

double order_stat_pdf(OrderStat which, const CodeParams& params, double gamma_c, double x) {
    return order_stat_pdf(which, params.n(), gamma_c, x);
}

double p2_bar(const CodeParams& params, double gamma_c) {
    check_gamma(gamma_c);
    const double n = params.n();
    return n * (n - 1.0) / ((gamma_c + n - 1.0) * (gamma_c + n));
}

double pn_bar(int n, double gamma_c) {
    check_gamma(gamma_c);
    if (n < 1) throw std::invalid_argument("pn_bar: n must be >= 1");
    return alternating_reliability_sum(n - 1, gamma_c, static_cast<double>(n));
}

double pn_bar(const CodeParams& params, double gamma_c) {
    return pn_bar(params.n(), gamma_c);
}

double one_error_bound(const CodeParams& params, double gamma_c) {
    check_gamma(gamma_c);
    const double n = params.n();
    const double prefactor = n * n * (n - 1.0) * (n - 1.0) /
                             ((gamma_c + n - 1.0) * (gamma_c + n));
    return prefactor * alternating_reliability_sum(params.n() - 1, gamma_c, 1.0);
}

double one_error_bound_component_form(const CodeParams& params, double gamma_c) {
    const double n = params.n();
    return (n - 1.0) * p2_bar(params, gamma_c) *
           std::pow(1.0 - pn_bar(params, gamma_c), n - 1.0);
}

double fd_bound(const CodeParams& params, double gamma_c) {
    check_gamma(gamma_c);
    const double n = params.n();
    const double prefactor = n * n * (n - 1.0) * (n - 1.0) /
                             ((gamma_c + n - 1.0) * (gamma_c + n) * (gamma_c + 1.0));
    // Braced factor {1 + sum_{k=1}^{n-1} C(n-1,k)(-1)^k (gamma+1)/(gamma+k+1)};
    // the k = 0 term of the scaled alternating sum is exactly the leading 1.
    const double braced =
        alternating_reliability_sum(params.n() - 1, gamma_c, gamma_c + 1.0);
    return prefactor * braced + two_or_more_bound(params, gamma_c);
}

double fd_bound_components(const CodeParams& params, double gamma_c) {
    return one_error_bound(params, gamma_c) + two_or_more_bound(params, gamma_c);
}

double diversity_slope(std::span<const std::pair<double, double>> curve,
                       double window_decades) {
    if (curve.empty()) throw std::invalid_argument("diversity_slope: empty curve");
    double max_db = curve[0].first;
    for (const auto& [db, prob] : curve) max_db = std::max(max_db, db);
    const double min_db = max_db - 10.0 * window_decades;

    std::vector<std::pair<double, double>> pts; // (log10 gamma, -log10 prob)
    for (const auto& [db, prob] : curve) {
        if (db < min_db) continue;
        if (!(prob > 0.0))
            throw std::invalid_argument(
                "diversity_slope: nonpositive probability in the fit window "
                "(insufficient errors collected)");
        pts.emplace_back(db / 10.0, -std::log10(prob));
    }
    if (pts.size() < 2)
        throw std::invalid_argument("diversity_slope: need at least 2 points in the window");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double count = static_cast<double>(pts.size());
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("diversity_slope: degenerate abscissa");
    return (count * sxy - sx * sy) / denom;
}

} // namespace pcc
