#pragma once

#include <span>
#include <utility>

#include "pcc/code.hpp"

namespace pcc {

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
double q_function(double x);

/// beta = sqrt(gamma_c / (gamma_c + 1)), the fading-averaged BPSK
/// reliability parameter. Exact average bit error rate is (1 - beta) / 2.
double beta_param(double gamma_c);

/// Hard-decision codeword error bound:
///   sum_{q=t+1}^{n} C(n,q) ((1-beta)/2)^q ((1+beta)/2)^(n-q),  t = 0.
/// For t = 0 the sum telescopes to the exact any-bit-error probability.
double hard_bound(const CodeParams& params, double gamma_c);

/// Soft-decision union bound:
///   (2^k - 1) * [ 4/(2+gamma_c) * (1+gamma_c)/(2+gamma_c) ]^d_min.
/// May exceed 1 at low SNR; callers clamp for display only.
double soft_bound(const CodeParams& params, double gamma_c);

/// Chernoff-averaged per-bit error bound 1 / (1 + gamma_c); dominates the
/// exact value (1 - beta)/2 everywhere.
double chernoff_pbar(double gamma_c);

/// Probability of two or more bit errors under the Chernoff per-bit bound:
///   sum_{m=2}^{n} C(n,m) (1/(1+gamma_c))^m (gamma_c/(1+gamma_c))^(n-m).
double two_or_more_bound(const CodeParams& params, double gamma_c);

enum class OrderStat {
    second,  ///< second-smallest of the n per-symbol SNRs
    largest, ///< largest of the n per-symbol SNRs
};

/// Density of the chosen order statistic of n i.i.d. exponential SNRs with
/// mean gamma_c, evaluated at x >= 0. The int overload accepts n >= 1
/// (OrderStat::largest of a single draw is the plain exponential density).
double order_stat_pdf(OrderStat which, const CodeParams& params, double gamma_c, double x);
double order_stat_pdf(OrderStat which, int n, double gamma_c, double x);

/// Average Chernoff bit-error bound at the second-smallest SNR:
///   n(n-1) / [(gamma_c + n - 1)(gamma_c + n)].
double p2_bar(const CodeParams& params, double gamma_c);

/// Average Chernoff bit-error bound at the largest SNR, as the alternating
/// sum  sum_{k=0}^{n-1} n C(n-1,k) (-1)^k / (gamma_c + k + 1).
/// Evaluated in extended precision (see bounds.cpp); n is capped at
/// kMaxBlockLength. The int overload accepts n >= 1, where the single-term
/// sum reduces to chernoff_pbar.
double pn_bar(const CodeParams& params, double gamma_c);
double pn_bar(int n, double gamma_c);

/// Single-error (wrong-position) term of the flip-decoder bound, in the
/// collapsed printed form
///   n^2 (n-1)^2 / [(gamma_c+n-1)(gamma_c+n)] *
///       sum_{k=0}^{n-1} (-1)^k C(n-1,k) / (gamma_c+k+1).
double one_error_bound(const CodeParams& params, double gamma_c);

/// The same event bounded via its components: (n-1) p2_bar (1 - pn_bar)^(n-1).
/// Kept separate for cross-checking; the two forms differ (the collapsed form
/// decays faster at high SNR). Neither is asserted against the other.
double one_error_bound_component_form(const CodeParams& params, double gamma_c);

/// Flip-decoder codeword error bound, evaluated in the assembled single-table
/// form (collapsed one-error term plus two_or_more_bound).
double fd_bound(const CodeParams& params, double gamma_c);

/// Flip-decoder bound as the explicit sum one_error_bound + two_or_more_bound.
/// Emitted alongside fd_bound; their agreement is not asserted.
double fd_bound_components(const CodeParams& params, double gamma_c);

/// Least-squares slope of -log10(prob) versus log10(gamma) over the points
/// whose gamma_db lies within `window_decades` decades of the top of the
/// curve. Points are (gamma_db, probability) pairs; any fixed-offset dB axis
/// (per-bit or per-code-bit SNR) gives the same slope. Throws
/// std::invalid_argument if fewer than 2 points fall in the window or any
/// windowed probability is not strictly positive.
double diversity_slope(std::span<const std::pair<double, double>> curve,
                       double window_decades = 2.0);

} // namespace pcc
