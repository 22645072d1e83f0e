#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace boxball {

double normal_cdf(double x);

// Regularized incomplete gamma functions (series + continued fraction).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);
double chi_square_p_value(double statistic, std::int64_t dof);

// P{ the maximum of a p-walk excursion from 0 equals i }, via gambler's ruin.
// At p = 1/2 this is 1 / (2 i (i+1)).
double mu_i_theoretical(std::int64_t i, double p);

struct RowCltReference {
    double mean = 0;            // n p (1-p)
    double variance = 0;        // n p (1-p) (1 - 3 p (1-p))
    double exact_variance = 0;  // (n-1) p (1-p) - (3n-5) p^2 (1-p)^2
};
RowCltReference row_clt_reference(std::int64_t n, double p);

// Subcritical (p < 1/2) extreme-value law for the longest soliton.
struct SubcriticalReference {
    double p = 0;
    double theta = 0;  // (1-p)/p
    double sigma = 0;  // (1-2p)/(1-p)
    double mu_n = 0;   // log_theta((1-2p)^2 n / (1-p))

    double lower_envelope(double x) const;                       // exp(-theta^-x)
    double upper_envelope(double x) const;                       // exp(-theta^-(x+1))
    double column_upper_envelope(double x, std::int64_t j) const;
    double excursion_height_cdf(double x) const;                 // F(x), F(0) = 1-p
};
SubcriticalReference subcritical_reference(std::int64_t n, double p);  // throws if p >= 1/2

// P{ j-th ranked excursion maximum of reflected Brownian motion >= y },
// alternating series truncated below 1e-12 and clamped to [0, 1].
double csaki_hu_tail(std::int64_t j, double y);

// CDF of the j-th ranked maximum: 1 - csaki_hu_tail(j, y) for y > 0.
double csaki_hu_cdf(std::int64_t j, double y);

struct SupercriticalReference {
    double p = 0;
    double mu = 0;    // p/(1-p)
    double mean = 0;  // (2p-1) n
    double sd = 0;    // 2 sqrt(p(1-p) n)
    std::int64_t n = 0;

    double lambda2_threshold(double eps) const;  // (eps + 5/log mu) log n
};
SupercriticalReference supercritical_reference(std::int64_t n, double p);  // throws if p <= 1/2

// Kolmogorov-Smirnov distance between the sample and a reference CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

// Mean of the standardized samples; ~ N(0, 1/trials) under the reference.
double z_score(const std::vector<double>& samples, double mean, double sd);

double sample_mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);  // unbiased
double sample_median(std::vector<double> v);

struct TwoSampleChiSquare {
    double statistic = 0;
    std::int64_t dof = 0;
    double p_value = 1;
};

// Two-sample chi-square on integer-valued samples; bins with small combined
// counts are pooled until every bin holds at least `min_bin` observations.
TwoSampleChiSquare chi_square_two_sample(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b,
                                         std::int64_t min_bin = 10);

}  // namespace boxball
