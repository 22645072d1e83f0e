#include "boxball/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace boxball {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lower regularized incomplete gamma by power series (x < a + 1).
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma by continued fraction (x >= a + 1).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double f = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return f * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (a <= 0 || x < 0) throw std::domain_error("regularized_gamma_p: bad arguments");
    if (x == 0) return 0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (a <= 0 || x < 0) throw std::domain_error("regularized_gamma_q: bad arguments");
    if (x == 0) return 1;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_p_value(double statistic, std::int64_t dof) {
    if (dof < 1) throw std::domain_error("chi-square needs at least one degree of freedom");
    return regularized_gamma_q(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

double mu_i_theoretical(std::int64_t i, double p) {
    if (i < 1) throw std::domain_error("row index must be at least 1");
    if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("p must lie in (0,1)");
    if (std::fabs(p - 0.5) < 1e-12)
        return 1.0 / (2.0 * static_cast<double>(i) * static_cast<double>(i + 1));
    const double theta = (1.0 - p) / p;
    // P{walk started at 1 hits 0 before N}.
    const auto ruin = [theta](std::int64_t big_n) {
        const double n = static_cast<double>(big_n);
        if (theta > 1.0)
            return (1.0 - std::pow(theta, 1.0 - n)) / (1.0 - std::pow(theta, -n));
        const double t_n = std::pow(theta, n);
        return (theta - t_n) / (1.0 - t_n);
    };
    return p * (ruin(i + 1) - ruin(i));
}

RowCltReference row_clt_reference(std::int64_t n, double p) {
    if (n < 1 || !(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("bad row CLT parameters");
    const double q = p * (1.0 - p);
    RowCltReference r;
    r.mean = static_cast<double>(n) * q;
    r.variance = static_cast<double>(n) * q * (1.0 - 3.0 * q);
    r.exact_variance = static_cast<double>(n - 1) * q - static_cast<double>(3 * n - 5) * q * q;
    return r;
}

double SubcriticalReference::lower_envelope(double x) const {
    return std::exp(-std::pow(theta, -x));
}

double SubcriticalReference::upper_envelope(double x) const {
    return std::exp(-std::pow(theta, -(x + 1.0)));
}

double SubcriticalReference::column_upper_envelope(double x, std::int64_t j) const {
    double sum = 0.0;
    double term = 1.0;
    for (std::int64_t k = 0; k < j; ++k) {
        if (k > 0) term *= std::pow(theta, -x) / static_cast<double>(k);
        sum += term;
    }
    return std::min(1.0, upper_envelope(x) * sum);
}

double SubcriticalReference::excursion_height_cdf(double x) const {
    if (x < 0) return 0.0;
    return 1.0 - (1.0 - 2.0 * p) / (std::pow(theta, std::floor(x) + 1.0) - 1.0);
}

SubcriticalReference subcritical_reference(std::int64_t n, double p) {
    if (!(p > 0.0) || !(p < 0.5))
        throw std::invalid_argument("subcritical reference requires p in (0, 1/2)");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    SubcriticalReference r;
    r.p = p;
    r.theta = (1.0 - p) / p;
    r.sigma = (1.0 - 2.0 * p) / (1.0 - p);
    r.mu_n = std::log((1.0 - 2.0 * p) * r.sigma * static_cast<double>(n)) / std::log(r.theta);
    return r;
}

double csaki_hu_tail(std::int64_t j, double y) {
    if (j < 1) throw std::domain_error("rank must be at least 1");
    if (y <= 0) return 1.0;
    // Below y = 0.1 the complementary probability carries a factor
    // exp(-pi^2/(8 y^2)) <= 2e-54, so the tail is 1 to far better than the
    // series tolerance; the alternating series needs ~1/y terms there and
    // cannot resolve it in doubles.
    if (y <= 0.1 && j <= 40) return 1.0;
    if (j == 1 && y < 0.5) {
        // Theta-function dual of the same law; fast for small arguments.
        double sum = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const double term = ((k % 2 == 0) ? 1.0 : -1.0) / (2.0 * k + 1.0) *
                                std::exp(-(2.0 * k + 1.0) * (2.0 * k + 1.0) * kPi * kPi /
                                         (8.0 * y * y));
            sum += term;
            if (std::fabs(term) < 1e-16 && k > 0) break;
        }
        return std::clamp(1.0 - 4.0 / kPi * sum, 0.0, 1.0);
    }
    double sum = 0.0;
    double binom = 1.0;  // C(k+j-1, k), starts at k = 0
    for (std::int64_t k = 0; k < 2000000; ++k) {
        if (k > 0) binom *= static_cast<double>(k + j - 1) / static_cast<double>(k);
        const double tail = 0.5 * std::erfc(static_cast<double>(2 * k + 2 * j - 1) * y / std::sqrt(2.0));
        const double term = binom * tail;
        sum += (k % 2 == 0) ? term : -term;
        if (term < 1e-12 && k > 0) break;
    }
    const double value = std::pow(2.0, static_cast<double>(j + 1)) * sum;
    return std::clamp(value, 0.0, 1.0);
}

double csaki_hu_cdf(std::int64_t j, double y) {
    if (y <= 0) return 0.0;
    return 1.0 - csaki_hu_tail(j, y);
}

double SupercriticalReference::lambda2_threshold(double eps) const {
    return (eps + 5.0 / std::log(mu)) * std::log(static_cast<double>(n));
}

SupercriticalReference supercritical_reference(std::int64_t n, double p) {
    if (!(p > 0.5) || !(p < 1.0))
        throw std::invalid_argument("supercritical reference requires p in (1/2, 1)");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    SupercriticalReference r;
    r.p = p;
    r.n = n;
    r.mu = p / (1.0 - p);
    r.mean = (2.0 * p - 1.0) * static_cast<double>(n);
    r.sd = 2.0 * std::sqrt(p * (1.0 - p) * static_cast<double>(n));
    return r;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::domain_error("ks_distance needs at least one sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    // Tied values are grouped so the supremum is taken only at the actual
    // jumps of the empirical CDF; the reference is probed just left of each
    // value to handle step references correctly.
    double d = 0.0;
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        const double before = cdf(std::nextafter(samples[i], -std::numeric_limits<double>::infinity()));
        const double at = cdf(samples[i]);
        d = std::max(d, std::fabs(before - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(at - static_cast<double>(j) / n));
        i = j;
    }
    return d;
}

double z_score(const std::vector<double>& samples, double mean, double sd) {
    if (samples.empty()) throw std::domain_error("z_score needs at least one sample");
    if (!(sd > 0)) throw std::domain_error("z_score needs a positive scale");
    double acc = 0.0;
    for (const double x : samples) acc += (x - mean) / sd;
    return acc / static_cast<double>(samples.size());
}

double sample_mean(const std::vector<double>& v) {
    if (v.empty()) throw std::domain_error("mean of empty sample");
    double acc = 0.0;
    for (const double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::domain_error("variance needs at least two samples");
    const double m = sample_mean(v);
    double acc = 0.0;
    for (const double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size() - 1);
}

double sample_median(std::vector<double> v) {
    if (v.empty()) throw std::domain_error("median of empty sample");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

TwoSampleChiSquare chi_square_two_sample(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b,
                                         std::int64_t min_bin) {
    if (a.empty() || b.empty()) throw std::domain_error("chi-square needs nonempty samples");
    if (a.size() != b.size())
        throw std::invalid_argument("two-sample chi-square expects equal sample sizes");
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> hist;
    for (const std::int64_t x : a) ++hist[x].first;
    for (const std::int64_t x : b) ++hist[x].second;

    // Pool adjacent values until each bin holds at least min_bin combined counts.
    std::vector<std::pair<std::int64_t, std::int64_t>> bins;
    std::int64_t ca = 0, cb = 0;
    for (const auto& [value, counts] : hist) {
        (void)value;
        ca += counts.first;
        cb += counts.second;
        if (ca + cb >= min_bin) {
            bins.push_back({ca, cb});
            ca = cb = 0;
        }
    }
    if (ca + cb > 0) {
        if (bins.empty())
            bins.push_back({ca, cb});
        else {
            bins.back().first += ca;
            bins.back().second += cb;
        }
    }

    TwoSampleChiSquare result;
    result.dof = static_cast<std::int64_t>(bins.size()) - 1;
    for (const auto& [na, nb] : bins) {
        const double diff = static_cast<double>(na - nb);
        result.statistic += diff * diff / static_cast<double>(na + nb);
    }
    if (result.dof < 1) {
        result.p_value = 1.0;
        return result;
    }
    result.p_value = chi_square_p_value(result.statistic, result.dof);
    return result;
}

}  // namespace boxball
