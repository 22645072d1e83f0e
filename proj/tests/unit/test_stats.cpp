#include <cmath>

#include "doctest.h"

#include "boxball/sampling.hpp"
#include "boxball/stats.hpp"

using namespace boxball;

namespace {

// Excursion-height mass by dynamic programming over walks confined to
// [1, ceiling], summed over return times; independent of the closed form.
double mu_by_dp(std::int64_t i, double p, std::int64_t horizon) {
    const auto mass_below = [&](std::int64_t ceiling) {
        // P{excursion returns to 0 with max <= ceiling}.
        if (ceiling < 1) return 0.0;
        std::vector<double> cur(static_cast<std::size_t>(ceiling) + 1, 0.0);
        cur[1] = p;  // first step up
        double total = 0.0;
        for (std::int64_t t = 1; t < horizon; ++t) {
            std::vector<double> next(cur.size(), 0.0);
            total += cur[1] * (1.0 - p);  // step down to 0 ends the excursion
            for (std::int64_t x = 1; x <= ceiling; ++x) {
                const double w = cur[static_cast<std::size_t>(x)];
                if (w == 0.0) continue;
                if (x + 1 <= ceiling) next[static_cast<std::size_t>(x + 1)] += w * p;
                if (x - 1 >= 1) next[static_cast<std::size_t>(x - 1)] += w * (1.0 - p);
            }
            cur = std::move(next);
        }
        return total;
    };
    return mass_below(i) - mass_below(i - 1);
}

double csaki_hu_theta_cdf(double x) {
    // Two-sided boundary crossing: P{max |B| <= x} as a theta series.
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double term = std::pow(-1.0, k) / (2.0 * k + 1.0) *
                            std::exp(-(2.0 * k + 1.0) * (2.0 * k + 1.0) * M_PI * M_PI /
                                     (8.0 * x * x));
        sum += term;
        if (std::fabs(term) < 1e-16) break;
    }
    return 4.0 / M_PI * sum;
}

}  // namespace

TEST_CASE("normal cdf spot values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
    CHECK(normal_cdf(1.959963985) == doctest::Approx(0.975).epsilon(1e-6));
    CHECK(normal_cdf(-3.0) == doctest::Approx(0.001349898).epsilon(1e-4));
}

TEST_CASE("regularized incomplete gamma identities") {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        CHECK(regularized_gamma_q(0.5, x) == doctest::Approx(std::erfc(std::sqrt(x))).epsilon(1e-12));
        CHECK(regularized_gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
        // Integer order: the Poisson partial sum.
        for (int k : {2, 3, 6}) {
            double sum = 0.0, term = 1.0;
            for (int j = 0; j < k; ++j) {
                if (j > 0) term *= x / j;
                sum += term;
            }
            CHECK(regularized_gamma_q(k, x) == doctest::Approx(std::exp(-x) * sum).epsilon(1e-12));
        }
        CHECK(regularized_gamma_p(0.7, x) + regularized_gamma_q(0.7, x) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(chi_square_p_value(15.0863, 5) == doctest::Approx(0.01).epsilon(1e-3));
}

TEST_CASE("excursion height masses") {
    CHECK(mu_i_theoretical(1, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(mu_i_theoretical(2, 0.5) == doctest::Approx(1.0 / 12).epsilon(1e-12));
    CHECK(mu_i_theoretical(3, 0.5) == doctest::Approx(1.0 / 24).epsilon(1e-12));
    CHECK_THROWS_AS(mu_i_theoretical(0, 0.5), std::domain_error);

    for (const double p : {0.3, 0.5, 0.62}) {
        CHECK(mu_i_theoretical(1, p) == doctest::Approx(p * (1 - p)).epsilon(1e-12));
        for (std::int64_t i = 1; i <= 5; ++i)
            CHECK(mu_i_theoretical(i, p) == doctest::Approx(mu_by_dp(i, p, 4000)).epsilon(1e-9));
    }

    double total = 0.0;
    for (std::int64_t i = 1; i <= 50; ++i) total += mu_i_theoretical(i, 0.5);
    CHECK(total + 1.0 / 102.0 == doctest::Approx(0.5).epsilon(1e-9));

    // For p < 1/2 the masses sum to p (an excursion clears height 1 iff the
    // first step is up).
    double sub = 0.0;
    for (std::int64_t i = 1; i <= 400; ++i) sub += mu_i_theoretical(i, 0.3);
    CHECK(sub == doctest::Approx(0.3).epsilon(1e-8));
}

TEST_CASE("row clt reference") {
    const RowCltReference r = row_clt_reference(100000, 0.5);
    CHECK(r.mean == doctest::Approx(25000.0));
    CHECK(r.variance == doctest::Approx(100000.0 / 16.0));

    CHECK(row_clt_reference(2, 0.5).exact_variance == doctest::Approx(3.0 / 16.0));

    // Enumeration oracle for the 10-pattern count.
    for (const double p : {0.3, 0.5}) {
        for (const int n : {4, 7, 10}) {
            double mean = 0.0, second = 0.0;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                double prob = 1.0;
                int count = 0;
                for (int k = 0; k < n; ++k)
                    prob *= (mask & (1u << k)) ? p : 1.0 - p;
                for (int k = 0; k + 1 < n; ++k)
                    if ((mask & (1u << k)) && !(mask & (1u << (k + 1)))) ++count;
                mean += prob * count;
                second += prob * count * count;
            }
            const double var = second - mean * mean;
            CHECK(row_clt_reference(n, p).exact_variance == doctest::Approx(var).epsilon(1e-10));
        }
    }

    for (double p = 0.05; p < 1.0; p += 0.05)
        CHECK(1.0 - 3.0 * p * (1.0 - p) >= 0.25 - 1e-12);
}

TEST_CASE("subcritical reference") {
    const SubcriticalReference r = subcritical_reference(6000, 1.0 / 3.0);
    CHECK(r.theta == doctest::Approx(2.0));
    CHECK(r.mu_n == doctest::Approx(std::log2(1000.0)));

    CHECK(r.lower_envelope(40.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.lower_envelope(-40.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.upper_envelope(40.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.upper_envelope(-3.0) < 0.02);
    CHECK(r.lower_envelope(1.0) < r.upper_envelope(1.0));

    const SubcriticalReference s = subcritical_reference(100, 0.3);
    CHECK(s.excursion_height_cdf(-0.5) == 0.0);
    CHECK(s.excursion_height_cdf(0.0) == doctest::Approx(0.7));
    for (double x = 0.0; x < 12.0; x += 0.25)
        CHECK(s.excursion_height_cdf(x) <= s.excursion_height_cdf(x + 0.25) + 1e-15);
    CHECK(s.column_upper_envelope(2.0, 1) == doctest::Approx(s.upper_envelope(2.0)));
    CHECK(s.column_upper_envelope(2.0, 3) >= s.upper_envelope(2.0));

    CHECK_THROWS_AS(subcritical_reference(100, 0.5), std::invalid_argument);
}

TEST_CASE("ranked maxima tails") {
    CHECK(csaki_hu_tail(1, 1.0) == doctest::Approx(0.6292).epsilon(1e-3));
    CHECK(1.0 - csaki_hu_tail(1, 1.0) == doctest::Approx(0.3708).epsilon(1e-3));

    for (const double y : {0.5, 0.8, 1.0, 1.5, 2.0})
        CHECK(csaki_hu_cdf(1, y) == doctest::Approx(csaki_hu_theta_cdf(y)).epsilon(1e-9));

    CHECK(csaki_hu_tail(3, 50.0) == doctest::Approx(0.0));
    for (std::int64_t j = 1; j <= 4; ++j)
        for (double y = 0.2; y < 3.0; y += 0.2) {
            CHECK(csaki_hu_tail(j, y) >= csaki_hu_tail(j, y + 0.2) - 1e-12);
            CHECK(csaki_hu_tail(j, y) >= csaki_hu_tail(j + 1, y) - 1e-12);
        }

    // E[max |B|] = integral of the tail = sqrt(pi/2), by Simpson quadrature.
    const double h = 0.005;
    double integral = 0.0;
    for (int k = 0; k * h < 10.0; ++k) {
        const double a = k * h, b = a + h;
        integral += h / 6.0 *
                    (csaki_hu_tail(1, std::max(a, 1e-12)) + 4.0 * csaki_hu_tail(1, (a + b) / 2) +
                     csaki_hu_tail(1, b));
    }
    CHECK(integral == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-5));
}

TEST_CASE("ranked maxima match reflected walk simulation") {
    // P{max H_k / sqrt(n) <= 1} for the critical reflected walk.
    const std::int64_t n = 16384;
    const double root = std::sqrt(static_cast<double>(n));
    std::int64_t hits = 0;
    const std::int64_t walks = 20000;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(walks); ++t) {
        RngStream rng(31337, t);
        std::int32_t height = 0, top = 0;
        for (std::int64_t k = 0; k < n; ++k) {
            if (rng.bernoulli(0.5))
                ++height;
            else if (height > 0)
                --height;
            top = std::max(top, height);
        }
        if (static_cast<double>(top) <= root) ++hits;
    }
    // Allow for the lattice correction at finite n on top of Monte Carlo noise.
    const double freq = static_cast<double>(hits) / static_cast<double>(walks);
    CHECK(std::fabs(freq - 0.3708) < 0.025);
}

TEST_CASE("supercritical reference") {
    const SupercriticalReference r = supercritical_reference(100000, 0.7);
    CHECK(r.mean == doctest::Approx(40000.0));
    CHECK(r.sd == doctest::Approx(289.8275).epsilon(1e-4));
    CHECK(r.lambda2_threshold(0.5) == doctest::Approx(73.697).epsilon(1e-3));
    CHECK(supercritical_reference(1000, 0.999).mean > 997.0);
    CHECK_THROWS_AS(supercritical_reference(100, 0.5), std::invalid_argument);
}

TEST_CASE("ks distance") {
    CHECK_THROWS_AS(ks_distance({}, [](double) { return 0.5; }), std::domain_error);

    // Constant samples against their own point mass.
    const auto step = [](double x) { return x >= 2.0 ? 1.0 : 0.0; };
    CHECK(ks_distance({2.0, 2.0, 2.0, 2.0}, step) == doctest::Approx(0.0));

    // Samples from the reference drive the distance to zero.
    std::vector<double> u;
    RngStream rng(61, 0);
    for (int i = 0; i < 200000; ++i) u.push_back(rng.next_double());
    const double d = ks_distance(u, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(d < 0.005);
}

TEST_CASE("z score") {
    std::vector<double> z;
    RngStream rng(62, 0);
    for (int i = 0; i < 10000; ++i) {
        // Box-Muller from the stream.
        const double u1 = rng.next_double(), u2 = rng.next_double();
        z.push_back(std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * M_PI * u2));
    }
    CHECK(std::fabs(z_score(z, 0.0, 1.0)) < 3.0 / std::sqrt(10000.0));
    CHECK_THROWS_AS(z_score({}, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(z_score({1.0}, 0.0, 0.0), std::domain_error);
}

TEST_CASE("two sample chi square") {
    std::vector<std::int64_t> a, b;
    for (int i = 0; i < 1000; ++i) {
        a.push_back(i % 7);
        b.push_back(i % 7);
    }
    const TwoSampleChiSquare same = chi_square_two_sample(a, b);
    CHECK(same.statistic == doctest::Approx(0.0));
    CHECK(same.p_value == doctest::Approx(1.0));

    std::vector<std::int64_t> c;
    for (int i = 0; i < 1000; ++i) c.push_back(i % 7 + 2);
    const TwoSampleChiSquare diff = chi_square_two_sample(a, c);
    CHECK(diff.p_value < 1e-6);
}
