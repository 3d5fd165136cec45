#include "synex/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "synex/errors.hpp"

namespace synex {

namespace {

#include "q_table.inc"

// Continued fraction for the incomplete beta function, modified Lentz.
double betacf(double a, double b, double x) {
    const int max_iterations = 300;
    const double eps = 3e-16;
    const double tiny = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iterations; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) break;
    }
    return h;
}

// Regularized incomplete beta I_x(a, b).
double ibeta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

struct GroupSummary {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<double> means;
    std::vector<std::size_t> sizes;
    double ss_between = 0.0;
    double ss_within = 0.0;
};

GroupSummary summarize(std::span<const std::vector<double>> groups) {
    if (groups.size() < 2) throw ArgumentError("need at least 2 groups");
    GroupSummary s;
    s.k = groups.size();
    double grand_sum = 0.0;
    for (const auto& g : groups) {
        if (g.empty()) throw ArgumentError("groups must be non-empty");
        double sum = 0.0;
        for (double v : g) sum += v;
        s.means.push_back(sum / static_cast<double>(g.size()));
        s.sizes.push_back(g.size());
        s.n += g.size();
        grand_sum += sum;
    }
    if (s.n <= s.k) throw ArgumentError("within-group degrees of freedom must be positive");
    double grand_mean = grand_sum / static_cast<double>(s.n);
    for (std::size_t i = 0; i < s.k; ++i) {
        double d = s.means[i] - grand_mean;
        s.ss_between += static_cast<double>(s.sizes[i]) * d * d;
        for (double v : groups[i]) {
            double w = v - s.means[i];
            s.ss_within += w * w;
        }
    }
    return s;
}

} // namespace

double fisher_f_sf(double f, double df1, double df2) {
    if (df1 <= 0.0 || df2 <= 0.0) throw ArgumentError("degrees of freedom must be positive");
    if (f <= 0.0) return 1.0;
    return ibeta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

AnovaResult anova_oneway(std::span<const std::vector<double>> groups, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("alpha must lie in (0, 1)");
    GroupSummary s = summarize(groups);

    AnovaResult r;
    r.df_between = static_cast<double>(s.k - 1);
    r.df_within = static_cast<double>(s.n - s.k);
    r.ms_between = s.ss_between / r.df_between;
    r.ms_within = s.ss_within / r.df_within;
    if (r.ms_within == 0.0) {
        r.f_statistic = r.ms_between > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        r.p_value = r.ms_between > 0.0 ? 0.0 : 1.0;
    } else {
        r.f_statistic = r.ms_between / r.ms_within;
        r.p_value = fisher_f_sf(r.f_statistic, r.df_between, r.df_within);
    }
    r.reject_null = r.p_value < alpha;
    return r;
}

double studentized_range_critical(double alpha, std::size_t groups, double df) {
    if (std::abs(alpha - 0.05) > 1e-12)
        throw ArgumentError("studentized range table only covers alpha = 0.05");
    if (groups < static_cast<std::size_t>(kQTableKMin) ||
        groups > static_cast<std::size_t>(kQTableKMax))
        throw ArgumentError("studentized range table covers 2..12 groups");
    const std::size_t rows = sizeof kQTableDf / sizeof kQTableDf[0];
    if (df < kQTableDf[0]) throw ArgumentError("studentized range table needs df >= 2");

    const std::size_t col = groups - kQTableKMin;
    if (df >= kQTableDf[rows - 1]) return kQTable[rows - 1][col];
    std::size_t hi = 0;
    while (kQTableDf[hi] < df) ++hi;
    if (kQTableDf[hi] == df) return kQTable[hi][col];
    // Linear interpolation in 1/df between bracketing rows.
    double x0 = 1.0 / kQTableDf[hi - 1], x1 = 1.0 / kQTableDf[hi], x = 1.0 / df;
    double w = (x - x0) / (x1 - x0);
    return kQTable[hi - 1][col] * (1.0 - w) + kQTable[hi][col] * w;
}

TukeyResult tukey_hsd(std::span<const std::vector<double>> groups, double alpha) {
    GroupSummary s = summarize(groups);
    double df_within = static_cast<double>(s.n - s.k);
    double ms_within = s.ss_within / df_within;

    TukeyResult r;
    r.group_means = s.means;
    r.ms_within = ms_within;
    r.q_critical = studentized_range_critical(alpha, s.k, df_within);
    for (std::size_t i = 0; i < s.k; ++i) {
        for (std::size_t j = i + 1; j < s.k; ++j) {
            TukeyComparison c;
            c.group_a = i;
            c.group_b = j;
            c.mean_difference = s.means[i] - s.means[j];
            c.critical = r.q_critical *
                         std::sqrt(ms_within / 2.0 *
                                   (1.0 / static_cast<double>(s.sizes[i]) +
                                    1.0 / static_cast<double>(s.sizes[j])));
            c.significant = std::abs(c.mean_difference) > c.critical;
            r.comparisons.push_back(c);
        }
    }
    return r;
}

double mean(std::span<const double> values) {
    if (values.empty()) throw ArgumentError("mean of an empty range");
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_stddev(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    double m = mean(values);
    double acc = 0.0;
    for (double v : values) {
        double d = v - m;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(values.size() - 1));
}

} // namespace synex
