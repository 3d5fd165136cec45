#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace synex {

struct AnovaResult {
    double f_statistic = 0.0;
    double p_value = 1.0;
    bool reject_null = false;
    double df_between = 0.0;
    double df_within = 0.0;
    double ms_between = 0.0;
    double ms_within = 0.0;
};

// One-way fixed-effects ANOVA. Needs >= 2 groups, every group non-empty, and
// df_within >= 1.
AnovaResult anova_oneway(std::span<const std::vector<double>> groups, double alpha = 0.05);

struct TukeyComparison {
    std::size_t group_a = 0;
    std::size_t group_b = 0;
    double mean_difference = 0.0; // mean(a) - mean(b)
    double critical = 0.0;        // Tukey-Kramer HSD for this pair
    bool significant = false;
};

struct TukeyResult {
    std::vector<TukeyComparison> comparisons; // all pairs, a < b
    std::vector<double> group_means;
    double ms_within = 0.0;
    double q_critical = 0.0;
};

// Tukey HSD with the Kramer adjustment for unequal group sizes. Critical
// values come from a bundled q table for alpha = 0.05; any other alpha is an
// ArgumentError.
TukeyResult tukey_hsd(std::span<const std::vector<double>> groups, double alpha = 0.05);

// Upper tail of the Fisher F distribution, evaluated via the regularized
// incomplete beta function.
double fisher_f_sf(double f, double df1, double df2);

// Studentized range critical value q(alpha; groups, df). alpha must be 0.05.
double studentized_range_critical(double alpha, std::size_t groups, double df);

double mean(std::span<const double> values);
double sample_stddev(std::span<const double> values); // N-1 denominator

} // namespace synex
