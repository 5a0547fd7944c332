#pragma once

#include <vector>

namespace inpaint {

struct AnovaResult {
    double f_stat = 0.0;
    double p_value = 1.0;
    std::size_t df_between = 0;
    std::size_t df_within = 0;
};

// Classic one-way ANOVA: F = between-group mean square / within-group mean
// square, p from the F-distribution survival function. All-identical input
// degenerates to F = 0, p = 1.
AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups);

// 100 * (max - min) / min; requires min > 0.
double percent_spread(const std::vector<double>& values);

}  // namespace inpaint
