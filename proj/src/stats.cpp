#include "inpaint/stats.hpp"

#include <boost/math/distributions/fisher_f.hpp>
#include <algorithm>
#include <stdexcept>

namespace inpaint {

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2)
        throw std::invalid_argument("one_way_anova: need at least 2 groups");
    std::size_t total_n = 0;
    double grand_sum = 0.0;
    for (const auto& g : groups) {
        if (g.size() < 2)
            throw std::invalid_argument("one_way_anova: each group needs >= 2 values");
        total_n += g.size();
        for (double v : g) grand_sum += v;
    }
    const double grand_mean = grand_sum / static_cast<double>(total_n);
    double ss_between = 0.0, ss_within = 0.0;
    for (const auto& g : groups) {
        double mean = 0.0;
        for (double v : g) mean += v;
        mean /= static_cast<double>(g.size());
        ss_between += static_cast<double>(g.size()) * (mean - grand_mean) *
                      (mean - grand_mean);
        for (double v : g) ss_within += (v - mean) * (v - mean);
    }
    AnovaResult r;
    r.df_between = groups.size() - 1;
    r.df_within = total_n - groups.size();
    if (ss_within <= 0.0 && ss_between <= 0.0) return r;  // F = 0, p = 1
    const double ms_between = ss_between / static_cast<double>(r.df_between);
    const double ms_within = ss_within / static_cast<double>(r.df_within);
    if (ms_within <= 0.0) {
        r.f_stat = std::numeric_limits<double>::infinity();
        r.p_value = 0.0;
        return r;
    }
    r.f_stat = ms_between / ms_within;
    const boost::math::fisher_f dist(static_cast<double>(r.df_between),
                                     static_cast<double>(r.df_within));
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.f_stat));
    return r;
}

double percent_spread(const std::vector<double>& values) {
    if (values.empty())
        throw std::invalid_argument("percent_spread: empty input");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo <= 0.0)
        throw std::invalid_argument("percent_spread: minimum must be positive");
    return 100.0 * (*hi - *lo) / *lo;
}

}  // namespace inpaint
