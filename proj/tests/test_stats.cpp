#include <doctest.h>

#include <cmath>
#include <map>

#include "inpaint/stats.hpp"
#include "support/oracles.hpp"

using namespace inpaint;

TEST_CASE("one-way anova on a hand-computed example") {
    // groups {1,2,3} and {2,3,4}: SSB = 1.5, SSW = 4, df = (1, 4),
    // F = 1.5 / 1 = 1.5; p frozen from the F(1,4) survival function.
    const AnovaResult r = one_way_anova({{1, 2, 3}, {2, 3, 4}});
    CHECK(r.df_between == 1);
    CHECK(r.df_within == 4);
    CHECK(r.f_stat == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(r.p_value == doctest::Approx(0.2878641347266907).epsilon(1e-12));
}

TEST_CASE("anova of identical groups degenerates to F = 0, p = 1") {
    const AnovaResult r = one_way_anova({{5, 5, 5}, {5, 5, 5}, {5, 5, 5}});
    CHECK(r.f_stat == 0.0);
    CHECK(r.p_value == 1.0);
}

TEST_CASE("anova separates clearly distinct groups") {
    const AnovaResult r =
        one_way_anova({{1.0, 1.1, 0.9, 1.05}, {9.0, 9.2, 8.8, 9.1}});
    CHECK(r.p_value < 1e-6);
    CHECK(r.f_stat > 100.0);
}

TEST_CASE("anova p-value rises as groups overlap more") {
    const double far =
        one_way_anova({{1, 2, 3, 4}, {6, 7, 8, 9}}).p_value;
    const double near =
        one_way_anova({{1, 2, 3, 4}, {2, 3, 4, 5}}).p_value;
    const double on_top =
        one_way_anova({{1, 2, 3, 4}, {1.1, 2.1, 3.1, 4.1}}).p_value;
    CHECK(far < near);
    CHECK(near < on_top);
}

TEST_CASE("anova input validation") {
    CHECK_THROWS(one_way_anova({}));
    CHECK_THROWS(one_way_anova({{1, 2, 3}}));
    CHECK_THROWS(one_way_anova({{1, 2}, {3}}));
}

TEST_CASE("percent_spread") {
    CHECK(percent_spread({2.0, 4.0}) == doctest::Approx(100.0));
    CHECK(percent_spread({5.0, 5.0, 5.0}) == doctest::Approx(0.0));
    CHECK(percent_spread({0.69605, 0.70052, 0.72678, 0.72678}) ==
          doctest::Approx(4.414912721787234).epsilon(1e-12));
    CHECK_THROWS(percent_spread({}));
    CHECK_THROWS(percent_spread({0.0, 1.0}));
    CHECK_THROWS(percent_spread({-1.0, 1.0}));
}

TEST_CASE("method-wise anova over the reference tables is non-significant") {
    // The published comparison: per metric, four method groups of 50 scores
    // each. All three metrics come out far from significance on both tables.
    for (const char* name : {"table_gray.csv", "table_colour.csv"}) {
        const auto rows = oracle::load_fixture(name);
        std::map<std::string, std::vector<double>> psnr, ssim, mse;
        for (const auto& r : rows) {
            psnr[r.method].push_back(r.psnr);
            ssim[r.method].push_back(r.ssim);
            mse[r.method].push_back(r.mse);
        }
        auto collect = [](const std::map<std::string, std::vector<double>>& g) {
            std::vector<std::vector<double>> out;
            for (const auto& [k, v] : g) out.push_back(v);
            return out;
        };
        for (const auto* metric : {&psnr, &ssim, &mse}) {
            const AnovaResult r = one_way_anova(collect(*metric));
            CHECK(r.df_between == 3);
            CHECK(r.df_within == 196);
            CHECK(r.p_value > 0.9);
        }
    }
}
