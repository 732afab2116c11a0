#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ucost {

using Date = std::chrono::year_month_day;

/// Parses "YYYY-MM-DD"; rejects anything that is not a real calendar day.
Date parse_date(std::string_view iso);
std::string format_date(const Date& date);

struct Observation {
    Date date;
    double value;  // spread in basis points, >= 0
};

/// A dated sovereign-spread series. Dates are strictly increasing, values
/// non-negative and finite.
struct SpreadSeries {
    std::string label;
    std::vector<Observation> observations;
};

struct CsvColumns {
    std::string date = "date";
    std::string value = "value";
};

/// Reads comma-separated text with a header row naming the date and value
/// columns. Rows may arrive in any order; the result is sorted by date.
/// Malformed dates, non-numeric or negative values, duplicate dates and a
/// missing column all raise parse_error carrying the offending line number.
SpreadSeries parse_spread_csv(std::istream& input, std::string label,
                              const CsvColumns& columns = {});
SpreadSeries parse_spread_csv_file(const std::string& path, std::string label,
                                   const CsvColumns& columns = {});

/// Serializes back to the same delimited format; values use the shortest
/// representation that re-parses to the identical double.
std::string to_csv(const SpreadSeries& series, const CsvColumns& columns = {});

struct RatioSeries {
    SpreadSeries series;
    std::size_t dropped_zero_denominator = 0;
};

/// One observation per date present in both inputs, value = num / den.
/// Dates with a zero denominator are dropped and counted. An empty date
/// intersection is an error.
RatioSeries ratio_series(const SpreadSeries& numerator,
                         const SpreadSeries& denominator);

/// Period-average statistics of a ratio series around a split date.
/// Period 1 is [start, split], period 2 is (split, end].
struct PeriodStats {
    Date start_1, end_1;
    Date start_2, end_2;
    double mean_ratio_1 = 0.0;
    double mean_ratio_2 = 0.0;
    double uplift = 0.0;  // mean_ratio_2 / mean_ratio_1 - 1
    std::size_t n_1 = 0, n_2 = 0;
};

/// Arithmetic mean of the ratio observations in each period (the default
/// convention: mean of daily ratios).
PeriodStats period_uplift(const SpreadSeries& ratio, Date split, Date start,
                          Date end);

/// Alternative convention: per-period ratio of means, computed over the
/// date-intersected observation pairs of the two raw series.
PeriodStats period_uplift_ratio_of_means(const SpreadSeries& numerator,
                                         const SpreadSeries& denominator,
                                         Date split, Date start, Date end);

/// Mean and count of the observations dated within [from, to].
std::pair<double, std::size_t> period_mean(const SpreadSeries& series, Date from,
                                           Date to);

}  // namespace ucost
