#include "ucost/spreads.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "ucost/errors.hpp"

namespace ucost {
namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() &&
           (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

int parse_digits(std::string_view text, std::size_t line_no) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw parse_error("malformed date component '" + std::string(text) + "'",
                          line_no);
    return value;
}

double parse_value(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw parse_error("non-numeric value '" + std::string(text) + "'", line_no);
    if (!std::isfinite(value))
        throw parse_error("value must be finite, got '" + std::string(text) + "'",
                          line_no);
    if (value < 0.0)
        throw parse_error("value must be non-negative, got '" + std::string(text) + "'",
                          line_no);
    return value;
}

Date parse_date_at(std::string_view iso, std::size_t line_no) {
    try {
        return parse_date(iso);
    } catch (const parse_error& e) {
        throw parse_error(std::string(e.what()), line_no);
    }
}

std::string format_value(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

}  // namespace

Date parse_date(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw parse_error("malformed date '" + std::string(iso) +
                          "', expected YYYY-MM-DD");
    const int year = parse_digits(iso.substr(0, 4), 0);
    const int month = parse_digits(iso.substr(5, 2), 0);
    const int day = parse_digits(iso.substr(8, 2), 0);
    const Date date{std::chrono::year{year},
                    std::chrono::month{static_cast<unsigned>(month)},
                    std::chrono::day{static_cast<unsigned>(day)}};
    if (!date.ok())
        throw parse_error("'" + std::string(iso) + "' is not a valid calendar day");
    return date;
}

std::string format_date(const Date& date) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%04d-%02u-%02u",
                  static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()),
                  static_cast<unsigned>(date.day()));
    return buffer;
}

SpreadSeries parse_spread_csv(std::istream& input, std::string label,
                              const CsvColumns& columns) {
    std::string line;
    if (!std::getline(input, line))
        throw parse_error("empty input, expected a header row", 1);

    const auto header = split_fields(line);
    std::ptrdiff_t date_index = -1, value_index = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == columns.date) date_index = static_cast<std::ptrdiff_t>(i);
        if (header[i] == columns.value) value_index = static_cast<std::ptrdiff_t>(i);
    }
    if (date_index < 0)
        throw parse_error("header does not name a '" + columns.date + "' column", 1);
    if (value_index < 0)
        throw parse_error("header does not name a '" + columns.value + "' column", 1);
    const std::size_t needed =
        static_cast<std::size_t>(std::max(date_index, value_index)) + 1;

    std::vector<Observation> observations;
    std::vector<std::size_t> source_lines;
    std::size_t line_no = 1;
    while (std::getline(input, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() < needed)
            throw parse_error("expected at least " + std::to_string(needed) +
                              " fields, got " + std::to_string(fields.size()),
                              line_no);
        Observation obs;
        obs.date = parse_date_at(fields[static_cast<std::size_t>(date_index)], line_no);
        obs.value = parse_value(fields[static_cast<std::size_t>(value_index)], line_no);
        observations.push_back(obs);
        source_lines.push_back(line_no);
    }

    // Canonical order is by date; duplicates are reported against the line
    // of the later occurrence in the file.
    std::vector<std::size_t> order(observations.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return observations[a].date < observations[b].date;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (observations[order[i - 1]].date == observations[order[i]].date) {
            const std::size_t offending =
                std::max(source_lines[order[i - 1]], source_lines[order[i]]);
            throw parse_error("duplicate date '" +
                              format_date(observations[order[i]].date) + "'",
                              offending);
        }
    }

    SpreadSeries series;
    series.label = std::move(label);
    series.observations.reserve(observations.size());
    for (const std::size_t i : order) series.observations.push_back(observations[i]);
    return series;
}

SpreadSeries parse_spread_csv_file(const std::string& path, std::string label,
                                   const CsvColumns& columns) {
    std::ifstream input(path);
    if (!input)
        throw parse_error("cannot open '" + path + "'");
    return parse_spread_csv(input, std::move(label), columns);
}

std::string to_csv(const SpreadSeries& series, const CsvColumns& columns) {
    std::string out = columns.date + "," + columns.value + "\n";
    for (const Observation& obs : series.observations)
        out += format_date(obs.date) + "," + format_value(obs.value) + "\n";
    return out;
}

RatioSeries ratio_series(const SpreadSeries& numerator,
                         const SpreadSeries& denominator) {
    RatioSeries result;
    result.series.label = numerator.label + "/" + denominator.label;

    std::size_t shared = 0;
    auto num = numerator.observations.begin();
    auto den = denominator.observations.begin();
    while (num != numerator.observations.end() &&
           den != denominator.observations.end()) {
        if (num->date < den->date) {
            ++num;
        } else if (den->date < num->date) {
            ++den;
        } else {
            ++shared;
            if (den->value == 0.0) {
                ++result.dropped_zero_denominator;
            } else {
                result.series.observations.push_back(
                    Observation{num->date, num->value / den->value});
            }
            ++num;
            ++den;
        }
    }
    if (shared == 0)
        throw validation_error("series '" + numerator.label + "' and '" +
                               denominator.label + "' share no dates");
    return result;
}

std::pair<double, std::size_t> period_mean(const SpreadSeries& series, Date from,
                                           Date to) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const Observation& obs : series.observations) {
        if (obs.date < from) continue;
        if (to < obs.date) break;
        sum += obs.value;
        ++count;
    }
    return {count > 0 ? sum / static_cast<double>(count) : 0.0, count};
}

namespace {

Date day_after(Date date) {
    return Date{std::chrono::sys_days{date} + std::chrono::days{1}};
}

PeriodStats finish_stats(Date start, Date split, Date end, double mean_1,
                         std::size_t n_1, double mean_2, std::size_t n_2,
                         std::string_view what) {
    if (n_1 == 0)
        throw validation_error("period 1 [" + format_date(start) + ", " +
                               format_date(split) + "] contains no " +
                               std::string(what));
    if (n_2 == 0)
        throw validation_error("period 2 (" + format_date(split) + ", " +
                               format_date(end) + "] contains no " +
                               std::string(what));
    if (!(mean_1 > 0.0))
        throw numeric_error("period 1 mean must be positive to form the uplift");

    PeriodStats stats;
    stats.start_1 = start;
    stats.end_1 = split;
    stats.start_2 = day_after(split);
    stats.end_2 = end;
    stats.mean_ratio_1 = mean_1;
    stats.mean_ratio_2 = mean_2;
    stats.uplift = mean_2 / mean_1 - 1.0;
    stats.n_1 = n_1;
    stats.n_2 = n_2;
    return stats;
}

}  // namespace

PeriodStats period_uplift(const SpreadSeries& ratio, Date split, Date start,
                          Date end) {
    if (!(start <= split && split < end))
        throw validation_error("require start <= split < end");
    const auto [mean_1, n_1] = period_mean(ratio, start, split);
    const auto [mean_2, n_2] = period_mean(ratio, day_after(split), end);
    return finish_stats(start, split, end, mean_1, n_1, mean_2, n_2,
                        "observations");
}

PeriodStats period_uplift_ratio_of_means(const SpreadSeries& numerator,
                                         const SpreadSeries& denominator,
                                         Date split, Date start, Date end) {
    if (!(start <= split && split < end))
        throw validation_error("require start <= split < end");

    // Means over the date-intersected pairs, so both conventions see the
    // same sample.
    double num_sum_1 = 0.0, den_sum_1 = 0.0, num_sum_2 = 0.0, den_sum_2 = 0.0;
    std::size_t n_1 = 0, n_2 = 0;
    auto num = numerator.observations.begin();
    auto den = denominator.observations.begin();
    while (num != numerator.observations.end() &&
           den != denominator.observations.end()) {
        if (num->date < den->date) {
            ++num;
            continue;
        }
        if (den->date < num->date) {
            ++den;
            continue;
        }
        const Date date = num->date;
        if (start <= date && date <= split) {
            num_sum_1 += num->value;
            den_sum_1 += den->value;
            ++n_1;
        } else if (split < date && date <= end) {
            num_sum_2 += num->value;
            den_sum_2 += den->value;
            ++n_2;
        }
        ++num;
        ++den;
    }
    if (n_1 > 0 && !(den_sum_1 > 0.0))
        throw numeric_error("period 1 denominator mean is zero");
    if (n_2 > 0 && !(den_sum_2 > 0.0))
        throw numeric_error("period 2 denominator mean is zero");
    const double mean_1 = n_1 > 0 ? num_sum_1 / den_sum_1 : 0.0;
    const double mean_2 = n_2 > 0 ? num_sum_2 / den_sum_2 : 0.0;
    return finish_stats(start, split, end, mean_1, n_1, mean_2, n_2,
                        "paired observations");
}

}  // namespace ucost
