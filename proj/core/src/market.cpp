#include "hac/market.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace hac {

const std::vector<std::string>& djia_tickers() {
    static const std::vector<std::string> tickers = {
        "AA",  "AXP", "BA",  "C",   "CAT", "DD",  "DIS", "EK",   "GE", "GM",
        "HD",  "HON", "HPQ", "IBM", "INTC", "IP", "JNJ", "JPM",  "KO", "MCD",
        "MMM", "MO",  "MRK", "MSFT", "PG", "SBC", "T",   "UTX",  "WMT", "XOM"};
    return tickers;
}

namespace {

std::vector<std::string> business_days(std::size_t count) {
    using namespace std::chrono;
    std::vector<std::string> out;
    out.reserve(count);
    sys_days day = year{1998} / January / 2;
    while (out.size() < count) {
        const weekday wd{day};
        if (wd != Saturday && wd != Sunday) {
            const year_month_day ymd{day};
            char buf[16];
            std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                          static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
            out.emplace_back(buf);
        }
        day += days{1};
    }
    return out;
}

}  // namespace

PriceTable synthetic_price_table(std::size_t n_days, std::uint64_t seed, std::vector<std::string> labels) {
    if (n_days < 2) throw std::invalid_argument("synthetic_price_table: need at least 2 days");
    if (labels.empty()) throw std::invalid_argument("synthetic_price_table: no labels");

    constexpr std::size_t sector_width = 5;
    constexpr double market_vol = 0.010;
    constexpr double sector_vol = 0.008;
    constexpr double idio_vol = 0.012;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const std::size_t n = labels.size();
    const std::size_t sectors = (n + sector_width - 1) / sector_width;

    PriceTable table;
    table.labels = std::move(labels);
    table.dates = business_days(n_days);
    table.prices.assign(n, std::vector<double>(n_days, 0.0));
    for (auto& series : table.prices) series[0] = 100.0;

    std::vector<double> sector_shock(sectors);
    for (std::size_t t = 1; t < n_days; ++t) {
        const double market = market_vol * gauss(rng);
        for (double& s : sector_shock) s = sector_vol * gauss(rng);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = market + sector_shock[i / sector_width] + idio_vol * gauss(rng);
            table.prices[i][t] = table.prices[i][t - 1] * std::exp(r);
        }
    }
    return table;
}

std::vector<ReturnSeries> table_returns(const PriceTable& table) {
    table.validate();
    std::vector<ReturnSeries> out;
    out.reserve(table.labels.size());
    for (std::size_t i = 0; i < table.labels.size(); ++i)
        out.push_back(log_returns(table.prices[i], table.labels[i]));
    return out;
}

}  // namespace hac
