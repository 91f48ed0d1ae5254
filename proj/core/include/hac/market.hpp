#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hac/metric.hpp"

namespace hac {

// The 30 Dow Jones components of 1998-2002.
const std::vector<std::string>& djia_tickers();

// Correlated geometric random walks: each log-return is a mix of a market
// factor, a sector factor (tickers are grouped in fives) and idiosyncratic
// noise. Starting price 100, one row per business day from 1998-01-02.
// Deterministic for a given seed.
PriceTable synthetic_price_table(std::size_t n_days, std::uint64_t seed,
                                 std::vector<std::string> labels = djia_tickers());

// log_returns applied column-wise.
std::vector<ReturnSeries> table_returns(const PriceTable& table);

}  // namespace hac
