#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hgrid::detail {

/// Splits `amount` equally across recipients, each capped at `limits[i]`;
/// overflow from saturated recipients is re-split among the rest until the
/// amount or every limit is exhausted. Returns the per-recipient share.
std::vector<double> water_fill_equal(std::span<double const> limits, double amount);

} // namespace hgrid::detail
