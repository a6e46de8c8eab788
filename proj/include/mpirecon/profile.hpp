#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mpirecon/grid.hpp"

namespace mpirecon {

enum class ProfileAxis { row, column };

ProfileAxis parse_profile_axis(std::string_view name);

/// One line of pixels with the physical coordinate (m) along the line.
struct Profile {
  std::vector<double> coordinates;
  std::vector<double> values;
};

/// Row `index` (varying x) or column `index` (varying y). Throws
/// std::out_of_range for a bad index.
Profile extract_profile(const Image& image, ProfileAxis axis, std::size_t index);

/// Local maxima below this fraction of the global maximum are not peaks.
inline constexpr double kPeakFraction = 0.5;

/// 1 - (minimum between the two highest peaks) / (mean of the two peaks).
/// Peaks are strict local maxima after merging plateaus, at least
/// kPeakFraction of the (positive) global maximum; the series ends count when
/// they exceed their single neighbor. Returns 0 with fewer than two peaks.
double dip_ratio(std::span<const double> values);

/// CSV `coordinate,value`.
void write_profile_csv(std::ostream& out, const Profile& profile);

}  // namespace mpirecon
