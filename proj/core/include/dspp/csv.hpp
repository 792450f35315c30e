#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dspp/process.hpp"
#include "dspp/transforms.hpp"

namespace dspp::csv {

// 17 significant digits; round-trips doubles exactly.
std::string format_double(double v);

// Writes to "<path>.tmp" in the target directory, then renames into place.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

// Header "epoch", one event per row.
void write_events(const EventStream& stream, const std::filesystem::path& path);

// Header "level,duration", one segment per row.
void write_path(const IntensityPath& path_data, const std::filesystem::path& path);

// Single named column.
void write_column(std::string_view header, std::span<const double> values,
                  const std::filesystem::path& path);

// Header "theta,value" or "theta,value,stderr".
void write_grid(const TransformGrid& grid, const std::filesystem::path& path);

// Accepts both grid layouts above. Throws InvalidParameter on malformed
// content, IoError when the file cannot be opened.
TransformGrid read_grid(const std::filesystem::path& path);

// One duration per row; a leading non-numeric line is treated as a header.
std::vector<double> read_duration_column(const std::filesystem::path& path);

}  // namespace dspp::csv
