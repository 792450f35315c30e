#include "dspp/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dspp/errors.hpp"

namespace dspp::csv {

namespace {

bool parse_double(const std::string& token, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(token, &pos);
    return pos == token.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename to " + path.string() + " failed: " + ec.message());
}

void write_events(const EventStream& stream, const std::filesystem::path& path) {
  std::string out = "epoch\n";
  for (double e : stream.events()) {
    out += format_double(e);
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_path(const IntensityPath& path_data,
                const std::filesystem::path& path) {
  std::string out = "level,duration\n";
  for (const auto& seg : path_data.segments()) {
    out += format_double(seg.level);
    out += ',';
    out += format_double(seg.duration);
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_column(std::string_view header, std::span<const double> values,
                  const std::filesystem::path& path) {
  std::string out(header);
  out += '\n';
  for (double v : values) {
    out += format_double(v);
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_grid(const TransformGrid& grid, const std::filesystem::path& path) {
  const bool with_stderr = !grid.stderrs.empty();
  std::string out = with_stderr ? "theta,value,stderr\n" : "theta,value\n";
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    out += format_double(grid.thetas[i]);
    out += ',';
    out += format_double(grid.values[i]);
    if (with_stderr) {
      out += ',';
      out += format_double(grid.stderrs[i]);
    }
    out += '\n';
  }
  write_text_atomic(path, out);
}

TransformGrid read_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  TransformGrid grid;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_line(line);
    double theta = 0.0;
    if (line_no == 1 && !parse_double(fields[0], theta)) continue;  // header
    if (fields.size() < 2 || fields.size() > 3)
      throw InvalidParameter("csv", "line " + std::to_string(line_no) +
                                        ": expected 2 or 3 columns");
    double value = 0.0;
    double se = 0.0;
    if (!parse_double(fields[0], theta) || !parse_double(fields[1], value) ||
        (fields.size() == 3 && !parse_double(fields[2], se)))
      throw InvalidParameter("csv", "line " + std::to_string(line_no) +
                                        ": not numeric");
    grid.thetas.push_back(theta);
    grid.values.push_back(value);
    if (fields.size() == 3) grid.stderrs.push_back(se);
  }
  if (grid.thetas.empty()) throw InvalidParameter("csv", "no data rows");
  if (!grid.stderrs.empty() && grid.stderrs.size() != grid.thetas.size())
    throw InvalidParameter("csv", "inconsistent stderr column");
  grid.validate();
  return grid;
}

std::vector<double> read_duration_column(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double v = 0.0;
    if (!parse_double(line, v)) {
      if (line_no == 1) continue;  // header
      throw InvalidParameter("csv", "line " + std::to_string(line_no) +
                                        ": not numeric");
    }
    values.push_back(v);
  }
  if (values.empty()) throw InvalidParameter("csv", "no data rows");
  return values;
}

}  // namespace dspp::csv
