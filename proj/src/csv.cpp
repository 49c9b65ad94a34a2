#include "bslab/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "bslab/errors.hpp"

namespace bslab::csv {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ValidationError("cannot open output file: " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw ValidationError("failed writing output file: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ValidationError("failed moving output into place: " + path.string());
  }
}

std::string pathset_csv(const sde::PathSet& paths) {
  std::string out = "t";
  for (std::size_t i = 0; i < paths.paths.size(); ++i) {
    out += ",path_" + std::to_string(i);
  }
  out += '\n';
  for (std::size_t k = 0; k < paths.times.size(); ++k) {
    out += format_double(paths.times[k]);
    for (const auto& path : paths.paths) {
      out += ',';
      out += format_double(path[k]);
    }
    out += '\n';
  }
  return out;
}

void write_pathset(const sde::PathSet& paths,
                   const std::filesystem::path& path) {
  atomic_write(path, pathset_csv(paths));
}

std::string surface_csv(const pricer::PriceSurface& surface) {
  std::string out = "t\\S";
  for (const double s : surface.s_values) {
    out += ',';
    out += format_double(s);
  }
  out += '\n';
  for (std::size_t i = 0; i < surface.t_values.size(); ++i) {
    out += format_double(surface.t_values[i]);
    for (const double v : surface.f[i]) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

void write_surface(const pricer::PriceSurface& surface,
                   const std::filesystem::path& path) {
  atomic_write(path, surface_csv(surface));
}

}  // namespace bslab::csv
