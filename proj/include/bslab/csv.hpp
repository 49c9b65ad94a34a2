#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bslab/pricer.hpp"
#include "bslab/sde.hpp"

namespace bslab::csv {

// Shortest decimal string that round-trips the double exactly.
std::string format_double(double value);

// Writes content to a temp file next to `path`, then renames it into place,
// so a failed run never leaves a partial output file behind.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// Header `t,path_0,...,path_{P-1}`; one row per timestamp. Comma separator,
// '.' decimal point, LF line endings, plain ASCII (valid UTF-8).
void write_pathset(const sde::PathSet& paths, const std::filesystem::path& path);
std::string pathset_csv(const sde::PathSet& paths);

// Header `t\S,<s_0>,...,<s_N>`; each following row is t_i then that row of f.
// (M+2) lines by (N+2) fields including the headers.
void write_surface(const pricer::PriceSurface& surface,
                   const std::filesystem::path& path);
std::string surface_csv(const pricer::PriceSurface& surface);

}  // namespace bslab::csv
