#ifndef PTWALK_CSV_HPP
#define PTWALK_CSV_HPP

/// CSV emission. Fixed header
///   alpha,beta,t,l1,l2,D,S,surviving_norm,W,gap_zero,gap_pi,pt_phase
/// with angles in pi units, gaps in radians, floats at 12 significant digits,
/// `NA` for undefined cells, `\n` line endings, UTF-8.

#include <filesystem>
#include <string>

#include "ptwalk/scan_engine.hpp"

namespace ptwalk {

/// Render rows to a CSV document (deterministic byte-for-byte).
std::string render_csv(const SweepResult& result);

/// Write render_csv(result) to path. Throws IoError with path context.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);

}  // namespace ptwalk

#endif  // PTWALK_CSV_HPP
