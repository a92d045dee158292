#pragma once

#include <filesystem>

#include "lpscalar/grid.hpp"

namespace lpscalar {

/// On-disk field format, little-endian:
///   magic "LPS1" (4)  version u16 (2)  nx u32 (4)  ny u32 (4)
///   beta f64 (8)  time f64 (8)  then nx*ny f64 row-major samples.
/// 30-byte header; round-trips bit-exactly.
struct SnapshotMeta {
  double beta = 0.0;
  double time = 0.0;
};

inline constexpr std::uint16_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 30;

/// Whole-file atomic write (temp file + rename).
void write_snapshot(const PhysicalField& f, const SnapshotMeta& meta,
                    const std::filesystem::path& path);

struct Snapshot {
  PhysicalField field;
  SnapshotMeta meta;
};

/// Throws data_error naming the byte offset on magic/version mismatch or a
/// truncated payload.
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace lpscalar
