#include "lpscalar/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

namespace lpscalar {

static_assert(std::endian::native == std::endian::little,
              "snapshot codec assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'L', 'P', 'S', '1'};

template <typename T>
void put(std::vector<char>& buf, T v) {
  const std::size_t at = buf.size();
  buf.resize(at + sizeof(T));
  std::memcpy(buf.data() + at, &v, sizeof(T));
}

template <typename T>
T get(const std::vector<char>& buf, std::size_t offset) {
  T v;
  std::memcpy(&v, buf.data() + offset, sizeof(T));
  return v;
}

}  // namespace

void write_snapshot(const PhysicalField& f, const SnapshotMeta& meta,
                    const std::filesystem::path& path) {
  const std::uint32_t nx = static_cast<std::uint32_t>(f.grid.n);
  std::vector<char> buf;
  buf.reserve(kSnapshotHeaderBytes + 8 * f.values.size());
  buf.insert(buf.end(), kMagic, kMagic + 4);
  put<std::uint16_t>(buf, kSnapshotVersion);
  put<std::uint32_t>(buf, nx);
  put<std::uint32_t>(buf, nx);
  put<double>(buf, meta.beta);
  put<double>(buf, meta.time);
  for (double v : f.values) put<double>(buf, v);

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw data_error("write_snapshot: cannot open " + tmp.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw data_error("write_snapshot: short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("read_snapshot: cannot open " + path.string());
  std::vector<char> buf((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  if (buf.size() < kSnapshotHeaderBytes) {
    throw data_error("read_snapshot: truncated header at offset " +
                     std::to_string(buf.size()));
  }
  if (std::memcmp(buf.data(), kMagic, 4) != 0) {
    throw data_error("read_snapshot: bad magic at offset 0");
  }
  const auto version = get<std::uint16_t>(buf, 4);
  if (version != kSnapshotVersion) {
    throw data_error("read_snapshot: unsupported version at offset 4");
  }
  const auto nx = get<std::uint32_t>(buf, 6);
  const auto ny = get<std::uint32_t>(buf, 10);
  if (nx != ny) throw data_error("read_snapshot: nx != ny at offset 6");
  SnapshotMeta meta;
  meta.beta = get<double>(buf, 14);
  meta.time = get<double>(buf, 22);
  const std::size_t expect =
      kSnapshotHeaderBytes + 8ull * nx * ny;
  if (buf.size() != expect) {
    throw data_error("read_snapshot: payload truncated at offset " +
                     std::to_string(buf.size()) + " (expected " +
                     std::to_string(expect) + " bytes)");
  }
  Snapshot snap{PhysicalField(Grid2D(static_cast<int>(nx))), meta};
  for (std::size_t i = 0; i < snap.field.values.size(); ++i) {
    snap.field.values[i] = get<double>(buf, kSnapshotHeaderBytes + 8 * i);
  }
  return snap;
}

}  // namespace lpscalar
