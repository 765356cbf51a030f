#include "quadsg/memo.hpp"

#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "quadsg/errors.hpp"

namespace quadsg::memo {

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (int k = 0; k < 8; ++k) bytes[k] = static_cast<char>((v >> (8 * k)) & 0xFFu);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw DomainError("memo: truncated file");
  }
  std::uint64_t v = 0;
  for (int k = 7; k >= 0; --k) v = (v << 8) | bytes[k];
  return v;
}

}  // namespace

void write(std::ostream& out, const MuTable& table) {
  out.write(kMagic, sizeof kMagic);
  out.put(static_cast<char>(kVersion));
  put_u64(out, static_cast<std::uint64_t>(table.n_max()));
  for (std::int32_t v : table.raw()) put_u64(out, static_cast<std::uint64_t>(v));
}

MuTable read(std::istream& in) {
  char magic[4];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0) {
    throw DomainError("memo: bad magic");
  }
  const int version = in.get();
  if (version != kVersion) throw DomainError("memo: unsupported version " + std::to_string(version));
  const std::uint64_t n_max = get_u64(in);
  if (n_max >= (std::uint64_t{1} << 30)) throw DomainError("memo: n_max too large");
  std::vector<std::int64_t> values(static_cast<std::size_t>(n_max) + 1);
  for (auto& v : values) {
    const std::uint64_t raw = get_u64(in);
    if (raw > static_cast<std::uint64_t>(INT64_MAX)) throw DomainError("memo: value out of range");
    v = static_cast<std::int64_t>(raw);
  }
  return MuTable::from_values(values);
}

void save(const std::filesystem::path& path, const MuTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("memo: cannot write " + path.string());
  write(out, table);
}

MuTable load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("memo: cannot read " + path.string());
  return read(in);
}

MuTable load_or_build(std::int64_t n_max, const std::optional<std::filesystem::path>& cache) {
  if (!cache) return MuTable(n_max);
  std::error_code ec;
  if (std::filesystem::exists(*cache, ec)) {
    try {
      MuTable cached = load(*cache);
      if (cached.n_max() >= n_max) return cached;
    } catch (const std::exception&) {
      // stale or corrupt cache: rebuild below
    }
  }
  MuTable table(n_max);
  try {
    save(*cache, table);
  } catch (const std::exception&) {
    // read-only location; the table is still valid
  }
  return table;
}

MuTable load_or_build(std::int64_t n_max) {
  const char* env = std::getenv(kPathEnv);
  if (env == nullptr || *env == '\0') return load_or_build(n_max, std::nullopt);
  return load_or_build(n_max, std::filesystem::path(env));
}

}  // namespace quadsg::memo
