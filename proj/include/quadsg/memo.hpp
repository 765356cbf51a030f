#pragma once
// On-disk cache for the mu table.
//
// Layout (all integers little-endian):
//   bytes 0..3   "QSMU"
//   byte  4      format version (1)
//   bytes 5..12  n_max as uint64
//   then n_max + 1 values, each uint64

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "quadsg/mu.hpp"

namespace quadsg::memo {

inline constexpr char kMagic[4] = {'Q', 'S', 'M', 'U'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr const char* kPathEnv = "QUADSG_MEMO_PATH";

void write(std::ostream& out, const MuTable& table);
/// Throws DomainError on a bad magic, version, or truncated payload.
MuTable read(std::istream& in);

void save(const std::filesystem::path& path, const MuTable& table);
MuTable load(const std::filesystem::path& path);

/// Returns a table covering n_max. When QUADSG_MEMO_PATH is set, a cached
/// table that is large enough is reused; otherwise the table is built and
/// the cache rewritten. An unreadable cache is ignored and replaced.
MuTable load_or_build(std::int64_t n_max);

/// Same, with an explicit cache path (no environment lookup).
MuTable load_or_build(std::int64_t n_max, const std::optional<std::filesystem::path>& cache);

}  // namespace quadsg::memo
