#pragma once

#include <cstddef>
#include <filesystem>

#include "qcongr/qspecial.hpp"

namespace qcongr::cli {

struct DiskCacheStats {
  std::size_t loaded = 0;
  std::size_t rejected = 0;
  std::size_t written = 0;
};

/// Offers cyclotomic_<n>.txt for n in 1..max_index to the cache, then
/// (re)writes every file that was missing or failed validation. The
/// directory is advisory: bad entries are recomputed, never trusted.
DiskCacheStats sync_cyclotomic_cache(const std::filesystem::path& dir, unsigned long max_index,
                                     QObjectCache& cache);

}  // namespace qcongr::cli
