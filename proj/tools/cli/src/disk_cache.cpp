#include "qcongr/cli/disk_cache.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcongr/serialize.hpp"

namespace qcongr::cli {

namespace fs = std::filesystem;

namespace {

fs::path entry_path(const fs::path& dir, unsigned long n) {
  return dir / ("cyclotomic_" + std::to_string(n) + ".txt");
}

bool load_entry(const fs::path& path, unsigned long n, QObjectCache& cache) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  try {
    return cache.offer_cyclotomic(n, parse_int_poly(text));
  } catch (const std::exception&) {
    return false;
  }
}

void write_entry(const fs::path& path, const IntPoly& p) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << to_coeff_list(p) << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

DiskCacheStats sync_cyclotomic_cache(const fs::path& dir, unsigned long max_index, QObjectCache& cache) {
  DiskCacheStats stats;
  fs::create_directories(dir);
  std::vector<unsigned long> stale;
  for (unsigned long n = 1; n <= max_index; ++n) {
    const fs::path path = entry_path(dir, n);
    if (!fs::exists(path)) {
      stale.push_back(n);
    } else if (load_entry(path, n, cache)) {
      ++stats.loaded;
    } else {
      ++stats.rejected;
      stale.push_back(n);
    }
  }
  for (unsigned long n : stale) {
    write_entry(entry_path(dir, n), cache.cyclotomic(n));
    ++stats.written;
  }
  return stats;
}

}  // namespace qcongr::cli
