// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icx/core_table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <string>

#include "icx/errors.hpp"

namespace icx {
namespace {

constexpr char kMagic[4] = {'I', 'C', 'X', '1'};
constexpr std::size_t kHeaderSize = 16;
constexpr std::uint8_t kUnset = 0xFF;

// Additive scan may stop at a once a*(n-a) >= kStop[best]: beyond that point
// ||a|| + ||n-a|| >= 3*log3(a*(n-a)) >= best, so no split can improve.
// The 1e-9 margin keeps rounding from ever stopping early.
const std::array<long double, 256>& stop_thresholds() {
  static const auto table = [] {
    std::array<long double, 256> t{};
    for (std::size_t c = 0; c < t.size(); ++c) {
      t[c] = std::pow(3.0L, (static_cast<long double>(c) + 1e-9L) / 3.0L);
    }
    return t;
  }();
  return table;
}

void put_le(unsigned char* out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out[i] = static_cast<unsigned char>(value >> (8 * i));
}

std::uint64_t get_le(const unsigned char* in, int bytes) {
  std::uint64_t value = 0;
  for (int i = bytes - 1; i >= 0; --i) value = (value << 8) | in[i];
  return value;
}

}  // namespace

long double three_log3(long double x) {
  static const long double kLog3 = std::log(3.0L);
  return 3.0L * std::log(x) / kLog3;
}

ComplexityTable ComplexityTable::build(std::uint64_t limit,
                                       const BuildOptions& options) {
  if (limit == 0) {
    throw Error(ErrorKind::kInvalidArgument, "table limit must be >= 1");
  }
  if (limit > options.max_entries) {
    throw Error(ErrorKind::kResourceLimit,
                "table limit " + std::to_string(limit) +
                    " exceeds the memory budget of " +
                    std::to_string(options.max_entries) + " entries (" +
                    std::to_string(limit) + " bytes requested)");
  }

  const auto& stop = stop_thresholds();
  std::vector<std::uint8_t> c(limit, kUnset);
  c[0] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    // c[n-1] already holds the best product split pushed by smaller factors.
    int best = c[n - 1];
    const std::uint64_t half = n / 2;
    for (std::uint64_t a = 1; a <= half; ++a) {
      if (options.additive_prune &&
          static_cast<long double>(a) * static_cast<long double>(n - a) >=
              stop[best]) {
        break;
      }
      const int v = c[a - 1] + c[n - a - 1];
      if (v < best) best = v;
    }
    c[n - 1] = static_cast<std::uint8_t>(best);

    // Both factors of n*d (2 <= d <= n) are final now.
    if (n <= limit / 2) {
      const std::uint64_t d_max = std::min(n, limit / n);
      for (std::uint64_t d = 2; d <= d_max; ++d) {
        const int v = best + c[d - 1];
        std::uint8_t& slot = c[n * d - 1];
        if (v < slot) slot = static_cast<std::uint8_t>(v);
      }
    }
  }
  return ComplexityTable(std::move(c));
}

int ComplexityTable::query(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw Error(ErrorKind::kOutOfRange,
                "n=" + std::to_string(n) + " outside table range [1, " +
                    std::to_string(limit()) + "]");
  }
  return costs_[n - 1];
}

void ComplexityTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  }
  unsigned char header[kHeaderSize] = {};
  std::memcpy(header, kMagic, sizeof(kMagic));
  put_le(header + 4, kFormatVersion, 2);
  put_le(header + 8, limit(), 8);
  out.write(reinterpret_cast<const char*>(header), kHeaderSize);
  out.write(reinterpret_cast<const char*>(costs_.data()),
            static_cast<std::streamsize>(costs_.size()));
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

ComplexityTable ComplexityTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open " + path.string());
  }
  unsigned char header[kHeaderSize] = {};
  in.read(reinterpret_cast<char*>(header), kHeaderSize);
  const auto got = static_cast<std::size_t>(in.gcount());
  if (std::memcmp(header, kMagic, std::min(got, sizeof(kMagic))) != 0) {
    throw Error(ErrorKind::kBadMagic,
                path.string() + ": bad magic (expected \"ICX1\")");
  }
  if (got < kHeaderSize) {
    throw Error(ErrorKind::kTruncated, path.string() + ": truncated header");
  }
  const auto version = get_le(header + 4, 2);
  if (version != kFormatVersion) {
    throw Error(ErrorKind::kVersionMismatch,
                path.string() + ": format version " + std::to_string(version) +
                    ", expected " + std::to_string(kFormatVersion));
  }
  if (get_le(header + 6, 2) != 0) {
    throw Error(ErrorKind::kCorruptFile,
                path.string() + ": reserved header bytes are not zero");
  }
  const std::uint64_t limit = get_le(header + 8, 8);
  if (limit == 0) {
    throw Error(ErrorKind::kCorruptFile, path.string() + ": declared limit 0");
  }

  std::error_code ec;
  const auto file_size = std::filesystem::file_size(path, ec);
  if (ec) throw Error(ErrorKind::kIo, path.string() + ": " + ec.message());
  const std::uint64_t payload = file_size - kHeaderSize;
  if (payload < limit) {
    throw Error(ErrorKind::kTruncated,
                path.string() + ": declared limit " + std::to_string(limit) +
                    " but only " + std::to_string(payload) + " payload bytes");
  }
  if (payload > limit) {
    throw Error(ErrorKind::kCorruptFile,
                path.string() + ": " + std::to_string(payload - limit) +
                    " trailing bytes after payload");
  }

  std::vector<std::uint8_t> costs(limit);
  in.read(reinterpret_cast<char*>(costs.data()),
          static_cast<std::streamsize>(limit));
  if (static_cast<std::uint64_t>(in.gcount()) != limit) {
    throw Error(ErrorKind::kTruncated, path.string() + ": short read");
  }
  if (costs[0] != 1) {
    throw Error(ErrorKind::kCorruptFile, path.string() + ": entry for n=1 is not 1");
  }
  return ComplexityTable(std::move(costs));
}

std::vector<int> brute_oracle_range(std::uint64_t n) {
  if (n == 0 || n > kBruteOracleMax) {
    throw Error(ErrorKind::kOutOfRange,
                "brute_oracle: n=" + std::to_string(n) + " outside [1, " +
                    std::to_string(kBruteOracleMax) + "]");
  }
  std::vector<int> c(n + 1, 0);
  c[1] = 1;
  for (std::uint64_t m = 2; m <= n; ++m) {
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t a = 1; a <= m / 2; ++a) best = std::min(best, c[a] + c[m - a]);
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) best = std::min(best, c[d] + c[m / d]);
    }
    c[m] = best;
  }
  c.erase(c.begin());
  return c;
}

int brute_oracle(std::uint64_t n) { return brute_oracle_range(n).back(); }

}  // namespace icx
