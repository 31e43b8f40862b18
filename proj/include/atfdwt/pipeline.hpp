#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atfdwt/metrics.hpp"
#include "atfdwt/ppm.hpp"
#include "atfdwt/stego.hpp"

namespace atfdwt {

/// The secret is a quarter of the cover in each dimension, which fills the
/// vertical subband exactly.
std::pair<std::size_t, std::size_t> secret_dimensions(std::size_t cover_width,
                                                      std::size_t cover_height);

/// Channel-planar serialisation (all of channel 0 row-major, then channel 1,
/// ...) so that secret channel c lands in cover channel c.
std::vector<std::uint8_t> secret_to_payload(const RasterImage& secret);
RasterImage payload_to_secret(std::span<const std::uint8_t> payload, std::size_t width,
                              std::size_t height, std::size_t channels);

std::vector<SubbandPlane> decompose(const RasterImage& img);

/// Synthesises every channel, clamps to [0, 255] and interleaves.
RasterImage synthesize(std::span<const SubbandPlane> subbands);

struct EmbedOutcome {
  RasterImage stego;
  EmbedReport report;
};

EmbedOutcome embed_image(const RasterImage& cover, const RasterImage& secret, const StegoKey& key,
                         const EmbedOptions& options = {});

RasterImage extract_image(const RasterImage& stego, const StegoKey& key);

struct VerifyOutcome {
  std::size_t matched_bytes = 0;
  std::size_t total_bytes = 0;
  EmbedReport report;
  bool intact() const noexcept { return matched_bytes == total_bytes; }
  // Clamped blocks put the payload at risk even when this cover happened to
  // survive the round trip.
  bool authentic() const noexcept { return intact() && report.clamped_blocks.empty(); }
};

/// Embeds, re-reads the stego image through the decoder path and compares.
VerifyOutcome verify_roundtrip(const RasterImage& cover, const RasterImage& secret,
                               const StegoKey& key, const EmbedOptions& options = {});

std::string format_embed_report(const EmbedReport& report);
std::string format_metrics_report(const MetricsReport& report);

/// Parses "key: value" lines.
std::map<std::string, std::string> parse_key_values(const std::string& text);

struct BenchRow {
  std::string name;
  MetricsReport metrics;
  std::size_t clamped_blocks = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  MetricsReport average;
  std::vector<std::string> warnings;
};

/// Runs every readable PPM in `corpus` (sorted by file name) through
/// embed_image and measures it against its cover.
BenchResult run_bench(const std::filesystem::path& corpus, const RasterImage& secret,
                      const StegoKey& key, const EmbedOptions& options = {});

std::string format_bench_table(const BenchResult& result);
std::string format_bench_csv(const BenchResult& result);

}  // namespace atfdwt
