#include "atfdwt/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>
#include <thread>

#include "atfdwt/dwt.hpp"
#include "atfdwt/error.hpp"

namespace atfdwt {

std::pair<std::size_t, std::size_t> secret_dimensions(std::size_t cover_width,
                                                      std::size_t cover_height) {
  return {cover_width / 4, cover_height / 4};
}

std::vector<std::uint8_t> secret_to_payload(const RasterImage& secret) {
  std::vector<std::uint8_t> out;
  out.reserve(secret.samples.size());
  for (std::size_t c = 0; c < secret.channels; ++c)
    for (std::size_t r = 0; r < secret.height; ++r)
      for (std::size_t col = 0; col < secret.width; ++col) out.push_back(secret.at(r, col, c));
  return out;
}

RasterImage payload_to_secret(std::span<const std::uint8_t> payload, std::size_t width,
                              std::size_t height, std::size_t channels) {
  if (payload.size() != width * height * channels) {
    throw Error(ErrorKind::DimensionMismatch, "payload size does not match secret dimensions");
  }
  RasterImage img(width, height, channels);
  std::size_t i = 0;
  for (std::size_t c = 0; c < channels; ++c)
    for (std::size_t r = 0; r < height; ++r)
      for (std::size_t col = 0; col < width; ++col) img.at(r, col, c) = payload[i++];
  return img;
}

std::vector<SubbandPlane> decompose(const RasterImage& img) {
  std::vector<SubbandPlane> out;
  out.reserve(img.channels);
  for (std::size_t c = 0; c < img.channels; ++c) out.push_back(forward_haar(channel_plane(img, c)));
  return out;
}

RasterImage synthesize(std::span<const SubbandPlane> subbands) {
  std::vector<IntMatrix> planes;
  planes.reserve(subbands.size());
  for (const auto& sb : subbands) {
    auto plane = inverse_haar(sb);
    for (auto& v : plane.values()) v = std::clamp(v, 0, kMaxSampleValue);
    planes.push_back(std::move(plane));
  }
  return interleave_planes(planes);
}

namespace {

void check_cover(const RasterImage& cover) {
  if (cover.width % 2 != 0 || cover.height % 2 != 0) {
    throw Error(ErrorKind::OddDimensions, std::to_string(cover.width) + "x" +
                                              std::to_string(cover.height) + " is not even");
  }
  if (cover.width < 4 || cover.height < 4) {
    throw Error(ErrorKind::DimensionMismatch, "cover must be at least 4x4");
  }
}

}  // namespace

EmbedOutcome embed_image(const RasterImage& cover, const RasterImage& secret, const StegoKey& key,
                         const EmbedOptions& options) {
  check_cover(cover);
  const auto [sw, sh] = secret_dimensions(cover.width, cover.height);
  if (secret.width != sw || secret.height != sh || secret.channels != cover.channels) {
    throw Error(ErrorKind::DimensionMismatch,
                "secret must be " + std::to_string(sw) + "x" + std::to_string(sh) + "x" +
                    std::to_string(cover.channels) + ", got " + std::to_string(secret.width) + "x" +
                    std::to_string(secret.height) + "x" + std::to_string(secret.channels));
  }

  const auto payload = secret_to_payload(secret);
  auto embedded = embed_payload(decompose(cover), payload, key, options);
  EmbedOutcome outcome{synthesize(embedded.subbands), std::move(embedded.report)};

  int max_delta = 0;
  for (std::size_t i = 0; i < cover.samples.size(); ++i) {
    max_delta = std::max(max_delta, std::abs(static_cast<int>(cover.samples[i]) -
                                             static_cast<int>(outcome.stego.samples[i])));
  }
  outcome.report.max_abs_pixel_delta = max_delta;
  return outcome;
}

RasterImage extract_image(const RasterImage& stego, const StegoKey& key) {
  check_cover(stego);
  const auto [sw, sh] = secret_dimensions(stego.width, stego.height);
  const auto subbands = decompose(stego);
  const auto payload = extract_payload(subbands, key, sw * sh * stego.channels);
  return payload_to_secret(payload, sw, sh, stego.channels);
}

VerifyOutcome verify_roundtrip(const RasterImage& cover, const RasterImage& secret,
                               const StegoKey& key, const EmbedOptions& options) {
  auto embedded = embed_image(cover, secret, key, options);
  // Pass through the codec so the check covers exactly what a receiver reads.
  const auto received = parse_ppm(std::span<const std::uint8_t>(write_ppm(embedded.stego)));
  const auto recovered = extract_image(received, key);

  VerifyOutcome v;
  v.total_bytes = secret.samples.size();
  for (std::size_t i = 0; i < v.total_bytes; ++i)
    if (recovered.samples[i] == secret.samples[i]) ++v.matched_bytes;
  v.report = std::move(embedded.report);
  return v;
}

std::string format_embed_report(const EmbedReport& r) {
  std::ostringstream out;
  out << "payload_bytes: " << r.payload_bytes << '\n'
      << "coefficients_written: " << r.coefficients_written << '\n'
      << "adjustments_applied: " << r.adjustments_applied << '\n'
      << "max_abs_pixel_delta: " << r.max_abs_pixel_delta << '\n'
      << "clamped_block_count: " << r.clamped_blocks.size() << '\n'
      << "clamped_blocks: ";
  for (std::size_t i = 0; i < r.clamped_blocks.size(); ++i) {
    const auto& b = r.clamped_blocks[i];
    if (i) out << ',';
    out << b.channel << ':' << b.row << ':' << b.col;
  }
  out << '\n';
  return out.str();
}

std::string format_metrics_report(const MetricsReport& r) {
  std::ostringstream out;
  out << "mse: " << format_metric(r.mse) << '\n'
      << "psnr_db: " << format_metric(r.psnr_db) << '\n'
      << "sd_original: " << format_metric(r.sd_original) << '\n'
      << "sd_stego: " << format_metric(r.sd_stego) << '\n'
      << "image_fidelity: " << format_metric(r.image_fidelity) << '\n';
  return out.str();
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    auto value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    kv[line.substr(0, colon)] = value;
  }
  return kv;
}

BenchResult run_bench(const std::filesystem::path& corpus, const RasterImage& secret,
                      const StegoKey& key, const EmbedOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(corpus, ec)) throw Error(ErrorKind::Io, corpus.string() + " is not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  auto run_one = [&](const fs::path& path) {
    const auto cover = read_ppm_file(path.string());
    const auto outcome = embed_image(cover, secret, key, options);
    return BenchRow{path.stem().string(), compute_metrics(cover, outcome.stego),
                    outcome.report.clamped_blocks.size()};
  };

  BenchResult result;
  const std::size_t window = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < files.size(); first += window) {
    const std::size_t last = std::min(files.size(), first + window);
    std::vector<std::future<BenchRow>> pending;
    for (std::size_t i = first; i < last; ++i)
      pending.push_back(std::async(std::launch::async, run_one, files[i]));
    for (std::size_t i = first; i < last; ++i) {
      try {
        result.rows.push_back(pending[i - first].get());
      } catch (const Error& e) {
        result.warnings.push_back("warning: skipping " + files[i].filename().string() + ": " +
                                  e.what());
      }
    }
  }
  if (!result.rows.empty()) {
    auto& avg = result.average;
    avg = MetricsReport{0.0, 0.0, 0.0, 0.0, 0.0};
    for (const auto& row : result.rows) {
      avg.mse += row.metrics.mse;
      avg.psnr_db += row.metrics.psnr_db;
      avg.sd_original += row.metrics.sd_original;
      avg.sd_stego += row.metrics.sd_stego;
      avg.image_fidelity += row.metrics.image_fidelity;
    }
    const double n = static_cast<double>(result.rows.size());
    avg.mse /= n;
    avg.psnr_db /= n;
    avg.sd_original /= n;
    avg.sd_stego /= n;
    avg.image_fidelity /= n;
  }
  return result;
}

namespace {

std::string table_line(const std::string& name, const MetricsReport& m, std::size_t name_width) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-*s  %12s  %12s  %12s  %12s  %10s\n", static_cast<int>(name_width),
                name.c_str(), format_metric(m.mse).c_str(), format_metric(m.psnr_db).c_str(),
                format_metric(m.sd_original).c_str(), format_metric(m.sd_stego).c_str(),
                format_metric(m.image_fidelity).c_str());
  return buf;
}

}  // namespace

std::string format_bench_table(const BenchResult& result) {
  std::size_t width = std::string("Average").size();
  for (const auto& row : result.rows) width = std::max(width, row.name.size());
  char header[256];
  std::snprintf(header, sizeof header, "%-*s  %12s  %12s  %12s  %12s  %10s\n", static_cast<int>(width),
                "Image", "MSE", "PSNR", "SD_orig", "SD_stego", "IF");
  std::string out = header;
  for (const auto& row : result.rows) out += table_line(row.name, row.metrics, width);
  if (!result.rows.empty()) out += table_line("Average", result.average, width);
  return out;
}

std::string format_bench_csv(const BenchResult& result) {
  auto line = [](const std::string& name, const MetricsReport& m) {
    return name + ',' + format_metric(m.mse) + ',' + format_metric(m.psnr_db) + ',' +
           format_metric(m.sd_original) + ',' + format_metric(m.sd_stego) + ',' +
           format_metric(m.image_fidelity) + '\n';
  };
  std::string out = "image,mse,psnr_db,sd_original,sd_stego,image_fidelity\n";
  for (const auto& row : result.rows) out += line(row.name, row.metrics);
  if (!result.rows.empty()) out += line("Average", result.average);
  return out;
}

}  // namespace atfdwt
