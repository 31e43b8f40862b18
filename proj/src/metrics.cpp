#include "atfdwt/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "atfdwt/error.hpp"

namespace atfdwt {

namespace {

void require_same_shape(const RasterImage& a, const RasterImage& b) {
  if (!a.same_shape(b) || a.samples.size() != b.samples.size()) {
    throw Error(ErrorKind::DimensionMismatch, "images differ in size or channel count");
  }
  if (a.samples.empty()) throw Error(ErrorKind::EmptyImage, "image has no samples");
}

double squared_error_sum(const RasterImage& a, const RasterImage& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const double d = static_cast<double>(a.samples[i]) - static_cast<double>(b.samples[i]);
    sum += d * d;
  }
  return sum;
}

}  // namespace

double mse(const RasterImage& a, const RasterImage& b) {
  require_same_shape(a, b);
  return squared_error_sum(a, b) / static_cast<double>(a.samples.size());
}

double psnr_from_mse(double mse_value) {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(static_cast<double>(kMaxSampleValue) * kMaxSampleValue / mse_value);
}

double psnr(const RasterImage& a, const RasterImage& b) { return psnr_from_mse(mse(a, b)); }

double std_dev(const RasterImage& img) {
  if (img.samples.empty()) throw Error(ErrorKind::EmptyImage, "image has no samples");
  const double n = static_cast<double>(img.samples.size());
  double mean = 0.0;
  for (auto s : img.samples) mean += s;
  mean /= n;
  double var = 0.0;
  for (auto s : img.samples) var += (s - mean) * (s - mean);
  return std::sqrt(var / n);
}

double image_fidelity(const RasterImage& original, const RasterImage& stego) {
  require_same_shape(original, stego);
  const double residual = squared_error_sum(original, stego);
  double energy = 0.0;
  for (auto s : original.samples) energy += static_cast<double>(s) * s;
  if (energy == 0.0) {
    if (residual == 0.0) return 1.0;
    throw Error(ErrorKind::ZeroSignal, "original image has zero energy");
  }
  return 1.0 - residual / energy;
}

MetricsReport compute_metrics(const RasterImage& original, const RasterImage& stego) {
  MetricsReport r;
  r.mse = mse(original, stego);
  r.psnr_db = psnr_from_mse(r.mse);
  r.sd_original = std_dev(original);
  r.sd_stego = std_dev(stego);
  r.image_fidelity = image_fidelity(original, stego);
  return r;
}

std::string format_metric(double value, int precision) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

}  // namespace atfdwt
