#pragma once

#include <string>

#include "atfdwt/ppm.hpp"

namespace atfdwt {

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when the images are identical
  double sd_original = 0.0;
  double sd_stego = 0.0;
  double image_fidelity = 1.0;
};

/// Mean of squared sample differences over every channel.
double mse(const RasterImage& a, const RasterImage& b);

/// 10 log10(255^2 / mse); +infinity when mse is zero.
double psnr_from_mse(double mse_value);
double psnr(const RasterImage& a, const RasterImage& b);

/// Population standard deviation of all samples, channels pooled.
double std_dev(const RasterImage& img);

/// 1 - sum((x - x')^2) / sum(x^2) over the original image x.
double image_fidelity(const RasterImage& original, const RasterImage& stego);

MetricsReport compute_metrics(const RasterImage& original, const RasterImage& stego);

/// Fixed-precision decimal, with "inf" for infinities.
std::string format_metric(double value, int precision = 6);

}  // namespace atfdwt
