#pragma once

#include <string>
#include <string_view>

#include "stegcrypt/raster.hpp"

namespace stegcrypt::metrics {

struct QualityReport {
    double mse;     // mean squared error over R, G, B (alpha excluded)
    double psnr_db; // +infinity when mse = 0
    double max_i;   // channel maximum, 255 for 8-bit samples
};

/// Mean squared channel difference over the three color channels; alpha is
/// never embedded into and is excluded. Throws DomainError on a dimension
/// mismatch or empty rasters.
double mse(const Raster& original, const Raster& candidate);

/// 10 * log10(max_i^2 / mse); +infinity for mse = 0.
/// Throws DomainError for negative mse.
double psnr_from_mse(double mse, double max_i = 255.0);

QualityReport quality_report(const Raster& original, const Raster& candidate);

inline constexpr std::string_view kCsvHeader = "image,mse,psnr_db";

/// One CSV row: name, mse in 6-significant-digit scientific form, psnr with
/// six decimals.
std::string csv_row(std::string_view image_name, const QualityReport& report);

} // namespace stegcrypt::metrics
