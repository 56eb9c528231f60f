#include "stegcrypt/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "stegcrypt/errors.hpp"

namespace stegcrypt::metrics {

double mse(const Raster& original, const Raster& candidate) {
    if (original.width() != candidate.width() || original.height() != candidate.height())
        throw DomainError("image dimensions do not match");
    if (original.pixel_count() == 0) throw DomainError("cannot compare empty rasters");

    auto a = original.bytes();
    auto b = candidate.bytes();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); i += 4) {
        for (std::size_t c = 0; c < 3; ++c) { // alpha skipped
            std::int64_t d = std::int64_t{a[i + c]} - std::int64_t{b[i + c]};
            sum += static_cast<std::uint64_t>(d * d);
        }
    }
    return static_cast<double>(sum) / (3.0 * static_cast<double>(original.pixel_count()));
}

double psnr_from_mse(double mse, double max_i) {
    if (mse < 0) throw DomainError("mse cannot be negative");
    if (mse == 0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(max_i * max_i / mse);
}

QualityReport quality_report(const Raster& original, const Raster& candidate) {
    double m = mse(original, candidate);
    return QualityReport{m, psnr_from_mse(m), 255.0};
}

std::string csv_row(std::string_view image_name, const QualityReport& report) {
    char buf[64];
    std::string row(image_name);
    std::snprintf(buf, sizeof buf, ",%.5e,%.6f", report.mse, report.psnr_db);
    row += buf;
    return row;
}

} // namespace stegcrypt::metrics
