#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fuzzylens/image.hpp"
#include "fuzzylens/metrics.hpp"

namespace fuzzylens {

enum class Method { kOriginal, kHistEq, kFuzzy };
enum class ReportFormat { kCsv, kMarkdown };

std::string method_name(Method m);

/// One column of the evaluation table. The original row carries only a mean.
struct ReportRow {
  std::string image_name;
  Method method = Method::kOriginal;
  double mean = 0.0;
  std::optional<double> mli;
  std::optional<double> mse;
  std::optional<double> psnr_db;
};

ReportRow original_row(const std::string& image_name, const GrayImage& original);
ReportRow method_row(const std::string& image_name, Method method, const MetricsReport& metrics);

/// "image,method,mean,mli,mse,psnr_db", 4 decimals, "inf" for infinite PSNR.
std::string render_csv(const std::vector<ReportRow>& rows);
/// One table per image: metrics down, Original / Hist. Eqn / Fuzzy across.
std::string render_markdown(const std::vector<ReportRow>& rows);
std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format);

/// Writes to `destination` atomically, or to stdout when it is empty.
/// Throws std::invalid_argument for an empty row list.
void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::optional<std::filesystem::path>& destination);

}  // namespace fuzzylens
