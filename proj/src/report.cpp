#include "fuzzylens/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>

#include "fuzzylens/image_io.hpp"

namespace fuzzylens {

namespace {

std::string fixed4(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string cell(const std::optional<double>& v) { return v ? fixed4(*v) : std::string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::kOriginal: return "original";
    case Method::kHistEq: return "histeq";
    case Method::kFuzzy: return "fuzzy";
  }
  return "unknown";
}

ReportRow original_row(const std::string& image_name, const GrayImage& original) {
  return ReportRow{image_name, Method::kOriginal, mean_intensity(original), std::nullopt, std::nullopt, std::nullopt};
}

ReportRow method_row(const std::string& image_name, Method method, const MetricsReport& metrics) {
  return ReportRow{image_name, method, metrics.mean_enhanced, metrics.mli, metrics.mse, metrics.psnr_db};
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::string out = "image,method,mean,mli,mse,psnr_db\n";
  for (const ReportRow& r : rows) {
    out += csv_field(r.image_name) + "," + method_name(r.method) + "," + fixed4(r.mean) + "," + cell(r.mli) + "," +
           cell(r.mse) + "," + cell(r.psnr_db) + "\n";
  }
  return out;
}

std::string render_markdown(const std::vector<ReportRow>& rows) {
  std::vector<std::string> images;
  for (const ReportRow& r : rows) {
    if (std::find(images.begin(), images.end(), r.image_name) == images.end()) images.push_back(r.image_name);
  }

  constexpr Method kColumns[] = {Method::kOriginal, Method::kHistEq, Method::kFuzzy};
  std::string out;
  for (const std::string& image : images) {
    const ReportRow* by_method[3] = {nullptr, nullptr, nullptr};
    for (const ReportRow& r : rows) {
      if (r.image_name == image) by_method[static_cast<int>(r.method)] = &r;
    }
    auto line = [&](const char* metric, auto pick) {
      out += std::string("| ") + metric + " |";
      for (Method m : kColumns) {
        const ReportRow* r = by_method[static_cast<int>(m)];
        const std::string v = r ? pick(*r) : std::string();
        out += v.empty() ? " |" : " " + v + " |";
      }
      out += "\n";
    };

    if (!out.empty()) out += "\n";
    out += "Evaluation of image " + image + "\n\n";
    out += "| Evaluation Metric | Original | Hist. Eqn | Fuzzy |\n";
    out += "|---|---:|---:|---:|\n";
    line("Mean", [](const ReportRow& r) { return fixed4(r.mean); });
    line("MLI", [](const ReportRow& r) { return cell(r.mli); });
    line("MSE", [](const ReportRow& r) { return cell(r.mse); });
    line("PSNR (dB)", [](const ReportRow& r) { return cell(r.psnr_db); });
  }
  return out;
}

std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format) {
  return format == ReportFormat::kCsv ? render_csv(rows) : render_markdown(rows);
}

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::optional<std::filesystem::path>& destination) {
  if (rows.empty()) throw std::invalid_argument("emit_report: no rows");
  const std::string text = render_report(rows, format);
  if (destination) {
    write_file_atomic(*destination, text);
  } else {
    std::cout << text << std::flush;
    if (!std::cout) throw std::runtime_error("<stdout>: write failed");
  }
}

}  // namespace fuzzylens
