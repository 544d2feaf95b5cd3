#include <gtest/gtest.h>

#include <limits>

#include "fuzzylens/report.hpp"

using namespace fuzzylens;

namespace {

// Values from the paper-style Deer table, used purely as formatting fixtures.
std::vector<ReportRow> deer_rows() {
  return {
      {"Deer", Method::kOriginal, 156.2849, std::nullopt, std::nullopt, std::nullopt},
      {"Deer", Method::kHistEq, 127.4542, 0.8155, 5630.0, 10.6241},
      {"Deer", Method::kFuzzy, 126.3528, 0.8085, 895.9924, 15.2879},
  };
}

}  // namespace

TEST(Csv, HeaderAndFixedPoint) {
  EXPECT_EQ(render_csv(deer_rows()),
            "image,method,mean,mli,mse,psnr_db\n"
            "Deer,original,156.2849,,,\n"
            "Deer,histeq,127.4542,0.8155,5630.0000,10.6241\n"
            "Deer,fuzzy,126.3528,0.8085,895.9924,15.2879\n");
}

TEST(Csv, OriginalOnlyRowHasEmptyCells) {
  EXPECT_EQ(render_csv({{"img", Method::kOriginal, 7.0, {}, {}, {}}}), "image,method,mean,mli,mse,psnr_db\nimg,original,7.0000,,,\n");
}

TEST(Csv, InfinitePsnr) {
  const ReportRow r{"same", Method::kFuzzy, 10.0, 1.0, 0.0, std::numeric_limits<double>::infinity()};
  EXPECT_EQ(render_csv({r}), "image,method,mean,mli,mse,psnr_db\nsame,fuzzy,10.0000,1.0000,0.0000,inf\n");
}

TEST(Csv, QuotesAwkwardNames) {
  const std::string csv = render_csv({{"a,\"b\"", Method::kOriginal, 1.0, {}, {}, {}}});
  EXPECT_NE(csv.find("\"a,\"\"b\"\"\",original"), std::string::npos) << csv;
}

TEST(Markdown, TableLayout) {
  EXPECT_EQ(render_markdown(deer_rows()),
            "Evaluation of image Deer\n"
            "\n"
            "| Evaluation Metric | Original | Hist. Eqn | Fuzzy |\n"
            "|---|---:|---:|---:|\n"
            "| Mean | 156.2849 | 127.4542 | 126.3528 |\n"
            "| MLI | | 0.8155 | 0.8085 |\n"
            "| MSE | | 5630.0000 | 895.9924 |\n"
            "| PSNR (dB) | | 10.6241 | 15.2879 |\n");
}

TEST(Markdown, OneTablePerImage) {
  auto rows = deer_rows();
  rows.push_back({"Lake", Method::kOriginal, 146.1035, {}, {}, {}});
  const std::string md = render_markdown(rows);
  EXPECT_NE(md.find("Evaluation of image Deer"), std::string::npos);
  EXPECT_NE(md.find("\n\nEvaluation of image Lake\n"), std::string::npos);
}

TEST(Emit, RejectsEmpty) { EXPECT_THROW(emit_report({}, ReportFormat::kCsv, std::nullopt), std::invalid_argument); }
