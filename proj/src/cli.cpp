#include "fuzzylens/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "fuzzylens/config.hpp"
#include "fuzzylens/enhancement.hpp"
#include "fuzzylens/image_io.hpp"
#include "fuzzylens/metrics.hpp"
#include "fuzzylens/report.hpp"

namespace fuzzylens {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string config;
  std::string format = "csv";
  std::string save_dir;

  std::optional<fs::path> config_path() const {
    if (config.empty()) return std::nullopt;
    return fs::path(config);
  }
  std::optional<fs::path> output_path() const {
    if (output.empty()) return std::nullopt;
    return fs::path(output);
  }
};

FisEngine engine_for(const AppConfig& cfg, std::ostream& err) {
  FisEngine engine = make_engine(cfg);
  for (const auto& w : engine.warnings()) err << "fuzzylens: warning: " << w << "\n";
  return engine;
}

void write_text(const std::optional<fs::path>& dest, const std::string& text, std::ostream& out) {
  if (dest) {
    write_file_atomic(*dest, text);
  } else {
    out << text;
  }
}

int cmd_enhance(const Options& o, std::ostream& err) {
  const AppConfig cfg = load_config(o.config_path());
  const FisEngine engine = engine_for(cfg, err);
  const GrayImage img = read_image(o.input, cfg.luma_conversion);
  write_image(fuzzy_enhance(img, engine), o.output);
  return 0;
}

int cmd_histeq(const Options& o) {
  const AppConfig cfg = load_config(o.config_path());
  write_image(equalize(read_image(o.input, cfg.luma_conversion)), o.output);
  return 0;
}

int cmd_histogram(const Options& o, std::ostream& out) {
  const AppConfig cfg = load_config(o.config_path());
  const Histogram h = histogram(read_image(o.input, cfg.luma_conversion));
  std::string text = "intensity,count\n";
  for (std::size_t v = 0; v < h.counts.size(); ++v) text += std::to_string(v) + "," + std::to_string(h.counts[v]) + "\n";
  write_text(o.output_path(), text, out);
  return 0;
}

int cmd_lut(const Options& o, std::ostream& out, std::ostream& err) {
  const Lut256 lut = build_lut(engine_for(load_config(o.config_path()), err));
  std::string text = "input,output\n";
  for (std::size_t v = 0; v < lut.table.size(); ++v) text += std::to_string(v) + "," + std::to_string(lut.table[v]) + "\n";
  write_text(o.output_path(), text, out);
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const AppConfig cfg = load_config(o.config_path());
  const FisEngine engine = engine_for(cfg, err);
  const fs::path input(o.input);
  const GrayImage original = read_image(input, cfg.luma_conversion);

  const GrayImage histeq = equalize(original);
  const GrayImage fuzzy = fuzzy_enhance(original, engine);

  const std::string name = input.stem().string();
  const std::vector<ReportRow> rows = {
      original_row(name, original),
      method_row(name, Method::kHistEq, evaluate(original, histeq)),
      method_row(name, Method::kFuzzy, evaluate(original, fuzzy)),
  };
  const ReportFormat format = o.format == "markdown" ? ReportFormat::kMarkdown : ReportFormat::kCsv;

  if (!o.save_dir.empty()) {
    const fs::path dir(o.save_dir);
    fs::create_directories(dir);
    std::string ext = input.extension().string();
    if (ext != ".png" && ext != ".PNG") ext = ".pgm";
    write_image(histeq, dir / (name + "_histeq" + ext));
    write_image(fuzzy, dir / (name + "_fuzzy" + ext));
  }
  write_text(o.output_path(), render_report(rows, format), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy-logic contrast enhancement for 8-bit grayscale images", "fuzzylens"};
  app.require_subcommand(1);
  Options o;

  auto* enhance = app.add_subcommand("enhance", "Enhance an image with the fuzzy inference system");
  enhance->add_option("input", o.input, "Input image (PGM or PNG)")->required();
  enhance->add_option("-o,--output", o.output, "Output image (.pgm or .png)")->required();
  enhance->add_option("--config", o.config, "FIS configuration (JSON)");

  auto* histeq = app.add_subcommand("histeq", "Apply global histogram equalization");
  histeq->add_option("input", o.input, "Input image (PGM or PNG)")->required();
  histeq->add_option("-o,--output", o.output, "Output image (.pgm or .png)")->required();
  histeq->add_option("--config", o.config, "Configuration (only luma_conversion is used)");

  auto* hist = app.add_subcommand("histogram", "Write the 256-bin intensity histogram as CSV");
  hist->add_option("input", o.input, "Input image (PGM or PNG)")->required();
  hist->add_option("-o,--output", o.output, "Output CSV (stdout if omitted)");
  hist->add_option("--config", o.config, "Configuration (only luma_conversion is used)");

  auto* lut = app.add_subcommand("lut", "Write the compiled 256-entry lookup table as CSV");
  lut->add_option("-o,--output", o.output, "Output CSV (stdout if omitted)");
  lut->add_option("--config", o.config, "FIS configuration (JSON)");

  auto* compare = app.add_subcommand("compare", "Run both methods and report mean, MLI, MSE and PSNR");
  compare->add_option("input", o.input, "Input image (PGM or PNG)")->required();
  compare->add_option("--config", o.config, "FIS configuration (JSON)");
  compare->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "markdown"}));
  compare->add_option("-o,--output", o.output, "Report file (stdout if omitted)");
  compare->add_option("--save-dir", o.save_dir, "Also write the enhanced images here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "fuzzylens: " << e.what() << "\n" << "Run with --help for usage.\n";
    return 2;
  }

  try {
    if (*enhance) return cmd_enhance(o, err);
    if (*histeq) return cmd_histeq(o);
    if (*hist) return cmd_histogram(o, out);
    if (*lut) return cmd_lut(o, out, err);
    if (*compare) return cmd_compare(o, out, err);
  } catch (const std::exception& e) {
    err << "fuzzylens: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace fuzzylens
