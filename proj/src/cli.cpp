#include "atfdwt/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "atfdwt/dwt.hpp"
#include "atfdwt/metrics.hpp"
#include "atfdwt/pipeline.hpp"
#include "atfdwt/ppm.hpp"

namespace atfdwt {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownMagic:
    case ErrorKind::MalformedHeader:
    case ErrorKind::UnsupportedMaxVal:
    case ErrorKind::TruncatedBody:
    case ErrorKind::InvalidImage:
    case ErrorKind::Io:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

namespace {

struct Options {
  std::string cover, secret, stego, out, report, original, candidate, in, out_dir, corpus;
  int key_s = 4;
  bool no_adjust = false;
  std::string format = "P6";
};

PpmFormat parse_format(const std::string& f) { return f == "P3" ? PpmFormat::P3 : PpmFormat::P6; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot create " + path);
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write failed for " + path);
}

int cmd_embed(const Options& o, std::ostream& out) {
  const auto cover = read_ppm_file(o.cover);
  const auto secret = read_ppm_file(o.secret);
  const auto outcome =
      embed_image(cover, secret, StegoKey(o.key_s), EmbedOptions{.fidelity_adjustment = !o.no_adjust});
  write_ppm_file(o.out, outcome.stego, parse_format(o.format));
  const auto report = format_embed_report(outcome.report);
  if (o.report.empty()) {
    out << report;
  } else {
    write_text(o.report, report);
    out << "embedded " << outcome.report.payload_bytes << " bytes, "
        << outcome.report.clamped_blocks.size() << " clamped blocks\n";
  }
  return kExitOk;
}

int cmd_extract(const Options& o, std::ostream& out) {
  const auto stego = read_ppm_file(o.stego);
  const auto secret = extract_image(stego, StegoKey(o.key_s));
  write_ppm_file(o.out, secret, parse_format(o.format));
  out << "extracted " << secret.width << "x" << secret.height << " secret\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto cover = read_ppm_file(o.cover);
  const auto secret = read_ppm_file(o.secret);
  const auto v = verify_roundtrip(cover, secret, StegoKey(o.key_s),
                                  EmbedOptions{.fidelity_adjustment = !o.no_adjust});
  out << "matched " << v.matched_bytes << "/" << v.total_bytes << " bytes\n"
      << "clamped_blocks: " << v.report.clamped_blocks.size() << '\n'
      << (v.authentic() ? "authentic" : "NOT authentic") << '\n';
  return v.authentic() ? kExitOk : kExitMismatch;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const auto original = read_ppm_file(o.original);
  const auto candidate = read_ppm_file(o.candidate);
  const auto text = format_metrics_report(compute_metrics(original, candidate));
  out << text;
  if (!o.report.empty()) write_text(o.report, text);
  return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
  namespace fs = std::filesystem;
  const auto img = read_ppm_file(o.in);
  const auto subbands = decompose(img);
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + o.out_dir);
  for (std::size_t c = 0; c < subbands.size(); ++c) {
    const auto path = (fs::path(o.out_dir) / ("channel" + std::to_string(c) + ".subbands")).string();
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::Io, "cannot create " + path);
    write_subband_dump(f, "lr", subbands[c].lr);
    write_subband_dump(f, "ho", subbands[c].ho);
    write_subband_dump(f, "vo", subbands[c].vo);
    write_subband_dump(f, "do", subbands[c].dg);
    if (!f) throw Error(ErrorKind::Io, "write failed for " + path);
    out << path << '\n';
  }
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  const auto secret = read_ppm_file(o.secret);
  const auto result = run_bench(o.corpus, secret, StegoKey(o.key_s),
                                EmbedOptions{.fidelity_adjustment = !o.no_adjust});
  for (const auto& w : result.warnings) err << w << '\n';
  if (result.rows.empty()) {
    err << "no images processed in " << o.corpus << '\n';
    return kExitUsage;
  }
  out << format_bench_table(result);
  write_text(o.out, format_bench_csv(result));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wavelet-domain image authentication: hide a secret image in a cover"};
  app.require_subcommand(1);
  Options o;

  auto key_option = [&](CLI::App* sub) {
    sub->add_option("--key-s", o.key_s, "Hash modulus S")->required()->check(CLI::Range(2, 7));
  };
  auto format_option = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output PPM flavour")->check(CLI::IsMember({"P6", "P3"}));
  };

  auto* embed = app.add_subcommand("embed", "Embed a secret image into a cover");
  embed->add_option("--cover", o.cover)->required();
  embed->add_option("--secret", o.secret)->required();
  key_option(embed);
  embed->add_option("--out", o.out)->required();
  embed->add_option("--report", o.report);
  embed->add_flag("--no-adjust", o.no_adjust, "Skip fidelity adjustment");
  format_option(embed);

  auto* extract = app.add_subcommand("extract", "Recover the secret image");
  extract->add_option("--stego", o.stego)->required();
  key_option(extract);
  extract->add_option("--out", o.out)->required();
  format_option(extract);

  auto* verify = app.add_subcommand("verify", "Embed then extract in memory and compare");
  verify->add_option("--cover", o.cover)->required();
  verify->add_option("--secret", o.secret)->required();
  key_option(verify);
  verify->add_flag("--no-adjust", o.no_adjust);

  auto* metrics = app.add_subcommand("metrics", "MSE, PSNR, SD and IF for an image pair");
  metrics->add_option("--original", o.original)->required();
  metrics->add_option("--candidate", o.candidate)->required();
  metrics->add_option("--report", o.report);

  auto* transform = app.add_subcommand("transform", "Dump the Haar subbands of every channel");
  transform->add_option("--in", o.in)->required();
  transform->add_option("--out-dir", o.out_dir)->required();

  auto* bench = app.add_subcommand("bench", "Embed into every cover of a corpus and tabulate");
  bench->add_option("--corpus", o.corpus)->required();
  bench->add_option("--secret", o.secret)->required();
  key_option(bench);
  bench->add_option("--out", o.out, "CSV output")->required();
  bench->add_flag("--no-adjust", o.no_adjust);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*embed) return cmd_embed(o, out);
    if (*extract) return cmd_extract(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*metrics) return cmd_metrics(o, out);
    if (*transform) return cmd_transform(o, out);
    if (*bench) return cmd_bench(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace atfdwt
