#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "atfdwt/cli.hpp"
#include "atfdwt/dwt.hpp"
#include "atfdwt/pipeline.hpp"
#include "test_support.hpp"

using namespace atfdwt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "atfdwt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

RasterImage grey_from_plane(const IntMatrix& plane) {
  const std::vector<IntMatrix> planes{plane, plane, plane};
  return interleave_planes(planes);
}

// 8x8 cover whose vertical subband in every channel is the quoted 4x4 matrix,
// and a 2x2 secret whose channel 0 carries the quoted payload.
std::pair<RasterImage, RasterImage> quoted_fixture() {
  const SubbandPlane sb{IntMatrix(4, 4, 128), IntMatrix(4, 4, 0), testing::vertical_before(),
                        IntMatrix(4, 4, 0)};
  const auto cover = grey_from_plane(inverse_haar(sb));
  RasterImage secret(2, 2, 3, 0);
  const auto& p = testing::sample_payload();
  for (std::size_t i = 0; i < 4; ++i) secret.at(i / 2, i % 2, 0) = p[i];
  return {cover, secret};
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"embed", "--cover", "x"}).code == kExitUsage);
  CHECK(cli({"extract", "--stego", "x", "--key-s", "9", "--out", "y"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("embed, extract, verify and metrics through files") {
  testing::TempDir dir;
  std::mt19937 rng(101);
  write_ppm_file(dir.file("cover.ppm"), testing::random_image(rng, 32, 32, 3, 16, 239));
  const auto secret = testing::random_image(rng, 8, 8, 3);
  write_ppm_file(dir.file("secret.ppm"), secret, PpmFormat::P3);

  auto r = cli({"embed", "--cover", dir.file("cover.ppm"), "--secret", dir.file("secret.ppm"),
                "--key-s", "5", "--out", dir.file("stego.ppm"), "--report", dir.file("report.txt")});
  REQUIRE(r.code == kExitOk);
  const auto report = parse_key_values(slurp(dir.file("report.txt")));
  CHECK(report.at("payload_bytes") == "192");
  CHECK(report.at("clamped_block_count") == "0");
  CHECK(report.at("clamped_blocks").empty());

  r = cli({"extract", "--stego", dir.file("stego.ppm"), "--key-s", "5", "--out", dir.file("got.ppm")});
  REQUIRE(r.code == kExitOk);
  CHECK(read_ppm_file(dir.file("got.ppm")) == secret);

  r = cli({"extract", "--stego", dir.file("stego.ppm"), "--key-s", "5", "--out", dir.file("got3.ppm"),
           "--format", "P3"});
  CHECK(slurp(dir.file("got3.ppm")).rfind("P3\n8 8\n255\n", 0) == 0);

  r = cli({"verify", "--cover", dir.file("cover.ppm"), "--secret", dir.file("secret.ppm"), "--key-s", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("matched 192/192") != std::string::npos);

  r = cli({"metrics", "--original", dir.file("cover.ppm"), "--candidate", dir.file("stego.ppm"),
           "--report", dir.file("m.txt")});
  CHECK(r.code == kExitOk);
  const auto metrics = parse_key_values(r.out);
  CHECK(metrics.size() == 5);
  CHECK(std::stod(metrics.at("psnr_db")) > 30.0);
  CHECK(slurp(dir.file("m.txt")) == r.out);

  r = cli({"metrics", "--original", dir.file("cover.ppm"), "--candidate", dir.file("cover.ppm")});
  CHECK(parse_key_values(r.out).at("psnr_db") == "inf");
  CHECK(parse_key_values(r.out).at("image_fidelity") == "1.000000");
}

TEST_CASE("embed prints the report when no report path is given") {
  testing::TempDir dir;
  std::mt19937 rng(103);
  write_ppm_file(dir.file("cover.ppm"), testing::random_image(rng, 8, 8, 3, 16, 239));
  write_ppm_file(dir.file("secret.ppm"), testing::random_image(rng, 2, 2, 3));
  const auto r = cli({"embed", "--cover", dir.file("cover.ppm"), "--secret", dir.file("secret.ppm"),
                      "--key-s", "2", "--out", dir.file("s.ppm")});
  CHECK(r.code == kExitOk);
  CHECK(parse_key_values(r.out).at("payload_bytes") == "12");
}

TEST_CASE("quoted embedding through the command line") {
  testing::TempDir dir;
  const auto [cover, secret] = quoted_fixture();
  write_ppm_file(dir.file("cover.ppm"), cover);
  write_ppm_file(dir.file("secret.ppm"), secret);

  auto r = cli({"embed", "--cover", dir.file("cover.ppm"), "--secret", dir.file("secret.ppm"),
                "--key-s", "4", "--out", dir.file("plain.ppm"), "--no-adjust"});
  REQUIRE(r.code == kExitOk);
  CHECK(forward_haar(channel_plane(read_ppm_file(dir.file("plain.ppm")), 0)).vo ==
        testing::vertical_embedded());

  r = cli({"embed", "--cover", dir.file("cover.ppm"), "--secret", dir.file("secret.ppm"), "--key-s",
           "4", "--out", dir.file("adjusted.ppm")});
  REQUIRE(r.code == kExitOk);
  CHECK(forward_haar(channel_plane(read_ppm_file(dir.file("adjusted.ppm")), 0)).vo ==
        testing::vertical_adjusted());
}

TEST_CASE("precondition and I/O exit codes") {
  testing::TempDir dir;
  std::mt19937 rng(107);
  write_ppm_file(dir.file("cover.ppm"), testing::random_image(rng, 256, 256, 3));
  write_ppm_file(dir.file("small.ppm"), testing::random_image(rng, 64, 64, 3));
  write_ppm_file(dir.file("odd.ppm"), testing::random_image(rng, 5, 4, 3));
  {
    std::ofstream bad(dir.file("bad.ppm"));
    bad << "P6\n4 4\n255\nshort";
  }

  CHECK(cli({"embed", "--cover", dir.file("cover.ppm"), "--secret", dir.file("small.ppm"), "--key-s",
             "4", "--out", dir.file("x.ppm")})
            .code == kExitOk);
  CHECK(cli({"embed", "--cover", dir.file("cover.ppm"), "--secret", dir.file("cover.ppm"), "--key-s",
             "4", "--out", dir.file("x.ppm")})
            .code == kExitUsage);
  CHECK(cli({"embed", "--cover", dir.file("missing.ppm"), "--secret", dir.file("small.ppm"), "--key-s",
             "4", "--out", dir.file("x.ppm")})
            .code == kExitIo);
  CHECK(cli({"extract", "--stego", dir.file("bad.ppm"), "--key-s", "4", "--out", dir.file("y.ppm")})
            .code == kExitIo);
  CHECK(cli({"metrics", "--original", dir.file("cover.ppm"), "--candidate", dir.file("small.ppm")})
            .code == kExitUsage);
  CHECK(cli({"transform", "--in", dir.file("odd.ppm"), "--out-dir", dir.file("dump")}).code ==
        kExitUsage);
  CHECK(cli({"transform", "--in", dir.file("missing.ppm"), "--out-dir", dir.file("dump")}).code ==
        kExitIo);
}

TEST_CASE("verify reports clamped blocks on saturated covers") {
  testing::TempDir dir;
  std::mt19937 rng(109);
  auto cover = testing::random_image(rng, 16, 16, 3, 16, 239);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      for (std::size_t ch = 0; ch < 3; ++ch) cover.at(r, c, ch) = 255;
  write_ppm_file(dir.file("cover.ppm"), cover);
  write_ppm_file(dir.file("secret.ppm"), RasterImage(4, 4, 3, 0xFF));
  const auto r = cli({"verify", "--cover", dir.file("cover.ppm"), "--secret", dir.file("secret.ppm"),
                      "--key-s", "4"});
  CHECK(r.code != kExitOk);
  const auto kv = parse_key_values(r.out);
  CHECK(std::stoi(kv.at("clamped_blocks")) > 0);
}

TEST_CASE("transform dumps") {
  testing::TempDir dir;
  write_ppm_file(dir.file("sample.ppm"), grey_from_plane(testing::sample_pixels()));
  REQUIRE(cli({"transform", "--in", dir.file("sample.ppm"), "--out-dir", dir.file("dump")}).code == kExitOk);
  const auto text = slurp(dir.file("dump/channel1.subbands"));
  CHECK(text ==
        "SUBBAND lr 2 2\n175 194\n117 140\n"
        "SUBBAND ho 2 2\n6 2\n4 -14\n"
        "SUBBAND vo 2 2\n14 8\n1 2\n"
        "SUBBAND do 2 2\n-4 2\n8 -12\n");

  write_ppm_file(dir.file("flat.ppm"), RasterImage(6, 4, 3, 77));
  REQUIRE(cli({"transform", "--in", dir.file("flat.ppm"), "--out-dir", dir.file("flat")}).code == kExitOk);
  std::istringstream in(slurp(dir.file("flat/channel0.subbands")));
  CHECK(read_subband_dump(in) == IntMatrix(2, 3, 77));
  for (int i = 0; i < 3; ++i) CHECK(read_subband_dump(in) == IntMatrix(2, 3, 0));
}

TEST_CASE("bench command") {
  testing::TempDir dir;
  std::mt19937 rng(113);
  std::filesystem::create_directories(dir.path() / "corpus");
  std::filesystem::create_directories(dir.path() / "empty");
  for (const char* name : {"one.ppm", "two.ppm", "three.ppm"})
    write_ppm_file((dir.path() / "corpus" / name).string(), testing::synthetic_photo(rng, 32, 32));
  {
    std::ofstream junk(dir.path() / "corpus" / "broken.ppm");
    junk << "P7 nope";
  }
  write_ppm_file(dir.file("secret.ppm"), testing::random_image(rng, 8, 8, 3));

  auto r = cli({"bench", "--corpus", dir.file("corpus"), "--secret", dir.file("secret.ppm"), "--key-s",
                "4", "--out", dir.file("bench.csv")});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("broken.ppm") != std::string::npos);
  const auto csv = slurp(dir.file("bench.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header, 3 rows, average
  CHECK(r.out.find("Average") != std::string::npos);

  r = cli({"bench", "--corpus", dir.file("empty"), "--secret", dir.file("secret.ppm"), "--key-s", "4",
           "--out", dir.file("e.csv")});
  CHECK(r.code == kExitUsage);
}
