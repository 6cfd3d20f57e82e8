#include <doctest.h>

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "support.hpp"
#include "zlift/ingest.hpp"
#include "zlift/plot.hpp"
#include "zlift/quadratic.hpp"
#include "zlift/roots.hpp"
#include "zlift/scan.hpp"

using namespace zlift;
using zlift::testing::poly;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("zlift-test-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::filesystem::path write_list(const std::string& name, const std::string& body) {
  auto p = temp_dir(name) / "fields.txt";
  std::ofstream(p) << body;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ObstructionCertificate> sample_certificates() {
  std::vector<ObstructionCertificate> out;
  for (const char* f : {"x^3-3x^2+1", "x^3-4x^2+x+1", "x^3-x^2-10x-4"})
    out.push_back(make_certificate(certify_cubic(poly(f))));
  out.push_back(make_certificate(certify_quadratic(13)));
  out.push_back(certify_biquadratic(2, 3));
  out.push_back(certify_biquadratic(5, 13));
  out.push_back(certify_biquadratic(7, 3));
  return out;
}

double attr(const std::string& svg, const std::string& pattern) {
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex(pattern)));
  return std::stod(m[1].str());
}

}  // namespace

TEST_CASE("certificates verify and round-trip") {
  for (const auto& c : sample_certificates()) {
    CAPTURE(c.field.defining_poly);
    const auto r = verify_certificate(c);
    CHECK_MESSAGE(r.valid, r.summary());
    CHECK(c.trace_product == "1");
    const std::string line = serialize(c);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(deserialize(line) == c);
    CHECK(serialize(deserialize(line)) == line);
  }
  auto ex = make_certificate(certify_cubic(poly("x^3-2x^2-x+1")));
  CHECK(ex.verdict == "exceptional");
  CHECK(verify_certificate(ex).valid);
  CHECK(deserialize(serialize(ex)) == ex);
  CHECK(verify_certificate(make_certificate(certify_quadratic(5))).valid);
}

TEST_CASE("verifier rejections") {
  auto c = make_certificate(certify_cubic(poly("x^3-3x^2+1")));

  auto unit = c;
  unit.alpha = {Rational(1), Rational(0), Rational(0)};
  auto r = verify_certificate(unit);
  CHECK_FALSE(r.valid);
  CHECK(r.failed(check::norm));

  auto doubled = c;
  for (auto& x : doubled.delta) x *= 2;
  r = verify_certificate(doubled);
  CHECK_FALSE(r.valid);
  CHECK(r.failed(check::trace_product));
  CHECK_FALSE(r.failed(check::delta_codifferent));

  auto wrong_poly = c;
  wrong_poly.field.defining_poly = "x^3-2";
  CHECK(verify_certificate(wrong_poly).failed(check::field));

  auto wrong_version = c;
  wrong_version.schema_version = "something-else";
  CHECK(verify_certificate(wrong_version).failed(check::field));

  // exceptional verdict on a field that has an obstruction
  auto fake = c;
  fake.verdict = "exceptional";
  CHECK(verify_certificate(fake).failed(check::field));

  CHECK_THROWS_AS(deserialize("{not json"), Error);
  CHECK_THROWS_AS(deserialize("{\"verdict\": 3}"), Error);
}

TEST_CASE("single-field mutations are caught by the named check") {
  std::mt19937_64 rng(4242);
  for (const auto& c : sample_certificates()) {
    const std::string line = serialize(c);
    for (auto m : zlift::testing::kAllMutations) {
      for (int rep = 0; rep < 3; ++rep) {
        const auto mutated = zlift::testing::mutate(line, m, rng());
        const auto r = verify_certificate(mutated);
        CAPTURE(c.field.defining_poly);
        CAPTURE(zlift::testing::to_string(m));
        CHECK_FALSE(r.valid);
        CHECK(r.failed(zlift::testing::expected_check(m)));
      }
    }
  }
}

TEST_CASE("ingestion") {
  const auto path = write_list("ingest",
                               "# comment\n"
                               "x^3-x^2-2x+1\n"
                               "\n"
                               "x^+\n"
                               "x^3-x^2-10x-4 | 1, x, 1/2x^2+1/2x | 733\n"
                               "x^3+x^2-2x-1 | - | 49   # trailing comment\n"
                               "x^3-3x-1 | 1, x | 81\n");
  auto res = ingest_field_list(path);
  REQUIRE(res.entries.size() == 3);
  REQUIRE(res.errors.size() == 2);
  CHECK(res.errors[0].line == 4);
  CHECK(res.errors[1].line == 7);
  CHECK(res.entries[0].polynomial == poly("x^3-x^2-2x+1"));
  CHECK_FALSE(res.entries[0].integral_basis.has_value());
  CHECK(res.entries[1].integral_basis.has_value());
  CHECK(*res.entries[1].reference_discriminant == 733);
  CHECK(*res.entries[2].reference_discriminant == 49);
  CHECK(NumberField::create(res.entries[2].polynomial)->discriminant() == 49);

  CHECK_THROWS_AS(ingest_field_list("/nonexistent/zlift/list.txt"), Error);
}

TEST_CASE("scan") {
  const auto path = write_list("scan",
                               "x^3-2x^2-x+1\n"
                               "x^3-3x^2+1\n"
                               "x^3-4x^2+x+1\n"
                               "x^3-4x^2+3x+1\n"
                               "x^3-5x^2+4x+1\n");
  auto list = ingest_field_list(path);
  auto s = scan(list.entries, 2);
  CHECK(s.exceptional == 2);
  CHECK(s.obstructions == 3);
  CHECK(s.errors == 0);
  for (const auto& r : s.records)
    if (r.certificate) CHECK(verify_certificate(*r.certificate).valid);

  auto empty = scan({}, 4);
  CHECK(empty.records.empty());
  CHECK(empty.obstructions + empty.exceptional + empty.errors == 0);

  SUBCASE("per-entry failures do not stop the scan") {
    const auto bad = write_list("scan-bad", "x^3-2\nx^3-3x^2+1\nx^3-3x-1 | | 82\n");
    auto l = ingest_field_list(bad);
    auto r = scan(l.entries, 3);
    CHECK(r.errors == 2);
    CHECK(r.obstructions == 1);
    CHECK(r.records[0].status == "error");
    CHECK(r.records[2].status == "error");
  }
}

TEST_CASE("scan output does not depend on the worker count") {
  auto list = ingest_field_list(zlift::testing::data_dir() / "cubic_fields.txt");
  std::vector<FieldListEntry> head(list.entries.begin(), list.entries.begin() + 40);
  const auto d1 = temp_dir("w1"), d8 = temp_dir("w8");
  scan(head, 1, d1);
  scan(head, 8, d8);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(d1)) {
    ++files;
    CHECK(slurp(e.path()) == slurp(d8 / e.path().filename()));
  }
  CHECK(files == head.size() + 1);
}

TEST_CASE("plane H drawing") {
  const std::string svg = plot_plane_h(NumberField::create(poly("x^3+x^2-2x-1")));
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = svg.find("class=\"cone-boundary\"", pos)) != std::string::npos; ++pos) ++lines;
  CHECK(lines == 3);
  CHECK(svg.find("|u|^2 = 14/3") != std::string::npos);

  const double scale = attr(svg, "data-scale=\"([0-9.]+)\"");
  const double ux = attr(svg, "data-name=\"u\"[^>]*x2=\"([-0-9.]+)\"") - 320;
  const double uy = attr(svg, "data-name=\"u\"[^>]*y2=\"([-0-9.]+)\"") - 320;
  CHECK((ux * ux + uy * uy) / (scale * scale) == doctest::Approx(14.0 / 3).epsilon(0.01));

  // D1 in plane coordinates is Y > sqrt3 |X|
  const double dx = attr(svg, "class=\"delta1\" cx=\"([-0-9.]+)\"") - 320;
  const double dy = 320 - attr(svg, "class=\"delta1\" cx=\"[-0-9.]+\" cy=\"([-0-9.]+)\"");
  CHECK(dy > std::sqrt(3.0) * std::abs(dx));

  CHECK_THROWS_AS(plot_plane_h(NumberField::create(poly("x^2-2"))), Error);
}

TEST_CASE("isolation width from the environment") {
  ::setenv("ZLIFT_ISOLATION_WIDTH", "1/1024", 1);
  auto c = make_certificate(certify_cubic(poly("x^3-3x-1")));
  CHECK(c.isolation_width == "1/1024");
  CHECK(verify_certificate(c).valid);
  ::setenv("ZLIFT_ISOLATION_WIDTH", "-1", 1);
  CHECK_THROWS_AS(default_isolation_width(), Error);
  ::unsetenv("ZLIFT_ISOLATION_WIDTH");
  CHECK(default_isolation_width() == pow2_inverse(20));
}
