#include "zlift/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "zlift/cubic.hpp"

namespace zlift {

namespace {

struct P {
  double x, y;
};

// sorted-frame point (y1, y2, y3) -> orthonormal coordinates on H
P to_plane(const std::array<double, 3>& y) {
  return {(y[0] - y[1]) / std::sqrt(2.0), (y[0] + y[1] - 2 * y[2]) / std::sqrt(6.0)};
}

std::array<double, 3> sorted(const FieldElement& x, const std::vector<std::size_t>& frame) {
  const Rational w = pow2_inverse(40);
  std::array<double, 3> out{};
  for (std::size_t s = 0; s < 3; ++s) out[s] = to_double(x.embedding(frame[s], w).midpoint());
  const double mean = (out[0] + out[1] + out[2]) / 3;
  for (double& v : out) v -= mean;
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string plot_plane_h(const FieldPtr& field) {
  if (field->degree() != 3) throw Error(Errc::unsupported_degree, "plot needs a cubic field");
  const CubicSetup setup = cubic_setup(field);
  const DeltaWitnessPair d = construct_deltas(setup);
  const auto& frame = setup.frame;
  const FieldElement gamma = d.v_flipped ? -setup.v.representative : setup.v.representative;

  const P u = to_plane(sorted(setup.beta, frame));
  const P v = to_plane(sorted(gamma, frame));
  const P v1{v.x + to_double(Rational(d.k1)) * u.x, v.y + to_double(Rational(d.k1)) * u.y};
  const P dl = to_plane(sorted(d.delta1, frame));

  const double reach = 2.5 * std::max(std::hypot(u.x, u.y), std::hypot(v.x, v.y));
  const double size = 640, scale = size / (2 * reach);
  auto sx = [&](double x) { return fmt(size / 2 + x * scale); };
  auto sy = [&](double y) { return fmt(size / 2 - y * scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\" data-scale=\"" << fmt(scale) << "\">\n";
  os << "<title>plane H for " << to_string(field->defining_polynomial()) << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // y_i = y_j, in sorted coordinates
  const std::array<std::array<double, 3>, 3> boundaries{{{1, 1, -2}, {1, -2, 1}, {-2, 1, 1}}};
  const char* names[] = {"y1=y2", "y1=y3", "y2=y3"};
  for (std::size_t i = 0; i < 3; ++i) {
    const P b = to_plane(boundaries[i]);
    const double n = std::hypot(b.x, b.y), t = 2 * reach / n;
    os << "<line class=\"cone-boundary\" data-name=\"" << names[i] << "\" x1=\"" << sx(-t * b.x)
       << "\" y1=\"" << sy(-t * b.y) << "\" x2=\"" << sx(t * b.x) << "\" y2=\"" << sy(t * b.y)
       << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  }
  const std::array<std::pair<const char*, std::array<double, 3>>, 3> cones{
      {{"C0", {1, 0, -1}}, {"C1", {1, -1, 0}}, {"C2", {0, -1, 1}}}};
  for (const auto& [name, dir] : cones) {
    const P c = to_plane(dir);
    const double t = 0.8 * reach / std::hypot(c.x, c.y);
    os << "<text class=\"cone-label\" x=\"" << sx(t * c.x) << "\" y=\"" << sy(t * c.y)
       << "\" font-size=\"14\">" << name << "</text>\n";
  }

  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      const P p{a * u.x + b * v.x, a * u.y + b * v.y};
      if (std::abs(p.x) > reach || std::abs(p.y) > reach) continue;
      os << "<circle class=\"lattice\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
         << "\" r=\"2.5\" fill=\"#333\"/>\n";
    }

  // the line v + R u
  const double un = std::hypot(u.x, u.y), t = 3 * reach / un;
  os << "<line class=\"line-l\" x1=\"" << sx(v.x - t * u.x) << "\" y1=\"" << sy(v.y - t * u.y)
     << "\" x2=\"" << sx(v.x + t * u.x) << "\" y2=\"" << sy(v.y + t * u.y)
     << "\" stroke=\"#2a7\"/>\n";
  for (const auto& [name, p, colour] :
       {std::tuple{"u", u, "#c22"}, std::tuple{"v", v, "#22c"}, std::tuple{"v1", v1, "#a2a"}}) {
    os << "<line class=\"vector\" data-name=\"" << name << "\" x1=\"" << sx(0) << "\" y1=\"" << sy(0)
       << "\" x2=\"" << sx(p.x) << "\" y2=\"" << sy(p.y) << "\" stroke=\"" << colour
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << sx(p.x) << "\" y=\"" << sy(p.y) << "\" font-size=\"13\">" << name
       << "</text>\n";
  }
  os << "<circle class=\"delta1\" cx=\"" << sx(dl.x) << "\" cy=\"" << sy(dl.y)
     << "\" r=\"4\" fill=\"#e80\"/>\n";
  os << "<text x=\"" << sx(dl.x) << "\" y=\"" << sy(dl.y) << "\" font-size=\"13\">rho(delta1)</text>\n";
  os << "<!-- |u|^2 = " << to_string(setup.u.squared_length) << ", k1 = " << to_string(d.k1)
     << " -->\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace zlift
