#include "octet/svg.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "octet/list_code.hpp"

namespace octet {

namespace {

struct Box {
  double x0, y0, x1, y1;
};

// marching-squares polyline extraction of {f = 0} on a grid (drawing only)
void draw_implicit(std::ostringstream& os, const std::function<double(double, double)>& f,
                   const Box& b, const char* stroke, double width) {
  const int N = 160;
  double dx = (b.x1 - b.x0) / N, dy = (b.y1 - b.y0) / N;
  std::vector<std::vector<double>> v(N + 1, std::vector<double>(N + 1));
  for (int i = 0; i <= N; i++)
    for (int j = 0; j <= N; j++) v[i][j] = f(b.x0 + i * dx, b.y0 + j * dy);
  os << "<g stroke=\"" << stroke << "\" stroke-width=\"" << width
     << "\" fill=\"none\">\n";
  auto interp = [](double a, double bb) { return a / (a - bb); };
  for (int i = 0; i < N; i++)
    for (int j = 0; j < N; j++) {
      double x = b.x0 + i * dx, y = b.y0 + j * dy;
      double c00 = v[i][j], c10 = v[i + 1][j], c01 = v[i][j + 1], c11 = v[i + 1][j + 1];
      std::vector<std::pair<double, double>> pts;
      if ((c00 < 0) != (c10 < 0)) pts.push_back({x + dx * interp(c00, c10), y});
      if ((c01 < 0) != (c11 < 0)) pts.push_back({x + dx * interp(c01, c11), y + dy});
      if ((c00 < 0) != (c01 < 0)) pts.push_back({x, y + dy * interp(c00, c01)});
      if ((c10 < 0) != (c11 < 0)) pts.push_back({x + dx, y + dy * interp(c10, c11)});
      if (pts.size() >= 2)
        os << "<line x1=\"" << pts[0].first << "\" y1=\"" << -pts[0].second << "\" x2=\""
           << pts[1].first << "\" y2=\"" << -pts[1].second << "\"/>\n";
    }
  os << "</g>\n";
}

}  // namespace

std::string render_svg(const Configuration& c, bool draw_conics, int pencil_samples) {
  double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
  for (int i = 1; i <= 8; i++) {
    double x = c.at(i).ax().get_d(), y = c.at(i).ay().get_d();
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  double mx = (maxx - minx) * 0.6 + 0.5, my = (maxy - miny) * 0.6 + 0.5;
  Box b{minx - mx, miny - my, maxx + mx, maxy + my};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << b.x0 << " " << -b.y1 << " "
     << (b.x1 - b.x0) << " " << (b.y1 - b.y0) << "\">\n";
  double sw = (b.x1 - b.x0) / 400;
  if (draw_conics) {
    const auto& i8 = TableIndex8::get();
    ConicCache cache(c);
    for (int s = 0; s < 56; s++) {
      const Conic& k = cache.of_subset(s);
      double q[6];
      for (int i = 0; i < 6; i++) q[i] = k.c[i].get_d();
      draw_implicit(
          os,
          [&](double x, double y) {
            return q[0] * x * x + q[1] * x * y + q[2] * y * y + q[3] * x + q[4] * y + q[5];
          },
          b, "#bbccee", sw * 0.5);
    }
  }
  if (pencil_samples > 0) {
    try {
      Pencil p = pencil_through(c.pts);
      for (int s = 0; s < pencil_samples; s++) {
        double t = -2.0 + 4.0 * s / std::max(1, pencil_samples - 1);
        double f0[10], f1[10];
        for (int i = 0; i < 10; i++) {
          f0[i] = p.f0.c[i].get_d();
          f1[i] = p.f1.c[i].get_d();
        }
        draw_implicit(
            os,
            [&](double x, double y) {
              double acc = 0;
              for (int m = 0; m < 10; m++) {
                double mono = std::pow(x, CubicForm::kMonomials[m][0]) *
                              std::pow(y, CubicForm::kMonomials[m][1]);
                acc += (f0[m] + t * f1[m]) * mono;
              }
              return acc;
            },
            b, "#cc8855", sw * 0.7);
      }
      double nx = p.ninth.ax().get_d(), ny = p.ninth.ay().get_d();
      os << "<circle cx=\"" << nx << "\" cy=\"" << -ny << "\" r=\"" << sw * 3
         << "\" fill=\"#cc2222\"/>\n";
    } catch (const Error&) {
    }
  }
  for (int i = 1; i <= 8; i++) {
    double x = c.at(i).ax().get_d(), y = c.at(i).ay().get_d();
    os << "<circle cx=\"" << x << "\" cy=\"" << -y << "\" r=\"" << sw * 3
       << "\" fill=\"#222266\"/>\n";
    os << "<text x=\"" << x + sw * 5 << "\" y=\"" << -y << "\" font-size=\"" << sw * 12
       << "\">" << i << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace octet
