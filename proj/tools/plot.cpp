#include "plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "k3walls/errors.hpp"

namespace k3walls::cli {

namespace {

constexpr double kMargin = 40.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

class Frame {
 public:
  explicit Frame(const PlotSpec& spec)
      : beta_min_(spec.region.beta_min.get_d()),
        beta_max_(spec.region.beta_max.get_d()),
        alpha_max_(std::sqrt(spec.region.t_max.get_d())),
        plot_w_(spec.width - 2 * kMargin),
        plot_h_(spec.height - 2 * kMargin) {
    if (beta_max_ == beta_min_) {
      beta_min_ -= 1.0;
      beta_max_ += 1.0;
    }
  }

  double x(double beta) const {
    return kMargin + (beta - beta_min_) / (beta_max_ - beta_min_) * plot_w_;
  }
  double y(double alpha) const { return kMargin + plot_h_ - alpha / alpha_max_ * plot_h_; }
  double sx() const { return plot_w_ / (beta_max_ - beta_min_); }
  double sy() const { return plot_h_ / alpha_max_; }
  double left() const { return kMargin; }
  double top() const { return kMargin; }
  double w() const { return plot_w_; }
  double h() const { return plot_h_; }
  double beta_min() const { return beta_min_; }
  double beta_max() const { return beta_max_; }
  double alpha_max() const { return alpha_max_; }

 private:
  double beta_min_;
  double beta_max_;
  double alpha_max_;
  double plot_w_;
  double plot_h_;
};

}  // namespace

void PlotSpec::validate() const {
  region.validate();
  if (width <= 2 * kMargin || height <= 2 * kMargin) {
    throw Error(ErrorCode::kInvalidArgument, "plot size too small");
  }
}

std::string render_svg(const PlotSpec& spec) {
  spec.validate();
  const Frame f(spec);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' '
      << spec.height << "\">\n"
      << "<defs><clipPath id=\"plot-area\"><rect x=\"" << fmt(f.left()) << "\" y=\""
      << fmt(f.top()) << "\" width=\"" << fmt(f.w()) << "\" height=\"" << fmt(f.h())
      << "\"/></clipPath></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes: beta along alpha = 0, and the alpha axis at beta = 0 when visible.
  svg << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fmt(f.left()) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\""
      << fmt(f.left() + f.w()) << "\" y2=\"" << fmt(f.y(0)) << "\"/>\n";
  const double axis_beta = (f.beta_min() <= 0 && f.beta_max() >= 0) ? 0.0 : f.beta_min();
  svg << "<line x1=\"" << fmt(f.x(axis_beta)) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\""
      << fmt(f.x(axis_beta)) << "\" y2=\"" << fmt(f.top()) << "\"/>\n"
      << "</g>\n"
      << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<text x=\"" << fmt(f.left() + f.w() + 8) << "\" y=\"" << fmt(f.y(0) + 4)
      << "\">&#946;</text>\n"
      << "<text x=\"" << fmt(f.x(axis_beta) - 4) << "\" y=\"" << fmt(f.top() - 8)
      << "\">&#945;</text>\n"
      << "<text x=\"" << fmt(f.left()) << "\" y=\"" << fmt(f.y(0) + 16)
      << "\" text-anchor=\"middle\">" << fmt(f.beta_min()) << "</text>\n"
      << "<text x=\"" << fmt(f.left() + f.w()) << "\" y=\"" << fmt(f.y(0) + 16)
      << "\" text-anchor=\"middle\">" << fmt(f.beta_max()) << "</text>\n"
      << "<text x=\"" << fmt(f.x(axis_beta) - 6) << "\" y=\"" << fmt(f.top() + 4)
      << "\" text-anchor=\"end\">" << fmt(f.alpha_max()) << "</text>\n"
      << "</g>\n";

  svg << "<g id=\"walls\" clip-path=\"url(#plot-area)\" fill=\"none\" stroke=\"#1f4e9c\" "
         "stroke-width=\"1.5\">\n";
  for (const Wall& wall : spec.walls) {
    if (const auto* arc = std::get_if<Semicircle>(&wall.shape)) {
      const double c = arc->center.get_d();
      const double rho = std::sqrt(arc->radius_sq.get_d());
      svg << "<path d=\"M " << fmt(f.x(c - rho)) << ' ' << fmt(f.y(0)) << " A "
          << fmt(rho * f.sx()) << ' ' << fmt(rho * f.sy()) << " 0 0 1 "
          << fmt(f.x(c + rho)) << ' ' << fmt(f.y(0)) << "\"/>\n";
    } else {
      const double b = std::get<VerticalLine>(wall.shape).beta.get_d();
      svg << "<line x1=\"" << fmt(f.x(b)) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\""
          << fmt(f.x(b)) << "\" y2=\"" << fmt(f.top()) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  svg << "<g id=\"marks\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const PlotMark& mark : spec.marks) {
    const double mx = f.x(mark.beta.get_d());
    const double my = f.y(std::sqrt(mark.t.get_d()));
    svg << "<circle cx=\"" << fmt(mx) << "\" cy=\"" << fmt(my) << "\" r=\"3\" fill=\"black\"/>\n";
    if (!mark.label.empty()) {
      svg << "<text x=\"" << fmt(mx + 6) << "\" y=\"" << fmt(my - 6) << "\">"
          << escape(mark.label) << "</text>\n";
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace k3walls::cli
