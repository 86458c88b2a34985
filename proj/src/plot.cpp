#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "irrcert/cli.hpp"
#include "irrcert/ratio_engine.hpp"
#include "irrcert/root_location.hpp"

namespace irrcert {

namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

struct Circle {
  double cx, r;
  std::string stroke, label;
};

// Maps the square [x0, x0 + span] x [y0, y0 + span] onto the canvas.
struct View {
  double x0, y0, span;
  double sx(double x) const { return kMargin + (x - x0) / span * (kSize - 2 * kMargin); }
  double sy(double y) const { return kSize - kMargin - (y - y0) / span * (kSize - 2 * kMargin); }
  double len(double d) const { return d / span * (kSize - 2 * kMargin); }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_apollonius_svg(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k,
                                  DivisorClass cls, const FactorConfig& cfg) {
  if (a == b) throw std::invalid_argument("a and b must differ");
  if (f.degree() < 1) throw std::invalid_argument("polynomial must have degree >= 1");
  const IntPoly df = derivative(f);
  const BigInt fa = eval_at(f, a), fb = eval_at(f, b);
  if (fa == 0 || abs(fa) >= abs(fb)) throw std::invalid_argument("q_k needs 0 < |f(a)| < |f(b)|");
  const DivisorSet da = divisor_set(fa, eval_at(df, a), cfg);
  const DivisorSet db = divisor_set(fb, eval_at(df, b), cfg);
  const Rational q = compute_qk(da, db, k, cls).q;

  const double ad = a.get_d(), bd = b.get_d();
  std::vector<Circle> circles;
  if (q > 1) {
    const ApolloniusCircle outer = apollonius_circle(a, b, q);
    circles.push_back({outer.center.get_d(), outer.radius().get_d(), "#1f77b4", "Ap(a,b,q)"});
    const Rational s = sqrt_lower_bound(q, 4);
    if (s > 1) {
      const ApolloniusCircle inner = apollonius_circle(a, b, s);
      circles.push_back({inner.center.get_d(), inner.radius().get_d(), "#d62728", "Ap(a,b,sqrt q lower)"});
    }
  }
  const double mid = (ad + bd) / 2;
  const NumericRoots nr = numeric_roots(f);

  double lo_x = std::min(ad, bd), hi_x = std::max(ad, bd), lo_y = -1, hi_y = 1;
  for (const auto& c : circles) {
    lo_x = std::min(lo_x, c.cx - c.r);
    hi_x = std::max(hi_x, c.cx + c.r);
    lo_y = std::min(lo_y, -c.r);
    hi_y = std::max(hi_y, c.r);
  }
  for (const auto& z : nr.roots) {
    lo_x = std::min(lo_x, z.real());
    hi_x = std::max(hi_x, z.real());
    lo_y = std::min(lo_y, z.imag());
    hi_y = std::max(hi_y, z.imag());
  }
  double span = std::max(hi_x - lo_x, hi_y - lo_y) * 1.1;
  if (!(span > 0)) span = 1;
  const View v{(lo_x + hi_x) / 2 - span / 2, (lo_y + hi_y) / 2 - span / 2, span};

  std::string svg;
  auto line = [&](const std::string& s) { svg += s + "\n"; };
  line("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
  line("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">");
  line("<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>");
  line("<title>" + escape("Apollonius circles for f = " + print_canonical(f) + ", a = " + to_string(a) +
                          ", b = " + to_string(b) + ", k = " + std::to_string(k)) + "</title>");
  // axes
  line("<line x1=\"" + fmt(kMargin) + "\" y1=\"" + fmt(v.sy(0)) + "\" x2=\"" + fmt(kSize - kMargin) + "\" y2=\"" +
       fmt(v.sy(0)) + "\" stroke=\"#888888\" stroke-width=\"1\"/>");
  line("<line x1=\"" + fmt(v.sx(0)) + "\" y1=\"" + fmt(kMargin) + "\" x2=\"" + fmt(v.sx(0)) + "\" y2=\"" +
       fmt(kSize - kMargin) + "\" stroke=\"#888888\" stroke-width=\"1\"/>");
  if (circles.empty()) {
    line("<line class=\"bisector\" x1=\"" + fmt(v.sx(mid)) + "\" y1=\"" + fmt(kMargin) + "\" x2=\"" + fmt(v.sx(mid)) +
         "\" y2=\"" + fmt(kSize - kMargin) + "\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>");
  }
  for (const auto& c : circles) {
    line("<circle class=\"apollonius\" cx=\"" + fmt(v.sx(c.cx)) + "\" cy=\"" + fmt(v.sy(0)) + "\" r=\"" +
         fmt(v.len(c.r)) + "\" fill=\"none\" stroke=\"" + c.stroke + "\" stroke-width=\"1.5\"><title>" +
         escape(c.label) + "</title></circle>");
  }
  const std::pair<double, const char*> pts[] = {{ad, "a"}, {bd, "b"}};
  for (const auto& [x, name] : pts) {
    line("<circle class=\"point\" cx=\"" + fmt(v.sx(x)) + "\" cy=\"" + fmt(v.sy(0)) +
         "\" r=\"4\" fill=\"black\"/>");
    line("<text x=\"" + fmt(v.sx(x) + 6) + "\" y=\"" + fmt(v.sy(0) - 6) +
         "\" font-family=\"monospace\" font-size=\"12\">" + name + "</text>");
  }
  for (const auto& z : nr.roots) {
    const double x = v.sx(z.real()), y = v.sy(z.imag());
    line("<path class=\"root\" d=\"M " + fmt(x - 4) + " " + fmt(y - 4) + " L " + fmt(x + 4) + " " + fmt(y + 4) +
         " M " + fmt(x - 4) + " " + fmt(y + 4) + " L " + fmt(x + 4) + " " + fmt(y - 4) +
         "\" stroke=\"#9467bd\" stroke-width=\"1.5\"/>");
  }
  line("<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"12\">" +
       escape("q_" + std::to_string(k) + " = " + to_string(q) + " (" + std::string(to_string(cls)) + ")") +
       "</text>");
  line("<text x=\"10\" y=\"590\" font-family=\"monospace\" font-size=\"11\">"
       "illustrative only; certificates are exact</text>");
  line("</svg>");
  return svg;
}

}  // namespace irrcert
