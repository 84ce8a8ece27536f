#include "proxyrep/render.hpp"

#include <sstream>

namespace proxyrep {

namespace {

// Exact pixel value with two decimals, rounding half away from zero.
std::string format_px(const Rat& px) {
  BigInt scaled = numerator(px) * 100 / denominator(px);
  const BigInt rem = numerator(px) * 100 % denominator(px);
  if (2 * boost::multiprecision::abs(rem) >= denominator(px)) scaled += px < 0 ? -1 : 1;
  const bool negative = scaled < 0;
  const BigInt mag = boost::multiprecision::abs(scaled);
  std::ostringstream out;
  if (negative) out << '-';
  out << mag / 100 << '.';
  const BigInt frac = mag % 100;
  out << (frac < 10 ? "0" : "") << frac;
  return out.str();
}

// Affine map of the coordinate axis [-1/2, 3/2] onto [0, 1200].
Rat to_px(const Rat& x) { return (x + Rat(1, 2)) * 600; }

void dashed_line(std::ostringstream& svg, const Rat& x, int width, const char* color,
                 const char* cls) {
  const std::string px = format_px(to_px(x));
  svg << "  <line class=\"" << cls << "\" x1=\"" << px << "\" y1=\"30\" x2=\"" << px
      << "\" y2=\"170\" stroke=\"" << color << "\" stroke-width=\"" << width
      << "\" stroke-dasharray=\"" << (width > 1 ? "8 5" : "4 4") << "\"/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const Arrangement* arr, bool bisectors) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1200\" "
         "height=\"200\" viewBox=\"0 0 1200 200\">\n";
  svg << "  <line class=\"axis\" x1=\"0\" y1=\"100\" x2=\"1200\" y2=\"100\" "
         "stroke=\"black\" stroke-width=\"1\"/>\n";
  if (bisectors) {
    for (const Rat& b : candidate_bisectors(inst)) dashed_line(svg, b, 1, "gray", "candidate-bisector");
    if (arr) {
      for (const Rat& b : arr->adjacent_bisectors()) dashed_line(svg, b, 3, "black", "proxy-bisector");
    }
  }
  for (const Rat& c : inst.candidates()) {
    svg << "  <rect class=\"candidate\" x=\"" << format_px(to_px(c) - 6)
        << "\" y=\"94\" width=\"12\" height=\"12\" fill=\"white\" stroke=\"black\" "
           "stroke-width=\"2\"/>\n";
  }
  if (arr) {
    for (const Rat& p : arr->proxies()) {
      svg << "  <circle class=\"proxy\" cx=\"" << format_px(to_px(p))
          << "\" cy=\"100\" r=\"6\" fill=\"crimson\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace proxyrep
