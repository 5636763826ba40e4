#include <sstream>

#include "mcmd/io.hpp"

namespace mcmd::io {

namespace {

constexpr int kDigits = 3;

std::string num(const Rational& v) { return format_decimal(v, kDigits); }

}  // namespace

std::string render_svg(const Instance& instance, const std::optional<Assignment>& assignment,
                       const SvgOptions& options) {
  std::vector<Rational> aggregate(instance.size());
  if (assignment) {
    auto report = options.relaxed ? verify_uproper(instance, *assignment, options.mode)
                                  : verify_proper(instance, *assignment, options.mode);
    if (!report.ok) throw Error(ErrorCode::kVerificationFailed, report.summary());
    for (const auto& d : instance.disks())
      if (assignment->selected(d.id)) aggregate[d.id - 1] = aggregate_radius(instance, *assignment, d.id);
  }

  // Bounding box over every circle drawn, padded by a quarter unit.
  Rational min_x, max_x, min_y, max_y;
  bool first = true;
  for (const auto& d : instance.disks()) {
    Rational r = std::max(d.radius, aggregate[d.id - 1]);
    Rational lo_x = d.centre.x - r, hi_x = d.centre.x + r, lo_y = d.centre.y - r, hi_y = d.centre.y + r;
    if (first || lo_x < min_x) min_x = lo_x;
    if (first || hi_x > max_x) max_x = hi_x;
    if (first || lo_y < min_y) min_y = lo_y;
    if (first || hi_y > max_y) max_y = hi_y;
    first = false;
  }
  const Rational pad(1, 4);
  Rational width = 0, height = 0;
  if (!instance.empty()) {
    min_x -= pad;
    max_y += pad;
    width = (max_x + pad - min_x) * options.scale;
    height = (max_y - (min_y - pad)) * options.scale;
  }
  auto sx = [&](const Rational& x) { return num((x - min_x) * options.scale); };
  auto sy = [&](const Rational& y) { return num((max_y - y) * options.scale); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height)
      << "\">\n";
  svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& d : instance.disks())
    svg << "<circle class=\"disk\" cx=\"" << sx(d.centre.x) << "\" cy=\"" << sy(d.centre.y) << "\" r=\""
        << num(d.radius * options.scale) << "\"/>\n";
  if (assignment) {
    for (const auto& d : instance.disks()) {
      if (!assignment->selected(d.id) || aggregate[d.id - 1] == d.radius) continue;
      svg << "<circle class=\"aggregate\" stroke=\"gray\" stroke-dasharray=\"4 3\" cx=\"" << sx(d.centre.x)
          << "\" cy=\"" << sy(d.centre.y) << "\" r=\"" << num(aggregate[d.id - 1] * options.scale)
          << "\"/>\n";
    }
    for (const auto& d : instance.disks()) {
      DiskId t = assignment->target(d.id);
      if (t == d.id) continue;
      const Point& c = instance.centre(t);
      svg << "<line class=\"merge\" stroke=\"red\" x1=\"" << sx(d.centre.x) << "\" y1=\"" << sy(d.centre.y)
          << "\" x2=\"" << sx(c.x) << "\" y2=\"" << sy(c.y) << "\"/>\n";
    }
  }
  svg << "</g>\n";
  if (options.labels && !instance.empty()) {
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (const auto& d : instance.disks())
      svg << "<text x=\"" << sx(d.centre.x) << "\" y=\"" << sy(d.centre.y) << "\">d" << d.id << "</text>\n";
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mcmd::io
