#include "ribbonforge/arp_format.hpp"

#include <sstream>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

Curve parse_curve(std::string_view line, std::size_t line_no) {
  Curve curve;
  std::istringstream in{std::string(line)};
  std::string token;
  bool isolated = false;
  while (in >> token) {
    if (token == "()") {
      isolated = true;
      continue;
    }
    Arrow arrow;
    std::string_view label = token;
    if (label.back() == '\'') {
      arrow.direction = Direction::Against;
      label.remove_suffix(1);
    }
    if (!is_valid_label(label)) throw ParseError("bad arrow token '" + token + "'", line_no);
    arrow.label = std::string(label);
    curve.arrows.push_back(std::move(arrow));
  }
  if (isolated && !curve.arrows.empty())
    throw ParseError("'()' must stand alone on its line", line_no);
  return curve;
}

}  // namespace

ArrowPresentation parse_arp(std::string_view text) {
  std::vector<Curve> raw;
  std::size_t line_no = 0;
  for (auto line : lines_of(text)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    raw.push_back(parse_curve(line, line_no));
  }
  return validate(std::move(raw));
}

std::vector<ArrowPresentation> parse_arp_records(std::string_view text) {
  std::vector<ArrowPresentation> out;
  std::vector<Curve> current;
  bool open = false;
  std::size_t line_no = 0;
  for (auto line : lines_of(text)) {
    ++line_no;
    line = trim(line);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      if (open) out.push_back(validate(std::move(current)));
      current.clear();
      open = false;
      continue;
    }
    current.push_back(parse_curve(line, line_no));
    open = true;
  }
  if (open) out.push_back(validate(std::move(current)));
  return out;
}

std::string to_arp(const ArrowPresentation& g) {
  std::string out;
  for (const auto& curve : g.curves()) {
    if (curve.arrows.empty()) {
      out += "()\n";
      continue;
    }
    for (std::size_t i = 0; i < curve.arrows.size(); ++i) {
      if (i > 0) out += ' ';
      out += curve.arrows[i].label;
      if (curve.arrows[i].direction == Direction::Against) out += '\'';
    }
    out += '\n';
  }
  return out;
}

}  // namespace ribbonforge
