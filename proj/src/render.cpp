// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/render.hpp"

#include <algorithm>

namespace ktmod {
namespace {

std::int64_t horizon_of(const Barcode& bc) {
  std::int64_t horizon = 1;
  for (const Bar& b : bc.bars()) {
    horizon = std::max(horizon, b.birth + 1);
    if (b.persistence != kInfinity) {
      horizon = std::max(horizon, death_stage(b));
    }
  }
  return horizon;
}

std::string interval_label(const Bar& b) {
  if (b.persistence == kInfinity) {
    return "[" + std::to_string(b.birth) + ", inf)";
  }
  return "[" + std::to_string(b.birth) + ", " +
         std::to_string(death_stage(b)) + ")";
}

}  // namespace

std::string ascii_barcode(const Barcode& bc) {
  if (bc.empty()) return "(empty barcode)\n";
  const std::int64_t horizon = horizon_of(bc);
  std::size_t label_width = 0;
  for (const Bar& b : bc.bars()) {
    label_width = std::max(label_width, interval_label(b).size());
  }
  std::string out;
  for (const Bar& b : bc.bars()) {
    std::string line = interval_label(b);
    line.append(label_width - line.size() + 2, ' ');
    for (std::int64_t stage = 0; stage <= horizon; ++stage) {
      const bool alive =
          b.birth <= stage &&
          (b.persistence == kInfinity || stage <= b.birth + b.persistence);
      if (alive) {
        line += '#';
      } else if (b.persistence != kInfinity && stage == death_stage(b)) {
        line += 'x';
      } else {
        line += '.';
      }
    }
    if (b.persistence == kInfinity) line += '~';
    out += line;
    out += '\n';
  }
  return out;
}

std::string svg_barcode(const Barcode& bc) {
  const std::int64_t horizon = horizon_of(bc);
  const int bar_height = 12;
  const int bar_gap = 6;
  const int margin = 24;
  const int stage_width = 28;
  const int rows = static_cast<int>(bc.size());
  const int width = margin * 2 + static_cast<int>(horizon + 1) * stage_width;
  const int height = margin * 2 + std::max(rows, 1) * (bar_height + bar_gap);
  auto x_of = [&](std::int64_t stage) {
    return margin + static_cast<int>(stage) * stage_width;
  };
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(width) + "\" height=\"" + std::to_string(height) +
      "\" viewBox=\"0 0 " + std::to_string(width) + " " +
      std::to_string(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const int axis_y = height - margin / 2;
  svg += "  <line x1=\"" + std::to_string(x_of(0)) + "\" y1=\"" +
         std::to_string(axis_y) + "\" x2=\"" + std::to_string(x_of(horizon)) +
         "\" y2=\"" + std::to_string(axis_y) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (std::int64_t stage = 0; stage <= horizon; ++stage) {
    svg += "  <text x=\"" + std::to_string(x_of(stage)) + "\" y=\"" +
           std::to_string(axis_y - 4) +
           "\" font-size=\"10\" font-family=\"monospace\" text-anchor=\"middle\">" +
           std::to_string(stage) + "</text>\n";
  }
  int row = 0;
  for (const Bar& b : bc.bars()) {
    const int y = margin + row * (bar_height + bar_gap);
    const bool infinite = b.persistence == kInfinity;
    const std::int64_t end = infinite ? horizon : b.birth + b.persistence;
    const int x0 = x_of(b.birth);
    const int x1 = x_of(end) + stage_width / 2;
    svg += "  <rect x=\"" + std::to_string(x0) + "\" y=\"" +
           std::to_string(y) + "\" width=\"" + std::to_string(x1 - x0) +
           "\" height=\"" + std::to_string(bar_height) + "\" fill=\"" +
           (infinite ? "#1f77b4" : "#2ca02c") + "\"/>\n";
    if (infinite) {
      const int ay = y + bar_height / 2;
      svg += "  <path d=\"M " + std::to_string(x1) + " " +
             std::to_string(y) + " L " + std::to_string(x1 + 10) + " " +
             std::to_string(ay) + " L " + std::to_string(x1) + " " +
             std::to_string(y + bar_height) + " Z\" fill=\"#1f77b4\"/>\n";
    }
    ++row;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ktmod
