// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ktmod/persistence.hpp"

namespace ktmod {

// One line per bar: the [birth, death) interval label and a stage strip
// where '#' marks stages the class is alive, 'x' its death stage, '~' an
// arrow off the right edge for bars that never die.
std::string ascii_barcode(const Barcode& bc);

// Self-contained SVG document, one strip per bar over a stage axis.
std::string svg_barcode(const Barcode& bc);

}  // namespace ktmod
