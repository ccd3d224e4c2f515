// SPDX-License-Identifier: Apache-2.0
//
// Built-in Weierstrass data with known geometry, used as regression
// anchors. Parameterized entries are addressed by name, e.g.
// "enneper_k(3)", "voss(2,-2,2i)", "iso4(0.7)".

#pragma once

#include <string>
#include <vector>

#include "minsurf/projgeom.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

struct CatalogEntry {
  std::string name;
  WeierstrassData data;
  // Hyperplanes the Gauss map omits by construction; may be empty.
  HyperplaneSet omitted;
  std::string notes;
};

// Throws UnknownEntry for unrecognized names and ConfigError for
// out-of-range parameters.
CatalogEntry builtin(const std::string& name);

// Template names with a one-line description each.
std::vector<std::pair<std::string, std::string>> catalog_listing();

// Accepts "a", "bi", "a+bi", "a-bi" with decimal or exponent notation.
Complex parse_complex(const std::string& text);

}  // namespace minsurf
