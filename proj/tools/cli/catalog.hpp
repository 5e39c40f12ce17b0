#pragma once

#include <string>
#include <vector>

namespace theta::cli {

/// One row of the status table of dual pairs whose correspondence has been
/// worked out completely. Static data, never computed.
struct CatalogEntry {
  std::string family;
  std::string condition;
  std::string source;
};

const std::vector<CatalogEntry>& catalog();

}  // namespace theta::cli
