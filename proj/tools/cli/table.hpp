#pragma once

#include <string>
#include <vector>

namespace theta::cli {

/// Flat projection of a result, rendered as CSV or markdown.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  [[nodiscard]] std::string to_csv() const;
  [[nodiscard]] std::string to_markdown() const;
};

}  // namespace theta::cli
