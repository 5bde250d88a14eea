#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "effdual/signature.hpp"

namespace effdual {

// A validated signature plus optional per-element display labels.
// Labels affect human-format output only.
struct Config {
  FamilySignature signature;
  // One list per signature entry, in entry order; an empty list means
  // the index has no labels.
  std::vector<std::vector<std::string>> labels;

  bool has_labels(std::size_t pos) const {
    return pos < labels.size() && !labels[pos].empty();
  }
};

// Document shape: {"indices": [{"name": ..., "size": ..., "labels": [...]?}, ...]}
Config parse_config(const std::string& text);
Config load_config(const std::filesystem::path& path);

}  // namespace effdual
