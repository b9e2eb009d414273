#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctcsim/ast.hpp"
#include "ctcsim/error.hpp"

namespace ctcsim::corpus {

struct CorpusEntry {
  std::string_view id;
  std::string_view title;
  std::string_view source;
  // DSL source line -> line number in the original algorithm listing.
  std::map<int, int> listing_lines;
};

struct CorpusListing {
  std::string_view id;
  std::string_view title;
};

/// Throws UnknownCorpusProgram.
const CorpusEntry& get(std::string_view id);

/// brun1, brun2, brun3 in that order.
std::vector<CorpusListing> list();

bool contains(std::string_view id);

/// Parsed program for a corpus id. Throws UnknownCorpusProgram.
Program program(std::string_view id);

}  // namespace ctcsim::corpus
