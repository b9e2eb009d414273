#include "ctcsim/corpus.hpp"

#include <array>
#include <charconv>
#include <string>

#include "ctcsim/dsl.hpp"

namespace ctcsim::corpus {
namespace {

#include "corpus_sources.inc"

// A trailing "# @k" comment ties a DSL line to line k of the listing.
std::map<int, int> scan_listing_markers(std::string_view source) {
  std::map<int, int> out;
  int line = 1;
  std::size_t start = 0;
  while (start <= source.size()) {
    const std::size_t end = std::min(source.find('\n', start), source.size());
    const std::string_view text = source.substr(start, end - start);
    const std::size_t hash = text.find("# @");
    if (hash != std::string_view::npos && hash > 0) {
      const auto digits = text.substr(hash + 3);
      int listing = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), listing);
      if (ec == std::errc{} && ptr != digits.data()) out.emplace(line, listing);
    }
    if (end == source.size()) break;
    start = end + 1;
    ++line;
  }
  return out;
}

const std::array<CorpusEntry, 3>& entries() {
  static const std::array<CorpusEntry, 3> kEntries = {
      CorpusEntry{"brun1", "Factoring algorithm as proposed by Brun", kBrun1Source,
                  scan_listing_markers(kBrun1Source)},
      CorpusEntry{"brun2", "Modified factoring algorithm", kBrun2Source,
                  scan_listing_markers(kBrun2Source)},
      CorpusEntry{"brun3", "Optimal factoring algorithm", kBrun3Source,
                  scan_listing_markers(kBrun3Source)},
  };
  return kEntries;
}

}  // namespace

const CorpusEntry& get(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.id == id) return e;
  }
  throw UnknownCorpusProgram(std::string(id));
}

std::vector<CorpusListing> list() {
  std::vector<CorpusListing> out;
  for (const auto& e : entries()) out.push_back({e.id, e.title});
  return out;
}

bool contains(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.id == id) return true;
  }
  return false;
}

Program program(std::string_view id) { return parse(get(id).source); }

}  // namespace ctcsim::corpus
