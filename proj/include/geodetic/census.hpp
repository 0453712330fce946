#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geodetic/cut_analysis.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

// Single-pass sources over common corpora.
class VectorSource : public GraphSource {
 public:
  explicit VectorSource(std::vector<SourcedGraph> items) : items_(std::move(items)) {}
  std::optional<SourcedGraph> next() override;

 private:
  std::vector<SourcedGraph> items_;
  size_t pos_ = 0;
};

// graph6 file, one graph per line; malformed lines are counted and skipped.
class Graph6FileSource : public GraphSource {
 public:
  explicit Graph6FileSource(const std::string& path);
  std::optional<SourcedGraph> next() override;
  int64_t skipped() const override { return skipped_; }

 private:
  std::string path_;
  std::vector<std::string> lines_;
  size_t pos_ = 0;
  int64_t lineno_ = 0;
  int64_t skipped_ = 0;
};

struct CensusRecord {
  std::string canonical;  // canonical graph6
  int n = 0;
  int64_t m = 0;
  int min_degree = 0;
  int connectivity = 0;
  int diameter = 0;
  int radius = 0;
  int girth = kInf;
  bool geodetic = false;
  bool self_centered = false;
  std::string provenance;
};

struct CubicCensus {
  std::vector<CensusRecord> records;  // geodetic 2-connected cubic graphs only
  int64_t scanned = 0;
  int64_t skipped_ineligible = 0;  // non-cubic or disconnected entries
};

// Records exactly the geodetic blocks among the connected cubic graphs of
// the stream, in input order.
CubicCensus cubic_geodetic_census(GraphSource& source, int jobs = 1);

struct DiameterGirthSurvey {
  std::map<std::pair<int, int>, int64_t> histogram;  // (diameter, girth) -> count
  int max_diameter = 0;
  std::vector<std::string> max_diameter_exemplars;  // graph6
  int64_t scanned = 0;
  int64_t qualifying = 0;  // geodetic blocks with min degree >= threshold
};

DiameterGirthSurvey diameter_girth_survey(GraphSource& source, int min_degree = 3, int jobs = 1);

}  // namespace geodetic
