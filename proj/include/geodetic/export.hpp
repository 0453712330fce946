#pragma once

#include <string>

#include "json.hpp"

#include "geodetic/census.hpp"
#include "geodetic/cut_analysis.hpp"
#include "geodetic/finite_geometry.hpp"
#include "geodetic/flag_graph.hpp"
#include "geodetic/geodesy.hpp"

namespace geodetic {

using json = nlohmann::ordered_json;

json plane_to_json(const IncidenceStructure& s);
json validation_to_json(const PlaneValidation& v);
json labeled_graph_to_json(const LabeledGraph& lg);
json verdict_to_json(const GeodeticVerdict& v);
json claim_report_to_json(const ClaimReport& r);
json cut_profile_to_json(const CutProfile& p);
json lemma_report_to_json(const LemmaCheckReport& r);
json census_record_to_json(const CensusRecord& rec);
json theorem1_survey_to_json(const Theorem1Survey& s);
json diameter_girth_survey_to_json(const DiameterGirthSurvey& s);

std::string to_dot(const LabeledGraph& lg);

}  // namespace geodetic
