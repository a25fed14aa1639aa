#ifndef SDSEQ_JSON_IO_HPP
#define SDSEQ_JSON_IO_HPP

#include <json.hpp>

#include "sdseq/classifier.hpp"
#include "sdseq/divisibility.hpp"
#include "sdseq/periodicity.hpp"
#include "sdseq/recurrence.hpp"
#include "sdseq/search.hpp"
#include "sdseq/selftest.hpp"

// JSON wire format.  Arbitrary-precision integers are decimal strings so they
// survive any JSON consumer; structural integers (indices, bounds, counts)
// are native numbers.  Field names match the type definitions.  Every
// serializer here round-trips through its parser.
namespace sdseq::io {

using json = nlohmann::ordered_json;

json to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const std::vector<Int>& values);
std::vector<Int> values_from_json(const json& j);

json to_json(const Params& p);
Params params_from_json(const json& j);

json to_json(const LucasParams& lp);
LucasParams lucas_params_from_json(const json& j);

json to_json(const SequencePrefix& prefix);
SequencePrefix prefix_from_json(const json& j);

json to_json(const Recovery& rec);
Recovery recovery_from_json(const json& j);

json to_json(const DivisibilityReport& rep);
DivisibilityReport divisibility_report_from_json(const json& j);

json to_json(const HSCriterionReport& rep);
HSCriterionReport hs_report_from_json(const json& j);

json to_json(const Classification& c);
Classification classification_from_json(const json& j);

json to_json(const PeriodInfo& info);
PeriodInfo period_info_from_json(const json& j);

json to_json(const SearchBox& box);
SearchBox search_box_from_json(const json& j);

// include_timing appends stats.elapsed_ms; canonical output omits it so two
// sweeps of the same box serialize byte-for-byte identically.
json to_json(const SearchReport& report, bool include_timing = false);
SearchReport search_report_from_json(const json& j);

json to_json(const std::vector<SelfTestCheck>& checks);

// Survivor table: columns P,Q,R,families,period.  families joins names with
// '|'; period is the detected period of the length-depth prefix, empty when
// none is detected within the window.
std::string survivors_csv(const SearchReport& report);

}  // namespace sdseq::io

#endif
