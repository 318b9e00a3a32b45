#pragma once

#include "tsk/diag.hpp"
#include "tsk/fan.hpp"
#include "tsk/monoid.hpp"
#include "tsk/resolution.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace tsk {

using json = nlohmann::json;

// Integers are emitted as JSON numbers while they fit in 2^53 - 1 and as
// decimal strings beyond that; both forms are accepted on input.
json int_to_json(const Int& x);
Int json_to_int(const json& j, const std::string& field);
json vec_to_json(const IVec& v);
IVec json_to_vec(const json& j, const std::string& field);
json vec_list_to_json(const std::vector<IVec>& vs);
std::vector<IVec> json_to_vec_list(const json& j, const std::string& field);
json group_to_json(const AbelianGroup& g);
AbelianGroup json_to_group(const json& j, const std::string& field);

// Input documents. Exactly one per file, kind-tagged, format_version 1,
// unknown fields rejected.
struct MonoidDoc {
    std::size_t rank = 0;
    std::vector<IVec> generators;
    BuildMode mode = BuildMode::saturate;
};

struct MorphismDoc {
    MonoidDoc monoid;
    std::vector<IVec> matrix; // rows of the map to a free monoid
};

struct ActionDoc {
    AbelianGroup group;
    std::vector<IVec> weights;
};

struct FanDoc {
    RawStackyFan raw;
    bool canonical_beta = false;
};

using Document = std::variant<MonoidDoc, MorphismDoc, ActionDoc, FanDoc>;

Document parse_document(const std::string& text);

// Deterministic plain-text rendering of a JSON report (keys in sorted order).
std::string render_text(const json& j);

// Report builders shared by the CLI and the tests.
json report_monoid_mfr(const MonoidBuild& b, const MonoidMorphism& mfr);
json report_monoid_qmfr(const std::optional<QmfrCertificate>& cert);
json report_monoid_quotient(const FaceQuotient& q, const std::vector<std::size_t>& face);
json report_inv_analyze(const CstReport& rep);
json report_inv_oracle(const InvariantMonoid& inv);
json report_fan_validate(const StackyFan& f);
json report_fan_presentation(const StackyFan& f, const QuotientPresentation& pres);
json report_fan_chart(const ChartData& ch);
json report_fan_datum(const ConeDatum& cd);

} // namespace tsk
