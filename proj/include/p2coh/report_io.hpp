#pragma once

#include <json.hpp>

#include "p2coh/cohomology.hpp"
#include "p2coh/correspondence.hpp"
#include "p2coh/exceptional.hpp"
#include "p2coh/kronecker.hpp"

namespace p2coh {

using Json = nlohmann::ordered_json;

// Integers go out as JSON numbers when they fit in 64 bits, else as strings.
Json integerJson(const Integer& x);
Integer integerFromJson(const Json& j);

Json toJson(const ChernCharacter& v);
Json toJson(const ExceptionalSlope& e);
Json toJson(const KroneckerShape& s);
Json toJson(const CohomologyReport& r);
Json toJson(const ResolutionData& rd, const CorrespondingExceptionals& ce,
            const std::optional<OrthogonalPair>& op);

ChernCharacter characterFromJson(const Json& j);

// Parses and re-validates; throws ParseError on bad structure, std::logic_error
// if the values break the report invariants.
CohomologyReport reportFromJson(const Json& j);

}  // namespace p2coh
