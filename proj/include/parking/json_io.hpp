#pragma once

#include <json.hpp>

#include "parking/characters.hpp"
#include "parking/hsop.hpp"
#include "parking/locus.hpp"
#include "parking/parkfn.hpp"
#include "parking/sieve.hpp"

namespace parking {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json element_to_json(const ReflectionGroup& g, ElementId w);
Json group_to_json(const ReflectionGroup& g);
Json flat_to_json(const ReflectionGroup& g, FlatId x);
Json chains_to_json(const ReflectionGroup& g, int k, const std::vector<MultiChain>& chains);
Json park_to_json(const ParkSpace& park);

// {group, k, seed, vars, degree, coords: [[{exponent, re, im}]]}
Json theta_to_json(const PolynomialMap& m, const GroupSpec& spec, int k, std::uint64_t seed);
PolynomialMap theta_from_json(const Json& j);
GroupSpec theta_group(const Json& j);
int theta_k(const Json& j);

Json locus_to_json(const ReflectionGroup& g, const LocusSolution& sol);
LocusSolution locus_from_json(const Json& j);

Json character_report_to_json(const ReflectionGroup& g, const CharacterReport& r);
Json csp_report_to_json(const CspReport& r);
Json kreweras_report_to_json(const ReflectionGroup& g, const KrewerasReport& r);
Json bijection_to_json(const GSet& source, const EquivariantBijection& b);
Json transport_to_json(const TransportResult& r);
Json descriptor_to_json(const ReflectionGroup& g, const StabilizerDescriptor& d);

}  // namespace parking
