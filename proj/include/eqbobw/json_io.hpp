#pragma once

#include "eqbobw/certify.hpp"
#include "eqbobw/model.hpp"
#include "eqbobw/reductions.hpp"
#include "eqbobw/two_agents.hpp"

#include <json.hpp>

#include <string>

namespace eqbobw {

using Json = nlohmann::json;

// Every *_from_json throws InputError on malformed input.

Json to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

Json to_json(const Allocation& allocation);
Allocation allocation_from_json(const Json& j);

Json to_json(const Lottery& lottery);
Lottery lottery_from_json(const Json& j);

Json to_json(const ValueProfile& profile);
Json to_json(const IntProfile& profile);

Json to_json(const Witness& witness);
Witness witness_from_json(const Json& j);

Json to_json(const BiasedTrace& trace);
Json to_json(const InstanceMetadata& metadata);

/// Reads and parses a JSON file; I/O and syntax failures become InputError.
Json read_json_file(const std::string& path);

}  // namespace eqbobw
