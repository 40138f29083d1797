#pragma once

#include <string>

#include <json.hpp>

#include "mobius/analysis.hpp"
#include "mobius/autgrp.hpp"
#include "mobius/config.hpp"
#include "mobius/oracle.hpp"

namespace mobius::io {

using json = nlohmann::json;

// {"n": 4, "phi": [2,3,4,1], "blocks": {"A1": ["a2","a3","a4","b1"], ...}}
json to_json(const config::MobiusPair& M);
config::MobiusPair mobius_from_json(const json& j);

json to_json(const oracle::IsoMap& f, int n);
json to_json(const oracle::DecompositionPair& d, int n);
json to_json(const autgrp::AutReport& r);
json to_json(const analysis::IntersectionProfile& p);
json to_json(const analysis::RecognizeResult& r);

// {"points": [names], "blocks": [[names], ...]}
json to_json(const analysis::RawStructure& s);
analysis::RawStructure raw_from_json(const json& j);

}  // namespace mobius::io
