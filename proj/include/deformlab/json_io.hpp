#pragma once

#include <json.hpp>

#include "deformlab/core2d.hpp"
#include "deformlab/core3d.hpp"
#include "deformlab/estimate.hpp"
#include "deformlab/verify.hpp"

namespace deformlab {

using ordered_json = nlohmann::ordered_json;

/// Rounds to 15 significant digits and back, so the serialized number both
/// carries 15 significant digits and round-trips exactly through parsing.
double printable(double v);

ordered_json to_json(const SingularPair& s);
ordered_json to_json(const PolarForm& p);
ordered_json to_json(const GramInvariants& g);
ordered_json to_json(const EigenTriple& x);
ordered_json to_json(const Estimate& e);
ordered_json to_json(const CampaignReport& r);

}  // namespace deformlab
