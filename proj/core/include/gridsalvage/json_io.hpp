#pragma once

#include <string>
#include <string_view>

#include "gridsalvage/certificates.hpp"
#include "gridsalvage/grid.hpp"
#include "gridsalvage/hypercube.hpp"

// Certificate file formats.  All are JSON text, UTF-8, emitted in a single
// canonical form: fixed field order, coordinate arrays sorted
// lexicographically, no insignificant whitespace.  parse(serialize(x)) == x
// and serialize(parse(s)) == s for canonical s.
namespace gridsalvage {

// {"d":2,"n":25,"damaged":[[x,y],...]}
std::string serialize(const DamageSet& damage);
DamageSet parse_damage_set(std::string_view text);

// {"host":{"d":..,"n":..},"minor":{"d":..,"n":..},"depth":..,
//  "branches":[{"v":[i,j],"hosts":[[x,y],...]},...]}
std::string serialize(const MinorModel& model);
MinorModel parse_minor_model(std::string_view text);

// {"bags":[[[x,y],...],...]}
std::string serialize(const PathDecomposition& pd);
PathDecomposition parse_path_decomposition(std::string_view text);

// "0**1" (a JSON string over 01*)
std::string serialize(const SubcubePattern& pattern);
SubcubePattern parse_subcube_pattern(std::string_view text);

// {"d":10,"damaged":["1110000000",...]} with axis 0 leftmost
std::string serialize(const hypercube::HypercubeDamage& damage);
hypercube::HypercubeDamage parse_hypercube_damage(std::string_view text);

// {"host":{"d":..,"n":..},"origin":[x,y],"side":k}
std::string serialize(const SubgridRegion& region, const GridSpec& host);
std::pair<SubgridRegion, GridSpec> parse_subgrid_region(std::string_view text);

}  // namespace gridsalvage
