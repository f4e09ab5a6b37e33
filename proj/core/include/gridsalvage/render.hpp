#pragma once

#include <string>

#include "gridsalvage/certificates.hpp"
#include "gridsalvage/grid.hpp"
#include "gridsalvage/hypercube.hpp"

// Deterministic text and SVG pictures of damage sets and certificates.
// Grids with d <= 2 draw as grids ('.' undamaged, 'X' damaged, '#' branch
// or region member); hypercube damage draws as its 0/1 coordinate matrix.
namespace gridsalvage::render {

std::string ascii_grid(const DamageSet& damage,
                       const MinorModel* model = nullptr,
                       const SubgridRegion* region = nullptr);

std::string svg_grid(const DamageSet& damage,
                     const MinorModel* model = nullptr,
                     const SubgridRegion* region = nullptr);

std::string ascii_hypercube(const hypercube::HypercubeDamage& damage);

std::string svg_hypercube(const hypercube::HypercubeDamage& damage);

}  // namespace gridsalvage::render
