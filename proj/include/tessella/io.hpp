#pragma once

#include <string>

#include "json.hpp"

#include "tessella/gallery.hpp"
#include "tessella/padic.hpp"
#include "tessella/wang.hpp"

namespace tessella {

using json = nlohmann::json;

/// Versioned envelope of the interchange format.  Payloads are JSON; typed
/// accessors below convert to domain objects.  serialize(parse(m)) is
/// byte-identical for canonically serialized input.
struct Manifest {
    int schema_version = 1;
    std::string kind; // tile|system|periodic_set|window|wang|sudoku|coloring|report
    json payload;
};

Manifest parse_manifest(const std::string& text); // format_error with line/col
std::string serialize_manifest(const Manifest& m); // canonical: sorted keys, compact

json to_json(const GroupSpec& g);
json to_json(const Lattice& lat); // row-major matrix
json to_json(const GroupSpec& g, const GroupElement& e); // flat [free..., tor...]
json to_json(const Tile& f);
json to_json(const TileSystem& sys);
json to_json(const PeriodicSet& a); // residues as explicit points
json to_json(const WindowSet& w);   // run-length rows along coordinate 0
json to_json(const WangInstance& w);
json to_json(const WangAssignment& a);
json to_json(const SudokuWindow& s);
json to_json(const ColoringInstance& inst); // explicit table or name + params

GroupSpec group_from_json(const json& j);
Lattice lattice_from_json(const json& j);
GroupElement element_from_json(const GroupSpec& g, const json& j);
Tile tile_from_json(const json& j);
TileSystem system_from_json(const json& j);
PeriodicSet periodic_set_from_json(const json& j);
WindowSet window_from_json(const json& j);
WangInstance wang_from_json(const json& j);
WangAssignment wang_assignment_from_json(const json& j);
SudokuWindow sudoku_from_json(const json& j);
ColoringInstance coloring_from_json(const json& j);

Manifest make_manifest(std::string kind, json payload);

}  // namespace tessella
