#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kites/frame.hpp"
#include "kites/hom.hpp"
#include "kites/kite.hpp"
#include "kites/lattice.hpp"

namespace kites {

// ---------------------------------------------------------------------------
// Line-oriented text formats.  Blank lines and lines starting with '#' are
// ignored everywhere.  Parsing is strict (unknown keys, missing fields,
// malformed numbers and trailing garbage raise ParseError with a position);
// serialization is canonical, so parse-then-serialize is the identity on
// serialized output.
//
// Algebra (.lat): size and unit, then the five n-by-n operation tables
// meet, join, mul, ldiv, rdiv, each introduced by its name with one row of n
// entries per line.  Table entry conventions: mul[x][y] = x*y,
// ldiv[x][z] = x \ z, rdiv[z][y] = z / y.
//
//   size 3
//   unit 2
//   meet
//   0 0 0
//   0 1 1
//   0 1 2
//   join
//   ...
//
// Frame (.frame): either a single symbolic line or a finite description:
//
//   kind z-shift | n-forward | n-backward
//
//   kind finite
//   size 4
//   i1 0 1 2
//   lambda 0->1 1->2 2->3
//
// Vertex map (.map): the map data only; the two frames are supplied
// separately when the map is bound:
//
//   kind explicit          kind shift        kind mod
//   t 0->1 1->0            by 3
//
// Kite element literal: "@<level>[v0,v1,...]" with one value per label of
// the level set, in ascending label order, e.g. "@1[0,2,1]" or "@3[]".
// ---------------------------------------------------------------------------

FiniteResLat parse_lattice(std::istream& in);
FiniteResLat parse_lattice_string(const std::string& text);
std::string serialize(const FiniteResLat& g);

Frame parse_frame(std::istream& in);
Frame parse_frame_string(const std::string& text);
std::string serialize(const Frame& f);

// A vertex map without its frames.
struct MapSpec {
    FrameTransformation::MapKind kind = FrameTransformation::MapKind::Explicit;
    std::vector<int> table;  // explicit
    long long shift = 0;     // shift
};

MapSpec parse_map(std::istream& in);
MapSpec parse_map_string(const std::string& text);
std::string serialize(const MapSpec& m);

// Attaches frames to a parsed map, validating totality and range.
FrameTransformation bind_map(const MapSpec& m, Frame source, Frame target);

// Parses "@<level>[v0,v1,...]" against a kite's level sets; values must be
// in range for the kite's algebra and match the level width exactly.
KiteElement parse_element(const std::string& text, const Kite& k);

// Whole-file helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
FiniteResLat load_lattice(const std::string& path);
Frame load_frame(const std::string& path);
MapSpec load_map(const std::string& path);

}  // namespace kites
