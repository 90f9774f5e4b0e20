// Writes the checked-in corpus: algebra tables, frames, and vertex maps in
// the text formats understood by the library and the CLI.  Run with the
// output directory as the only argument (default: ./corpus).  The baselines/
// subdirectory is created empty here; its contents are captured from the CLI
// (see README).
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "kites/enumerate.hpp"
#include "kites/frame.hpp"
#include "kites/hom.hpp"
#include "kites/io.hpp"
#include "kites/lattice.hpp"

namespace fs = std::filesystem;
using namespace kites;

namespace {

void emit(const fs::path& path, const std::string& content) {
    write_file(path.string(), content);
    std::cout << "wrote " << path.string() << "\n";
}

MapSpec explicit_spec(std::vector<int> table) {
    MapSpec m;
    m.kind = FrameTransformation::MapKind::Explicit;
    m.table = std::move(table);
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path("corpus");
    for (const char* sub : {"lattices", "frames", "maps", "invalid", "baselines"}) {
        fs::create_directories(root / sub);
    }

    // --- Algebras -----------------------------------------------------------
    emit(root / "lattices/trivial.lat", serialize(trivial_lattice()));
    emit(root / "lattices/chain2.lat", serialize(chain2()));
    emit(root / "lattices/l3.lat", serialize(lukasiewicz_chain(3)));
    emit(root / "lattices/g3.lat", serialize(godel_chain(3)));
    emit(root / "lattices/l4.lat", serialize(lukasiewicz_chain(4)));
    emit(root / "lattices/g4.lat", serialize(godel_chain(4)));
    emit(root / "lattices/b22.lat", serialize(boolean_2x2()));
    emit(root / "lattices/nc4.lat", serialize(nc4()));
    emit(root / "lattices/nd4.lat", serialize(nd4()));
    emit(root / "lattices/nonprelinear5.lat", serialize(nonprelinear5()));

    // A file that parses (shape and ranges are fine) but fails the axiom
    // checks: the product table is identically zero, so the unit law and
    // adjointness both break.  Kept outside lattices/ so that directory only
    // holds genuine residuated lattices.
    emit(root / "invalid/broken_tables.lat",
         serialize(FiniteResLat(2, 1, {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 0, 0, 0},
                                {1, 1, 1, 1}, {1, 1, 1, 1})));

    // --- Frames -------------------------------------------------------------
    emit(root / "frames/empty.frame", serialize(empty_frame()));
    emit(root / "frames/loop.frame", serialize(singleton_loop()));
    emit(root / "frames/tail.frame", serialize(singleton_tail()));
    emit(root / "frames/cycle2.frame", serialize(cycle_frame(2)));
    emit(root / "frames/cycle3.frame", serialize(cycle_frame(3)));
    emit(root / "frames/cycle4.frame", serialize(cycle_frame(4)));
    emit(root / "frames/cycle6.frame", serialize(cycle_frame(6)));
    emit(root / "frames/path2.frame", serialize(path_frame(2)));
    emit(root / "frames/path3.frame", serialize(path_frame(3)));
    emit(root / "frames/path4.frame", serialize(path_frame(4)));
    emit(root / "frames/loops4.frame", serialize(loops_frame(4)));
    emit(root / "frames/zshift.frame", serialize(Frame::z_shift()));
    emit(root / "frames/nforward.frame", serialize(Frame::n_forward()));
    emit(root / "frames/nbackward.frame", serialize(Frame::n_backward()));

    // --- Vertex maps --------------------------------------------------------
    // Valid transformations.
    emit(root / "maps/mod2.map", serialize(explicit_spec({0, 1, 0, 1})));        // cycle4 -> cycle2
    emit(root / "maps/mod3.map", serialize(explicit_spec({0, 1, 2, 0, 1, 2})));  // cycle6 -> cycle3
    emit(root / "maps/collapse_loop.map", serialize(explicit_spec({0, 0, 0, 0})));  // cycle4 -> loop
    emit(root / "maps/id_path4.map", serialize(explicit_spec({0, 1, 2, 3})));    // path4 -> path4

    // Maps that fail the transformation conditions (used for rejection tests).
    emit(root / "maps/bad_halving.map", serialize(explicit_spec({0, 0, 1, 1})));  // cycle4 -> cycle2
    emit(root / "maps/bad_overcover.map", serialize(explicit_spec({0, 1})));      // path2 -> cycle2
    emit(root / "maps/bad_target.map", serialize(explicit_spec({1, 1})));         // edgeless 2 -> path2

    // Symbolic maps.
    {
        MapSpec shift;
        shift.kind = FrameTransformation::MapKind::Shift;
        shift.shift = 2;
        emit(root / "maps/shift2.map", serialize(shift));
        MapSpec mod;
        mod.kind = FrameTransformation::MapKind::ModCollapse;
        emit(root / "maps/mod_collapse.map", serialize(mod));
    }

    std::cout << "corpus written under " << root.string() << "\n";
    return 0;
}
