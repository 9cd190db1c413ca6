// Regenerates the canonical pairing data files from the geometric
// constructions. The shipped fixtures are frozen copies of this output; a
// test pins the equality.

#include <filesystem>
#include <iostream>

#include "spaceform/constructions.hpp"
#include "spaceform/json_io.hpp"

using namespace spaceform;

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const PairingFixture& f) {
        save_text_file((dir / name).string(), fixture_to_json(f).dump(2) + "\n");
        std::cout << "wrote " << (dir / name).string() << "\n";
    };
    write("cube_torus.json", cube_torus_fixture());
    write("trunc_oct_fig4.json", derive_trunc_oct_pairing().fixture);
    write("football_fig5.json", derive_football_pairing().fixture);
    write("cobweb_z3_fig8.json", derive_cobweb_pairing(3).fixture);
    return 0;
}
