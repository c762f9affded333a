#ifndef AITCHISON_STATE_FILE_HPP
#define AITCHISON_STATE_FILE_HPP

// On-disk representation shared by the CLI and fixtures: a JSON object
//   { "kind": "state"|"hamiltonian", "dim": n,
//     "matrix": [[[re, im], ...], ...], "metadata": {...}? }
// Floats are written with 17 significant digits, so write-then-read
// reproduces every double bit-exactly. The writer emits a canonical layout
// (fixed key order, one matrix row per line) so identical inputs always
// produce identical bytes.

#include <map>
#include <string>

#include "aitchison/matrix.hpp"
#include "aitchison/state_space.hpp"

namespace aitchison {

struct StateFile {
    enum class Kind { State, Hamiltonian };

    Kind kind = Kind::State;
    int dim = 0;
    ComplexMatrix matrix;
    std::map<std::string, std::string> metadata;

    // Domain-validating conversions.
    DensityState to_state(double eps_pd = kEpsPd) const;
    Hamiltonian to_hamiltonian() const;

    static StateFile from_state(const DensityState& d);
    static StateFile from_hamiltonian(const Hamiltonian& h);
};

// Throws FileFormatError on I/O or schema violations.
StateFile read_state_file(const std::string& path);
StateFile parse_state_file(const std::string& text);

std::string serialize_state_file(const StateFile& f);
void write_state_file(const StateFile& f, const std::string& path);

// printf-style "%.17g"; shared with the CSV writer.
std::string format_double_17(double x);

} // namespace aitchison

#endif
