// Text and JSON formats shared by the CLI and the tests.

#ifndef NECKLACE_IO_HPP
#define NECKLACE_IO_HPP

#include <string>

#include "necklace/constructions.hpp"
#include "necklace/core.hpp"
#include "necklace/solver.hpp"

namespace necklace {

/// {"n":N,"model":..,"secant":[c1,c2],"pairs":[[i,j],...]}, pairs sorted.
std::string witness_json(const Matching& matching, std::uint64_t n);

/// Accepts a witness object or a SolveResult object; returns the matching
/// and the bead count it declares.
std::pair<Matching, std::uint64_t> parse_witness_json(const std::string& text);

/// {"n_red","n_blue","N","model","covered","ratio","secant","pairs",
///  "rotations_examined","rotations_pruned"} in that order.
std::string solve_result_json(const SolveResult& result);

/// {"preset","N","red","blue","mono","phi_achieved"}.
std::string preset_sidecar_json(const Instance& instance);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace necklace

#endif  // NECKLACE_IO_HPP
