#pragma once

#include <string>

#include "gauge.hpp"
#include "potential.hpp"
#include "propagator.hpp"
#include "rag.hpp"
#include "semantics.hpp"
#include "wavefunction.hpp"

namespace semwave {

// JSON schema: {"grid": {"n":..,"x_min":..,"x_max":..,"boundary":..},
//               "re": [...], "im": [...]}
std::string wavefunction_to_json(const WaveFunction& psi);
WaveFunction wavefunction_from_json(const std::string& text);

// Two-column CSV with one comment line of grid metadata.
std::string wavefunction_to_csv(const WaveFunction& psi);
WaveFunction wavefunction_from_csv(const std::string& text);

// Tagged union, e.g. {"type":"double_well","a":1.0,"b":2.0}.
std::string potential_to_json(const PotentialSpec& spec);
PotentialSpec potential_from_json(const std::string& text);

// {"dim":N,"tokens":[{"text":..,"embedding":[..],"charge":..}, ...]}
std::string token_space_to_json(const TokenSpace& space);
TokenSpace token_space_from_json(const std::string& text);

// JSON lines, one {"id":..,"text":..} per line; embeddings are computed
// against the given space.
ChunkStore chunk_store_from_jsonl(const std::string& text, const TokenSpace& space);

std::string gauge_report_to_json(const GaugeCheckReport& report);
std::string transcript_to_json(const RagTranscript& transcript);

// Columns: t, norm, energy, x_expect, charge.
std::string trajectory_to_csv(const Trajectory& traj);
std::string energies_to_csv(const EigenSolution& solution);
std::string profile_to_csv(const SpatialGrid& grid, const std::vector<double>& values,
                           const std::string& value_column);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace semwave
