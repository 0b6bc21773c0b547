#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semantics.hpp"

namespace semwave {

struct RagTurn {
    int turn = 0;
    std::vector<std::string> retrieved_ids;
    std::vector<double> query_embedding;
    std::vector<double> response_embedding;
    std::string nearest_token;  // vocabulary token closest to the response
    double prompt_charge = 0.0; // total semantic charge of the enhanced prompt
    double drift = 0.0;         // 1 - cos(response, anchor)
};

struct RagTranscript {
    std::string context;
    std::string question;
    int k = 0;
    int n_turns = 0;
    std::uint64_t seed = 0;
    double noise_sigma = 0.0;
    std::vector<double> anchor;
    std::vector<RagTurn> turns;
    std::vector<double> drift_series;
    std::vector<double> control_drift_series; // seeded random walk, same step size
    double max_drift = 0.0;
    double max_control_drift = 0.0;
};

// Retrieval-and-composition conversation loop. Each turn retrieves the
// top-k chunks for the running conversation embedding, composes them with
// the conversation so far, and synthesizes a response as the composition
// plus seeded embedding noise. The control series is a pure random walk
// from the anchor with the same per-step noise, giving the drift baseline
// an anchored conversation has to beat.
RagTranscript run_rag_demo(const TokenSpace& space, const ChunkStore& store,
                           const std::string& context, const std::string& question, int k,
                           int n_turns, std::uint64_t seed, double noise_sigma = 0.05);

} // namespace semwave
