#pragma once

#include <complex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wavefunction.hpp"

namespace semwave {

// Token emitted for characters no vocabulary entry covers.
inline const std::string kUnknownToken = "<unk>";

// Immutable vocabulary with per-token embeddings (shared dimension) and
// semantic charges.
class TokenSpace {
public:
    TokenSpace(std::vector<std::string> tokens, std::vector<std::vector<double>> embeddings,
               std::vector<double> charges);

    int dim() const { return dim_; }
    size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::vector<double>& embedding(size_t index) const { return embeddings_[index]; }
    double charge(size_t index) const { return charges_[index]; }

    bool contains(const std::string& token) const;
    // Index of a token, or -1 when absent.
    long index_of(const std::string& token) const;

private:
    std::vector<std::string> tokens_;
    std::vector<std::vector<double>> embeddings_;
    std::vector<double> charges_;
    std::unordered_map<std::string, size_t> index_;
    int dim_ = 0;
};

struct Chunk {
    std::string id;
    std::vector<std::string> tokens;
    std::vector<double> embedding;
};

class ChunkStore {
public:
    explicit ChunkStore(std::vector<Chunk> chunks);

    size_t size() const { return chunks_.size(); }
    const Chunk& at(size_t i) const { return chunks_[i]; }
    const Chunk* find(const std::string& id) const;

private:
    std::vector<Chunk> chunks_;
    std::unordered_map<std::string, size_t> index_;
};

enum class PromptRole { context, question, chunk, response };

struct PromptPart {
    PromptRole role;
    std::vector<std::string> tokens;
    std::vector<double> embedding;
};

struct PromptState {
    std::vector<PromptPart> parts;
    std::vector<double> embedding; // normalized mean of the part embeddings
    std::vector<std::string> all_tokens() const;
};

// Whitespace split followed by greedy longest-prefix matching against the
// vocabulary; characters no entry covers become kUnknownToken.
std::vector<std::string> tokenize(const std::string& text, const TokenSpace& space);

// Fraction of whitespace-separated words fully segmentable without the
// unknown token.
double coverage(const std::string& corpus, const TokenSpace& space);

std::vector<std::complex<double>> complexify(const std::vector<double>& v, double phase);
std::vector<std::complex<double>> complexify(const std::vector<double>& v,
                                             const std::vector<double>& phases);

double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v);

// Ids of the min(k, store size) most similar chunks, descending similarity,
// ties broken by ascending id.
std::vector<std::string> retrieve_top_k(const std::vector<double>& query,
                                        const ChunkStore& store, int k);

// Normalized mean of the known tokens' embeddings.
std::vector<double> embed(const std::vector<std::string>& tokens, const TokenSpace& space);

PromptPart make_part(PromptRole role, const std::string& text, const TokenSpace& space);
PromptPart make_part_from_embedding(PromptRole role, std::vector<double> embedding);

// Token concatenation plus normalized mean of the part embeddings.
PromptState compose_prompt(const std::vector<PromptPart>& parts);

// Per-step 1 - cos(history_t, anchor).
std::vector<double> anchor_drift(const std::vector<std::vector<double>>& history,
                                 const std::vector<double>& anchor);

double total_semantic_charge(const std::vector<std::string>& tokens, const TokenSpace& space);

// Scalar projection of v onto a unit axis, clamped to the inner 90% of the
// grid, realized as a resting Gaussian packet.
WaveFunction embedding_to_wavepacket(const std::vector<double>& v,
                                     const std::vector<double>& axis, const SpatialGrid& grid,
                                     double width);

const char* role_name(PromptRole role);

} // namespace semwave
