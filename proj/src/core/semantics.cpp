#include "semantics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semwave {

namespace {

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> words;
    std::istringstream in(text);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return dot(a, a); }

} // namespace

TokenSpace::TokenSpace(std::vector<std::string> tokens,
                       std::vector<std::vector<double>> embeddings,
                       std::vector<double> charges)
    : tokens_(std::move(tokens)), embeddings_(std::move(embeddings)),
      charges_(std::move(charges)) {
    if (tokens_.empty())
        throw_error(ErrorCode::invalid_parameter, "token space needs at least one token");
    if (embeddings_.size() != tokens_.size() || charges_.size() != tokens_.size())
        throw_error(ErrorCode::invalid_parameter,
                    "token space needs one embedding and one charge per token");
    dim_ = static_cast<int>(embeddings_.front().size());
    if (dim_ == 0)
        throw_error(ErrorCode::invalid_parameter, "token embeddings cannot be empty");
    for (size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].empty())
            throw_error(ErrorCode::invalid_parameter, "empty token text");
        if (static_cast<int>(embeddings_[i].size()) != dim_)
            throw_error(ErrorCode::invalid_parameter,
                        "token '" + tokens_[i] + "' has embedding dimension " +
                            std::to_string(embeddings_[i].size()) + ", expected " +
                            std::to_string(dim_));
        for (double v : embeddings_[i])
            if (!std::isfinite(v))
                throw_error(ErrorCode::invalid_parameter,
                            "token '" + tokens_[i] + "' has a non-finite embedding entry");
        if (!std::isfinite(charges_[i]))
            throw_error(ErrorCode::invalid_parameter,
                        "token '" + tokens_[i] + "' has a non-finite charge");
        if (!index_.emplace(tokens_[i], i).second)
            throw_error(ErrorCode::invalid_parameter, "duplicate token '" + tokens_[i] + "'");
    }
}

bool TokenSpace::contains(const std::string& token) const { return index_.count(token) > 0; }

long TokenSpace::index_of(const std::string& token) const {
    auto it = index_.find(token);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

ChunkStore::ChunkStore(std::vector<Chunk> chunks) : chunks_(std::move(chunks)) {
    for (size_t i = 0; i < chunks_.size(); ++i) {
        if (chunks_[i].id.empty())
            throw_error(ErrorCode::invalid_parameter, "chunk with empty id");
        if (!index_.emplace(chunks_[i].id, i).second)
            throw_error(ErrorCode::invalid_parameter, "duplicate chunk id '" + chunks_[i].id + "'");
    }
}

const Chunk* ChunkStore::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &chunks_[it->second];
}

std::vector<std::string> PromptState::all_tokens() const {
    std::vector<std::string> out;
    for (const PromptPart& p : parts) out.insert(out.end(), p.tokens.begin(), p.tokens.end());
    return out;
}

std::vector<std::string> tokenize(const std::string& text, const TokenSpace& space) {
    std::vector<std::string> out;
    for (const std::string& word : split_words(text)) {
        size_t pos = 0;
        while (pos < word.size()) {
            // Greedy longest vocabulary prefix starting at pos.
            size_t best_len = 0;
            long best_index = -1;
            for (size_t len = word.size() - pos; len >= 1; --len) {
                const long idx = space.index_of(word.substr(pos, len));
                if (idx >= 0) {
                    best_len = len;
                    best_index = idx;
                    break;
                }
            }
            if (best_index >= 0) {
                out.push_back(space.tokens()[static_cast<size_t>(best_index)]);
                pos += best_len;
            } else {
                out.push_back(kUnknownToken);
                pos += 1;
            }
        }
    }
    return out;
}

double coverage(const std::string& corpus, const TokenSpace& space) {
    const std::vector<std::string> words = split_words(corpus);
    if (words.empty())
        throw_error(ErrorCode::invalid_parameter, "coverage needs a non-empty corpus");
    size_t covered = 0;
    for (const std::string& word : words) {
        const std::vector<std::string> toks = tokenize(word, space);
        const bool ok =
            std::none_of(toks.begin(), toks.end(),
                         [](const std::string& t) { return t == kUnknownToken; });
        if (ok) ++covered;
    }
    return static_cast<double>(covered) / static_cast<double>(words.size());
}

std::vector<std::complex<double>> complexify(const std::vector<double>& v, double phase) {
    std::vector<std::complex<double>> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * std::polar(1.0, phase);
    return out;
}

std::vector<std::complex<double>> complexify(const std::vector<double>& v,
                                             const std::vector<double>& phases) {
    if (phases.size() != v.size())
        throw_error(ErrorCode::invalid_parameter, "complexify: phase vector dimension mismatch");
    std::vector<std::complex<double>> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * std::polar(1.0, phases[i]);
    return out;
}

double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size())
        throw_error(ErrorCode::invalid_parameter, "cosine similarity: dimension mismatch");
    const double nu = norm2(u), nv = norm2(v);
    if (nu <= 0.0 || nv <= 0.0)
        throw_error(ErrorCode::degenerate_vector, "cosine similarity of a zero vector");
    return dot(u, v) / std::sqrt(nu * nv);
}

std::vector<std::string> retrieve_top_k(const std::vector<double>& query,
                                        const ChunkStore& store, int k) {
    if (store.size() == 0)
        throw_error(ErrorCode::invalid_parameter, "retrieval from an empty chunk store");
    if (k < 1) throw_error(ErrorCode::invalid_parameter, "retrieval needs k >= 1");

    std::vector<std::pair<double, const std::string*>> scored;
    scored.reserve(store.size());
    for (size_t i = 0; i < store.size(); ++i) {
        const Chunk& c = store.at(i);
        scored.emplace_back(cosine_similarity(query, c.embedding), &c.id);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return *a.second < *b.second;
    });
    const size_t take = std::min(static_cast<size_t>(k), scored.size());
    std::vector<std::string> ids;
    ids.reserve(take);
    for (size_t i = 0; i < take; ++i) ids.push_back(*scored[i].second);
    return ids;
}

std::vector<double> embed(const std::vector<std::string>& tokens, const TokenSpace& space) {
    if (tokens.empty())
        throw_error(ErrorCode::invalid_parameter, "embed needs a non-empty token sequence");
    std::vector<double> mean(static_cast<size_t>(space.dim()), 0.0);
    size_t known = 0;
    for (const std::string& t : tokens) {
        const long idx = space.index_of(t);
        if (idx < 0) continue; // unknown tokens are excluded from the mean
        const std::vector<double>& e = space.embedding(static_cast<size_t>(idx));
        for (size_t i = 0; i < mean.size(); ++i) mean[i] += e[i];
        ++known;
    }
    if (known == 0)
        throw_error(ErrorCode::degenerate_embedding, "no known tokens to embed");
    for (double& v : mean) v /= static_cast<double>(known);
    const double n = std::sqrt(norm2(mean));
    if (n <= 0.0)
        throw_error(ErrorCode::degenerate_embedding, "token embeddings average to zero");
    for (double& v : mean) v /= n;
    return mean;
}

PromptPart make_part(PromptRole role, const std::string& text, const TokenSpace& space) {
    PromptPart part;
    part.role = role;
    part.tokens = tokenize(text, space);
    part.embedding = embed(part.tokens, space);
    return part;
}

PromptPart make_part_from_embedding(PromptRole role, std::vector<double> embedding) {
    if (embedding.empty())
        throw_error(ErrorCode::invalid_parameter, "part embedding cannot be empty");
    PromptPart part;
    part.role = role;
    part.embedding = std::move(embedding);
    return part;
}

PromptState compose_prompt(const std::vector<PromptPart>& parts) {
    if (parts.empty())
        throw_error(ErrorCode::invalid_parameter, "compose_prompt needs at least one part");
    const size_t dim = parts.front().embedding.size();
    std::vector<double> mean(dim, 0.0);
    for (const PromptPart& p : parts) {
        if (p.embedding.size() != dim)
            throw_error(ErrorCode::invalid_parameter, "prompt part embeddings disagree on dimension");
        for (size_t i = 0; i < dim; ++i) mean[i] += p.embedding[i];
    }
    for (double& v : mean) v /= static_cast<double>(parts.size());
    const double n = std::sqrt(norm2(mean));
    if (n <= 0.0)
        throw_error(ErrorCode::degenerate_embedding,
                    "prompt parts average to the zero embedding");
    for (double& v : mean) v /= n;
    PromptState state;
    state.parts = parts;
    state.embedding = std::move(mean);
    return state;
}

std::vector<double> anchor_drift(const std::vector<std::vector<double>>& history,
                                 const std::vector<double>& anchor) {
    std::vector<double> drift;
    drift.reserve(history.size());
    for (const std::vector<double>& h : history) {
        if (h.size() != anchor.size())
            throw_error(ErrorCode::invalid_parameter, "anchor drift: dimension mismatch");
        drift.push_back(1.0 - cosine_similarity(h, anchor));
    }
    return drift;
}

double total_semantic_charge(const std::vector<std::string>& tokens, const TokenSpace& space) {
    double total = 0.0;
    for (const std::string& t : tokens) {
        const long idx = space.index_of(t);
        if (idx >= 0) total += space.charge(static_cast<size_t>(idx));
    }
    return total;
}

WaveFunction embedding_to_wavepacket(const std::vector<double>& v,
                                     const std::vector<double>& axis, const SpatialGrid& grid,
                                     double width) {
    if (axis.size() != v.size())
        throw_error(ErrorCode::invalid_parameter, "axis dimension does not match the embedding");
    const double an = std::sqrt(norm2(axis));
    if (std::abs(an - 1.0) > 1e-9)
        throw_error(ErrorCode::invalid_parameter, "projection axis must have unit norm");
    double center = dot(v, axis);
    const double margin = 0.05 * grid.length();
    center = std::clamp(center, grid.x_min + margin, grid.x_max - margin);
    return make_gaussian(grid, center, width, 0.0);
}

const char* role_name(PromptRole role) {
    switch (role) {
        case PromptRole::context: return "context";
        case PromptRole::question: return "question";
        case PromptRole::chunk: return "chunk";
        case PromptRole::response: return "response";
    }
    return "unknown";
}

} // namespace semwave
