#include "rag.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace semwave {

namespace {

void add_noise(std::vector<double>& v, Rng& rng, double sigma) {
    for (double& x : v) x += sigma * rng.gaussian();
    double n2 = 0.0;
    for (double x : v) n2 += x * x;
    if (n2 <= 0.0) return; // vanishing after noise is effectively impossible
    const double inv = 1.0 / std::sqrt(n2);
    for (double& x : v) x *= inv;
}

std::string nearest_token(const std::vector<double>& v, const TokenSpace& space) {
    size_t best = 0;
    double best_sim = -2.0;
    for (size_t i = 0; i < space.size(); ++i) {
        const double sim = cosine_similarity(v, space.embedding(i));
        if (sim > best_sim) {
            best_sim = sim;
            best = i;
        }
    }
    return space.tokens()[best];
}

} // namespace

RagTranscript run_rag_demo(const TokenSpace& space, const ChunkStore& store,
                           const std::string& context, const std::string& question, int k,
                           int n_turns, std::uint64_t seed, double noise_sigma) {
    if (k < 1) throw_error(ErrorCode::invalid_parameter, "rag demo needs k >= 1");
    if (n_turns < 1) throw_error(ErrorCode::invalid_parameter, "rag demo needs turns >= 1");
    if (!(noise_sigma >= 0.0))
        throw_error(ErrorCode::invalid_parameter, "noise sigma cannot be negative");
    if (store.size() == 0)
        throw_error(ErrorCode::invalid_parameter, "rag demo needs a non-empty chunk store");

    RagTranscript out;
    out.context = context;
    out.question = question;
    out.k = k;
    out.n_turns = n_turns;
    out.seed = seed;
    out.noise_sigma = noise_sigma;

    const PromptPart context_part = make_part(PromptRole::context, context, space);
    const PromptPart question_part = make_part(PromptRole::question, question, space);
    out.anchor = compose_prompt({context_part, question_part}).embedding;

    Rng response_rng(seed);
    Rng control_rng(seed ^ 0x9e3779b97f4a7c15ull);

    std::vector<PromptPart> history{context_part, question_part};
    std::vector<double> control = out.anchor;

    for (int t = 1; t <= n_turns; ++t) {
        RagTurn turn;
        turn.turn = t;
        turn.query_embedding = compose_prompt(history).embedding;
        turn.retrieved_ids = retrieve_top_k(turn.query_embedding, store, k);

        std::vector<PromptPart> enhanced;
        enhanced.reserve(turn.retrieved_ids.size() + history.size());
        std::vector<std::string> prompt_tokens;
        for (const std::string& id : turn.retrieved_ids) {
            const Chunk* c = store.find(id);
            PromptPart part = make_part_from_embedding(PromptRole::chunk, c->embedding);
            part.tokens = c->tokens;
            prompt_tokens.insert(prompt_tokens.end(), c->tokens.begin(), c->tokens.end());
            enhanced.push_back(std::move(part));
        }
        for (const PromptPart& p : history) {
            prompt_tokens.insert(prompt_tokens.end(), p.tokens.begin(), p.tokens.end());
            enhanced.push_back(p);
        }
        const PromptState enhanced_prompt = compose_prompt(enhanced);
        turn.prompt_charge = total_semantic_charge(prompt_tokens, space);

        turn.response_embedding = enhanced_prompt.embedding;
        add_noise(turn.response_embedding, response_rng, noise_sigma);
        turn.nearest_token = nearest_token(turn.response_embedding, space);
        turn.drift = 1.0 - cosine_similarity(turn.response_embedding, out.anchor);

        history.push_back(make_part_from_embedding(PromptRole::response, turn.response_embedding));
        out.drift_series.push_back(turn.drift);
        out.turns.push_back(std::move(turn));

        add_noise(control, control_rng, noise_sigma);
        out.control_drift_series.push_back(1.0 - cosine_similarity(control, out.anchor));
    }

    out.max_drift = *std::max_element(out.drift_series.begin(), out.drift_series.end());
    out.max_control_drift =
        *std::max_element(out.control_drift_series.begin(), out.control_drift_series.end());
    return out;
}

} // namespace semwave
