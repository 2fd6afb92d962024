#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dialeval/embed.hpp"
#include "dialeval/scorer.hpp"
#include "dialeval/text.hpp"

namespace dialeval {

struct ResponseDatabase {
    std::vector<Utterance> responses;
    std::vector<SentenceEmbedding> embeddings;  // aligned, uniform dimension
    std::vector<std::string> source_meta;       // empty or aligned

    std::size_t size() const { return responses.size(); }
    std::size_t dim() const { return embeddings.empty() ? 0 : embeddings.front().vector.size(); }
    Vec mean_embedding() const;
    // Cosine-mode helper: every embedding scaled to unit norm (zero vectors
    // left alone).
    ResponseDatabase normalized_copy() const;
};

// Random-projection forest. Immutable once built; concurrent queries are safe.
struct RpNode {
    bool leaf = false;
    std::vector<float> normal;  // unit-norm hyperplane normal (internal nodes)
    float offset = 0.0f;
    std::uint32_t left = 0;   // node indices within the tree
    std::uint32_t right = 0;
    std::vector<std::uint64_t> items;  // leaf payload
};

struct RpTree {
    std::vector<RpNode> nodes;  // root at index 0, preorder layout
};

struct RpForestIndex {
    std::uint32_t dimension = 0;
    std::uint32_t leaf_capacity = 0;
    std::uint64_t seed = 0;
    std::vector<RpTree> trees;

    std::size_t total_nodes() const;
};

struct Neighbor {
    std::uint64_t id = 0;
    double distance = 0.0;  // euclidean
    double score = 0.0;     // scorer value of the stored embedding
};

struct AttackResult {
    double target_score = 0.0;
    Vec achieved_embedding;
    double achieved_exact_score = 0.0;  // within 1e-9 of target
    std::vector<Neighbor> neighbors;    // ranked by distance
    std::uint64_t best_id = 0;
    double best_score = 0.0;            // max neighbor score, ties to lowest id
};

// Closed-form whitebox step: the scorer is affine in the candidate embedding,
// so start + ((target - score(start)) / (a.a)) a lands exactly on the target
// score. A zero affine form (score independent of the candidate) raises
// NumericError.
Vec gradient_attack(const SentenceEmbedding& c, const SentenceEmbedding& r,
                    const ScorerParams& params, const SentenceEmbedding& start,
                    double target_score);

// Fixed-step iterative variant kept behind the same interface for scorers
// that are not affine in the candidate; recomputes the gradient each step.
Vec gradient_attack_iterative(const SentenceEmbedding& c, const SentenceEmbedding& r,
                              const ScorerParams& params, const SentenceEmbedding& start,
                              double target_score, double step_size, std::size_t max_iters,
                              double tol = 1e-9);

// Each tree splits recursively on the perpendicular bisector of two distinct
// seeded-random member items until a node holds <= leaf_capacity items.
// Hyperplanes are stored (and partitioned against) in f32 so a saved and
// reloaded index is bit-identical to the built one. Nodes whose items all
// share one embedding become leaves regardless of size.
RpForestIndex build_index(const ResponseDatabase& db, std::uint32_t num_trees,
                          std::uint32_t leaf_capacity, std::uint64_t seed);

// Best-first traversal over all trees (priority = margin distance to the
// splitting hyperplanes), popping nodes until search_budget visits are spent,
// then an exact euclidean re-rank of the candidate union. Ties break to the
// lower id. With search_budget >= total_nodes() this degenerates to
// exhaustive search.
std::vector<std::pair<std::uint64_t, double>> query_index(const RpForestIndex& index, const Vec& q,
                                                          std::size_t k,
                                                          std::size_t search_budget);

// Whitebox attack realized against the database: gradient step to the target,
// k approximate neighbors of the achieved embedding, each scored with the
// scorer. start defaults to the database's mean embedding.
AttackResult realize_attack(const SentenceEmbedding& c, const SentenceEmbedding& r,
                            const ScorerParams& params, const ResponseDatabase& db,
                            const RpForestIndex& index, double target_score, std::size_t k = 400,
                            std::size_t search_budget = 0,  // 0 = k * tree count
                            const std::optional<Vec>& start = std::nullopt);

// Exact argmax of the scorer over the whole database; ties to lowest id.
std::pair<std::uint64_t, double> brute_force_attack(const SentenceEmbedding& c,
                                                    const SentenceEmbedding& r,
                                                    const ScorerParams& params,
                                                    const ResponseDatabase& db);

// Index persistence, binary little-endian (magic "RPF1"); bit-exact round
// trip. Corrupt files raise InputError.
std::string serialize_index(const RpForestIndex& index);
RpForestIndex parse_index(const std::string& bytes);
void save_index(const RpForestIndex& index, const std::string& path);
RpForestIndex load_index(const std::string& path);

// Response database persistence: <prefix>.jsonl with {"id", "text"} records
// (plus "meta" when present) and <prefix>.emb holding "EMB1", u32 dim,
// u64 count, f32 row-major data.
void save_response_db(const ResponseDatabase& db, const std::string& prefix);
ResponseDatabase load_response_db(const std::string& prefix);

}  // namespace dialeval
