#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "dialeval/linalg.hpp"
#include "dialeval/text.hpp"

namespace dialeval {

struct EmbeddingTable {
    std::size_t dimension = 0;
    std::unordered_map<std::string, Vec> entries;

    const Vec* find(const std::string& token) const {
        auto it = entries.find(token);
        return it == entries.end() ? nullptr : &it->second;
    }
};

struct SentenceEmbedding {
    Vec vector;
    bool empty_flag = false;  // true when no token had a vector; vector is all zero then

    bool operator==(const SentenceEmbedding& o) const = default;
};

enum class Pooling { MEAN, SUM, EXTREMA };

struct EncoderSpec {
    Pooling pooling = Pooling::MEAN;
};

Pooling parse_pooling(const std::string& name);  // "mean" | "sum" | "extrema"
std::string to_string(Pooling p);

// Text table, one entry per line: "token v1 v2 ... vn". Duplicate tokens keep
// the last occurrence; a note per duplicate is appended to *warnings when
// given. Inconsistent dimension or a non-numeric component raises InputError
// naming the line. An empty file raises InputError (dimension undeterminable).
EmbeddingTable load_embedding_table(const std::string& path,
                                    std::vector<std::string>* warnings = nullptr);
EmbeddingTable parse_embedding_table(const std::string& bytes,
                                     std::vector<std::string>* warnings = nullptr);

// Pools the vectors of in-table tokens. Out-of-vocabulary tokens are skipped;
// if nothing is found the result is the zero vector with empty_flag set.
// Accumulation runs over tokens in sorted order, so the encoding of a token
// multiset is byte-identical no matter the word order (the bag-of-words
// property the perturbation findings hinge on).
SentenceEmbedding encode(const Utterance& u, const EmbeddingTable& table, EncoderSpec spec);

// Concatenates all turns' tokens in order, then encodes.
SentenceEmbedding encode_context(const std::vector<Utterance>& turns, const EmbeddingTable& table,
                                 EncoderSpec spec);

// Cosine similarity of MEAN encodings. NumericError if either side encodes
// to empty (cosine undefined).
double embedding_average_similarity(const Utterance& a, const Utterance& b,
                                    const EmbeddingTable& table);

// For each in-vocabulary token of one side, the max cosine against the other
// side's tokens, averaged; both directions averaged together.
double greedy_match_similarity(const Utterance& a, const Utterance& b,
                               const EmbeddingTable& table);

// Cosine similarity of EXTREMA encodings.
double extrema_similarity(const Utterance& a, const Utterance& b, const EmbeddingTable& table);

}  // namespace dialeval
