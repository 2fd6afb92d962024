#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dialeval/text.hpp"

namespace dialeval {

// Stable ids; seed derivation and CLI names depend on this numbering.
enum class TransformKind : std::uint64_t {
    REMOVE_PUNCT = 0,
    REMOVE_STOPWORDS_FULL = 1,
    REMOVE_STOPWORDS_25 = 2,
    KEEP_NOUN_PRON_VERB = 3,
    REMOVE_NAMED_ENTITIES = 4,
    SYNONYM_REPLACE = 5,
    JUMBLE = 6,
    REVERSE = 7,
    KEEP_NOUNS_ONLY = 8,
    REPEAT_WORDS = 9,
    GENERIC_RESPONSE = 10,
};

TransformKind parse_transform_kind(const std::string& cli_name);
std::string to_string(TransformKind k);  // the CLI identifier

enum class StopwordListId { FULL, TOP25 };

struct StopwordList {
    StopwordListId id = StopwordListId::FULL;
    std::unordered_set<std::string> words;  // lowercase

    bool contains(const std::string& tok) const;
};

// The verbatim 25-word common-stopword list.
StopwordList top25_stopwords();
// One word per line; blank lines skipped.
StopwordList load_stopword_list(const std::string& path, StopwordListId id = StopwordListId::FULL);

// JSON-lines {"word": ..., "replacement": ...} pairs.
struct SynonymLexicon {
    std::unordered_map<std::string, std::string> map;
};
SynonymLexicon load_synonym_lexicon(const std::string& path);
SynonymLexicon parse_synonym_lexicon(const std::string& bytes);

struct TransformSpec {
    TransformKind kind = TransformKind::REVERSE;
    // JUMBLE: permutation (source index per output slot); REPEAT_WORDS:
    // positions to duplicate. Required iff the kind draws randomness.
    std::optional<std::vector<std::size_t>> randomness;
    const SynonymLexicon* lexicon = nullptr;       // SYNONYM_REPLACE
    const StopwordList* stopwords = nullptr;       // stopword kinds + synonym exclusion
    std::optional<Utterance> generic_text;         // GENERIC_RESPONSE
    // Paper-silent knobs, parameterized instead of guessed:
    bool jumble_fix_punct = false;        // permute only non-punctuation slots
    bool repeat_with_replacement = false; // allow duplicate repeat positions
};

// Randomness for a transform: JUMBLE gets a Fisher-Yates permutation of the
// m token slots (or of the non-punct slot count when jumble_fix_punct);
// REPEAT_WORDS gets floor(m/2) positions, distinct unless with_replacement.
// Fixed algorithm, see rng.hpp.
std::vector<std::size_t> sample_randomness(TransformKind kind, std::size_t m, std::uint64_t seed,
                                           bool with_replacement = false);

// Applies one battery transform. `ann` must be present and token-aligned for
// the POS/NER kinds; SYNONYM_REPLACE uses it only to skip named entities.
// Malformed randomness or missing annotation raise InputError.
Utterance apply_transform(const Utterance& u, const TransformSpec& spec,
                          const AnnotatedUtterance* ann = nullptr);

struct SanityProbe {
    std::string label;
    double ideal_score = 0.0;
    DialogueTriple triple;
};

// Probe triples: (a) candidate = reference, (b) candidate = concatenated
// context turns, and when a machine response is given, (c) candidate =
// machine response, (d) reference and machine response swapped.
std::vector<SanityProbe> sanity_probe_set(const DialogueTriple& triple,
                                          const std::optional<Utterance>& machine_response);

// The three fixed context-independent probe responses, canonically tokenized.
std::vector<Utterance> builtin_generic_responses();

}  // namespace dialeval
