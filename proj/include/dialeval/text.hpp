#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dialeval/errors.hpp"

namespace dialeval {

// Characters split off from the ends of a whitespace chunk during
// tokenization, and the definition of a "punctuation token" everywhere else.
bool is_punct_char(char c);
bool is_punct_token(const std::string& tok);

struct Utterance {
    std::vector<std::string> tokens;
    std::string raw;

    bool empty() const { return tokens.empty(); }
    // Canonical surface form: tokens joined by single spaces.
    std::string canonical() const;

    bool operator==(const Utterance& o) const { return tokens == o.tokens; }
};

struct DialogueTriple {
    std::vector<Utterance> context;  // >= 1 turn
    Utterance reference;             // non-empty
    Utterance candidate;             // may be empty when the corpus omits it
    std::optional<double> human_score;  // in [1,5] when present
    std::size_t line = 0;            // source line, for diagnostics

    bool operator==(const DialogueTriple& o) const {
        return context == o.context && reference == o.reference && candidate == o.candidate &&
               human_score == o.human_score;
    }
};

enum class PosTag { NOUN, PROPN, PRON, VERB, ADJ, ADV, DET, ADP, PUNCT, OTHER };
enum class NerTag { PER, LOC, ORG, MISC, O };

PosTag parse_pos_tag(const std::string& s);  // throws InputError on unknown tag
NerTag parse_ner_tag(const std::string& s);
std::string to_string(PosTag t);
std::string to_string(NerTag t);

struct AnnotatedUtterance {
    std::vector<std::string> tokens;
    std::vector<PosTag> pos_tags;  // same length as tokens
    std::vector<NerTag> ner_tags;  // same length as tokens
};

// Lowercases, splits on whitespace, and peels the punctuation characters
// {. , ! ? ; : " ' ( )} off both ends of each chunk into standalone tokens.
// Internal punctuation ("don't", "<first_speaker>") is left alone.
// Idempotent on already-canonical text. Empty input gives an empty Utterance.
Utterance tokenize(const std::string& text);

enum class CorpusFormat { jsonl };

// JSON-lines corpus: one object per line with fields
//   context (array of strings, >= 1), reference (string),
//   candidate (optional string), human_score (optional number in [1,5]).
// Malformed records raise InputError naming the line and field.
std::vector<DialogueTriple> load_corpus(const std::string& path,
                                        CorpusFormat format = CorpusFormat::jsonl);
std::vector<DialogueTriple> parse_corpus(const std::string& bytes);

// Re-serializes triples in the same JSON-lines layout (load -> serialize ->
// load is an identity on the triples).
std::string serialize_corpus(const std::vector<DialogueTriple>& triples);

// Annotation sidecar: blocks of "token<TAB>POS<TAB>NER" lines, one block per
// utterance, blank line between blocks. Block i aligns with corpus record i.
std::vector<AnnotatedUtterance> load_annotations(const std::string& path);
std::vector<AnnotatedUtterance> parse_annotations(const std::string& bytes);

// Fallback tagger for desk-scale corpora: exact-match token -> (POS, NER)
// table; unknown tokens get OTHER / O.
struct TagLexicon {
    std::unordered_map<std::string, std::pair<PosTag, NerTag>> entries;
};

TagLexicon load_tag_lexicon(const std::string& path);  // token<TAB>POS<TAB>NER lines
AnnotatedUtterance annotate_with_lexicon(const Utterance& u, const TagLexicon& lex);

}  // namespace dialeval
