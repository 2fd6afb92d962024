#include "dialeval/perturb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "dialeval/rng.hpp"
#include "json.hpp"

namespace dialeval {

TransformKind parse_transform_kind(const std::string& name) {
    if (name == "remove-punct") return TransformKind::REMOVE_PUNCT;
    if (name == "stopwords-full") return TransformKind::REMOVE_STOPWORDS_FULL;
    if (name == "stopwords-25") return TransformKind::REMOVE_STOPWORDS_25;
    if (name == "keep-npv") return TransformKind::KEEP_NOUN_PRON_VERB;
    if (name == "remove-ne") return TransformKind::REMOVE_NAMED_ENTITIES;
    if (name == "synonyms") return TransformKind::SYNONYM_REPLACE;
    if (name == "jumble") return TransformKind::JUMBLE;
    if (name == "reverse") return TransformKind::REVERSE;
    if (name == "keep-nouns") return TransformKind::KEEP_NOUNS_ONLY;
    if (name == "repeat") return TransformKind::REPEAT_WORDS;
    if (name == "generic") return TransformKind::GENERIC_RESPONSE;
    throw InputError("unknown transform: " + name);
}

std::string to_string(TransformKind k) {
    switch (k) {
        case TransformKind::REMOVE_PUNCT: return "remove-punct";
        case TransformKind::REMOVE_STOPWORDS_FULL: return "stopwords-full";
        case TransformKind::REMOVE_STOPWORDS_25: return "stopwords-25";
        case TransformKind::KEEP_NOUN_PRON_VERB: return "keep-npv";
        case TransformKind::REMOVE_NAMED_ENTITIES: return "remove-ne";
        case TransformKind::SYNONYM_REPLACE: return "synonyms";
        case TransformKind::JUMBLE: return "jumble";
        case TransformKind::REVERSE: return "reverse";
        case TransformKind::KEEP_NOUNS_ONLY: return "keep-nouns";
        case TransformKind::REPEAT_WORDS: return "repeat";
        case TransformKind::GENERIC_RESPONSE: return "generic";
    }
    return "?";
}

bool StopwordList::contains(const std::string& tok) const {
    std::string low = tok;
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return words.count(low) > 0;
}

StopwordList top25_stopwords() {
    StopwordList l;
    l.id = StopwordListId::TOP25;
    l.words = {"a",  "an",  "and", "are",  "as",   "at", "be",  "by", "for",
               "from", "has", "he",  "in",   "is",   "it", "its", "of", "on",
               "that", "the", "to",  "was",  "were", "will", "with"};
    return l;
}

StopwordList load_stopword_list(const std::string& path, StopwordListId id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open stopword list: " + path);
    StopwordList l;
    l.id = id;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::transform(line.begin(), line.end(), line.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        l.words.insert(line);
    }
    return l;
}

SynonymLexicon parse_synonym_lexicon(const std::string& bytes) {
    SynonymLexicon lex;
    std::istringstream in(bytes);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("synonym lexicon line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("word") || !j.contains("replacement") ||
            !j["word"].is_string() || !j["replacement"].is_string())
            throw InputError("synonym lexicon line " + std::to_string(line_no) +
                             ": expected {\"word\":..., \"replacement\":...}");
        lex.map[j["word"].get<std::string>()] = j["replacement"].get<std::string>();
    }
    return lex;
}

SynonymLexicon load_synonym_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open synonym lexicon: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_synonym_lexicon(ss.str());
}

std::vector<std::size_t> sample_randomness(TransformKind kind, std::size_t m, std::uint64_t seed,
                                           bool with_replacement) {
    switch (kind) {
        case TransformKind::JUMBLE:
            return seeded_permutation(m, seed);
        case TransformKind::REPEAT_WORDS:
            return with_replacement ? seeded_index_sample_with_replacement(m, m / 2, seed)
                                    : seeded_index_sample(m, m / 2, seed);
        default:
            throw InputError("transform '" + to_string(kind) + "' draws no randomness");
    }
}

namespace {

Utterance from_tokens(std::vector<std::string> tokens) {
    Utterance u;
    u.tokens = std::move(tokens);
    u.raw = u.canonical();
    return u;
}

const AnnotatedUtterance& require_annotation(const Utterance& u, const AnnotatedUtterance* ann,
                                             TransformKind kind) {
    if (!ann)
        throw InputError("transform '" + to_string(kind) + "' requires POS/NER annotations");
    if (ann->tokens != u.tokens)
        throw InputError("transform '" + to_string(kind) +
                         "': annotation tokens do not align with the utterance");
    return *ann;
}

Utterance keep_by_pos(const Utterance& u, const AnnotatedUtterance& ann,
                      std::initializer_list<PosTag> keep) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < u.tokens.size(); ++i)
        if (std::find(keep.begin(), keep.end(), ann.pos_tags[i]) != keep.end())
            out.push_back(u.tokens[i]);
    return from_tokens(std::move(out));
}

void validate_permutation(const std::vector<std::size_t>& perm, std::size_t m) {
    if (perm.size() != m) throw InputError("jumble permutation length != utterance length");
    std::vector<bool> seen(m, false);
    for (std::size_t p : perm) {
        if (p >= m || seen[p]) throw InputError("jumble permutation is not a bijection");
        seen[p] = true;
    }
}

void validate_repeat_indices(const std::vector<std::size_t>& idx, std::size_t m,
                             bool with_replacement) {
    if (idx.size() != m / 2)
        throw InputError("repeat index set must have exactly floor(m/2) members");
    std::vector<bool> seen(m, false);
    for (std::size_t p : idx) {
        if (p >= m) throw InputError("repeat index out of range");
        if (!with_replacement && seen[p]) throw InputError("repeat index set has duplicates");
        seen[p] = true;
    }
}

}  // namespace

Utterance apply_transform(const Utterance& u, const TransformSpec& spec,
                          const AnnotatedUtterance* ann) {
    switch (spec.kind) {
        case TransformKind::REMOVE_PUNCT: {
            std::vector<std::string> out;
            for (const auto& t : u.tokens)
                if (!is_punct_token(t)) out.push_back(t);
            return from_tokens(std::move(out));
        }
        case TransformKind::REMOVE_STOPWORDS_FULL:
        case TransformKind::REMOVE_STOPWORDS_25: {
            if (!spec.stopwords)
                throw InputError("stopword transform requires a stopword list");
            std::vector<std::string> out;
            for (const auto& t : u.tokens)
                if (!spec.stopwords->contains(t)) out.push_back(t);
            return from_tokens(std::move(out));
        }
        case TransformKind::KEEP_NOUN_PRON_VERB: {
            const auto& a = require_annotation(u, ann, spec.kind);
            return keep_by_pos(u, a, {PosTag::NOUN, PosTag::PROPN, PosTag::PRON, PosTag::VERB});
        }
        case TransformKind::KEEP_NOUNS_ONLY: {
            const auto& a = require_annotation(u, ann, spec.kind);
            return keep_by_pos(u, a, {PosTag::NOUN, PosTag::PROPN});
        }
        case TransformKind::REMOVE_NAMED_ENTITIES: {
            const auto& a = require_annotation(u, ann, spec.kind);
            std::vector<std::string> out;
            for (std::size_t i = 0; i < u.tokens.size(); ++i)
                if (a.ner_tags[i] == NerTag::O) out.push_back(u.tokens[i]);
            return from_tokens(std::move(out));
        }
        case TransformKind::SYNONYM_REPLACE: {
            if (!spec.lexicon) throw InputError("synonym transform requires a lexicon");
            // Annotations are optional here; without them no token is treated
            // as a named entity.
            if (ann && ann->tokens != u.tokens)
                throw InputError("synonyms: annotation tokens do not align with the utterance");
            std::vector<std::string> out;
            for (std::size_t i = 0; i < u.tokens.size(); ++i) {
                const std::string& t = u.tokens[i];
                const bool is_ne = ann && ann->ner_tags[i] != NerTag::O;
                const bool is_stop = spec.stopwords && spec.stopwords->contains(t);
                auto it = spec.lexicon->map.find(t);
                if (!is_ne && !is_stop && it != spec.lexicon->map.end())
                    out.push_back(it->second);
                else
                    out.push_back(t);
            }
            return from_tokens(std::move(out));
        }
        case TransformKind::JUMBLE: {
            if (!spec.randomness) throw InputError("jumble requires a permutation");
            if (spec.jumble_fix_punct) {
                std::vector<std::size_t> word_slots;
                for (std::size_t i = 0; i < u.tokens.size(); ++i)
                    if (!is_punct_token(u.tokens[i])) word_slots.push_back(i);
                validate_permutation(*spec.randomness, word_slots.size());
                std::vector<std::string> out = u.tokens;
                for (std::size_t i = 0; i < word_slots.size(); ++i)
                    out[word_slots[i]] = u.tokens[word_slots[(*spec.randomness)[i]]];
                return from_tokens(std::move(out));
            }
            validate_permutation(*spec.randomness, u.tokens.size());
            std::vector<std::string> out(u.tokens.size());
            for (std::size_t i = 0; i < u.tokens.size(); ++i)
                out[i] = u.tokens[(*spec.randomness)[i]];
            return from_tokens(std::move(out));
        }
        case TransformKind::REVERSE: {
            std::vector<std::string> out(u.tokens.rbegin(), u.tokens.rend());
            return from_tokens(std::move(out));
        }
        case TransformKind::REPEAT_WORDS: {
            if (!spec.randomness) throw InputError("repeat requires an index set");
            validate_repeat_indices(*spec.randomness, u.tokens.size(),
                                    spec.repeat_with_replacement);
            // Duplicate each selected token immediately after its original
            // position.
            std::vector<std::size_t> copies(u.tokens.size(), 0);
            for (std::size_t p : *spec.randomness) ++copies[p];
            std::vector<std::string> out;
            out.reserve(u.tokens.size() + spec.randomness->size());
            for (std::size_t i = 0; i < u.tokens.size(); ++i) {
                out.push_back(u.tokens[i]);
                for (std::size_t c = 0; c < copies[i]; ++c) out.push_back(u.tokens[i]);
            }
            return from_tokens(std::move(out));
        }
        case TransformKind::GENERIC_RESPONSE: {
            if (!spec.generic_text) throw InputError("generic transform requires generic_text");
            return *spec.generic_text;
        }
    }
    throw InputError("unknown transform kind");
}

std::vector<SanityProbe> sanity_probe_set(const DialogueTriple& triple,
                                          const std::optional<Utterance>& machine_response) {
    std::vector<SanityProbe> probes;

    SanityProbe ground;
    ground.label = "ground-truth";
    ground.ideal_score = 5.0;
    ground.triple = triple;
    ground.triple.candidate = triple.reference;
    probes.push_back(std::move(ground));

    SanityProbe ctx;
    ctx.label = "context-as-response";
    ctx.ideal_score = 1.0;
    ctx.triple = triple;
    std::vector<std::string> flat;
    for (const auto& turn : triple.context)
        flat.insert(flat.end(), turn.tokens.begin(), turn.tokens.end());
    ctx.triple.candidate.tokens = std::move(flat);
    ctx.triple.candidate.raw = ctx.triple.candidate.canonical();
    probes.push_back(std::move(ctx));

    if (machine_response) {
        SanityProbe machine;
        machine.label = "machine-response";
        machine.ideal_score = 1.0;
        machine.triple = triple;
        machine.triple.candidate = *machine_response;
        probes.push_back(std::move(machine));

        SanityProbe swapped;
        swapped.label = "swapped-reference";
        swapped.ideal_score = 5.0;
        swapped.triple = triple;
        swapped.triple.reference = *machine_response;
        swapped.triple.candidate = triple.reference;
        probes.push_back(std::move(swapped));
    }
    return probes;
}

std::vector<Utterance> builtin_generic_responses() {
    return {tokenize("i'm sorry, can you repeat?"), tokenize("i will do"),
            tokenize("fantastic! how are you?")};
}

}  // namespace dialeval
