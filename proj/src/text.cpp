#include "dialeval/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dialeval {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string lowercase_ascii(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

bool is_punct_char(char c) {
    switch (c) {
        case '.': case ',': case '!': case '?': case ';':
        case ':': case '"': case '\'': case '(': case ')':
            return true;
        default:
            return false;
    }
}

bool is_punct_token(const std::string& tok) {
    if (tok.empty()) return false;
    return std::all_of(tok.begin(), tok.end(), [](char c) { return is_punct_char(c); });
}

std::string Utterance::canonical() const {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

Utterance tokenize(const std::string& text) {
    Utterance u;
    u.raw = text;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) {
            std::string chunk = lowercase_ascii(text.substr(i, j - i));
            // Peel punctuation off both ends into standalone tokens.
            std::size_t lo = 0, hi = chunk.size();
            while (lo < hi && is_punct_char(chunk[lo])) ++lo;
            while (hi > lo && is_punct_char(chunk[hi - 1])) --hi;
            for (std::size_t k = 0; k < lo; ++k) u.tokens.push_back(std::string(1, chunk[k]));
            if (hi > lo) u.tokens.push_back(chunk.substr(lo, hi - lo));
            for (std::size_t k = hi; k < chunk.size(); ++k)
                u.tokens.push_back(std::string(1, chunk[k]));
        }
        i = j;
    }
    return u;
}

PosTag parse_pos_tag(const std::string& s) {
    if (s == "NOUN") return PosTag::NOUN;
    if (s == "PROPN") return PosTag::PROPN;
    if (s == "PRON") return PosTag::PRON;
    if (s == "VERB") return PosTag::VERB;
    if (s == "ADJ") return PosTag::ADJ;
    if (s == "ADV") return PosTag::ADV;
    if (s == "DET") return PosTag::DET;
    if (s == "ADP") return PosTag::ADP;
    if (s == "PUNCT") return PosTag::PUNCT;
    if (s == "OTHER") return PosTag::OTHER;
    throw InputError("unknown POS tag: " + s);
}

NerTag parse_ner_tag(const std::string& s) {
    if (s == "PER") return NerTag::PER;
    if (s == "LOC") return NerTag::LOC;
    if (s == "ORG") return NerTag::ORG;
    if (s == "MISC") return NerTag::MISC;
    if (s == "O") return NerTag::O;
    throw InputError("unknown NER tag: " + s);
}

std::string to_string(PosTag t) {
    switch (t) {
        case PosTag::NOUN: return "NOUN";
        case PosTag::PROPN: return "PROPN";
        case PosTag::PRON: return "PRON";
        case PosTag::VERB: return "VERB";
        case PosTag::ADJ: return "ADJ";
        case PosTag::ADV: return "ADV";
        case PosTag::DET: return "DET";
        case PosTag::ADP: return "ADP";
        case PosTag::PUNCT: return "PUNCT";
        case PosTag::OTHER: return "OTHER";
    }
    return "OTHER";
}

std::string to_string(NerTag t) {
    switch (t) {
        case NerTag::PER: return "PER";
        case NerTag::LOC: return "LOC";
        case NerTag::ORG: return "ORG";
        case NerTag::MISC: return "MISC";
        case NerTag::O: return "O";
    }
    return "O";
}

std::vector<DialogueTriple> parse_corpus(const std::string& bytes) {
    std::vector<DialogueTriple> out;
    std::istringstream in(bytes);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw InputError("corpus line " + std::to_string(line_no) + ": " + e.what());
        }
        const auto fail = [&](const std::string& field, const std::string& why) -> void {
            throw InputError("corpus line " + std::to_string(line_no) + ", field '" + field +
                             "': " + why);
        };
        if (!j.is_object()) fail("record", "expected a JSON object");

        DialogueTriple t;
        t.line = line_no;
        if (!j.contains("context") || !j["context"].is_array() || j["context"].empty())
            fail("context", "required non-empty array of strings");
        for (const auto& turn : j["context"]) {
            if (!turn.is_string()) fail("context", "turns must be strings");
            t.context.push_back(tokenize(turn.get<std::string>()));
        }
        if (!j.contains("reference") || !j["reference"].is_string())
            fail("reference", "required string");
        t.reference = tokenize(j["reference"].get<std::string>());
        if (t.reference.empty()) fail("reference", "must tokenize to at least one token");
        if (j.contains("candidate")) {
            if (!j["candidate"].is_string()) fail("candidate", "must be a string");
            t.candidate = tokenize(j["candidate"].get<std::string>());
        }
        if (j.contains("human_score") && !j["human_score"].is_null()) {
            if (!j["human_score"].is_number()) fail("human_score", "must be a number");
            const double h = j["human_score"].get<double>();
            if (h < 1.0 || h > 5.0) fail("human_score", "must lie in [1,5]");
            t.human_score = h;
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<DialogueTriple> load_corpus(const std::string& path, CorpusFormat format) {
    (void)format;  // jsonl is the only corpus layout
    return parse_corpus(read_file(path));
}

std::string serialize_corpus(const std::vector<DialogueTriple>& triples) {
    std::string out;
    for (const auto& t : triples) {
        nlohmann::ordered_json j;
        j["context"] = json::array();
        for (const auto& turn : t.context) j["context"].push_back(turn.raw);
        j["reference"] = t.reference.raw;
        if (!t.candidate.empty() || !t.candidate.raw.empty()) j["candidate"] = t.candidate.raw;
        if (t.human_score) j["human_score"] = *t.human_score;
        out += j.dump();
        out += '\n';
    }
    return out;
}

namespace {

AnnotatedUtterance finish_block(std::vector<std::array<std::string, 3>>& rows) {
    AnnotatedUtterance a;
    for (auto& r : rows) {
        a.tokens.push_back(r[0]);
        a.pos_tags.push_back(parse_pos_tag(r[1]));
        a.ner_tags.push_back(parse_ner_tag(r[2]));
    }
    rows.clear();
    return a;
}

std::array<std::string, 3> split_tagged_line(const std::string& line, std::size_t line_no) {
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos)
        throw InputError("annotation line " + std::to_string(line_no) +
                         ": expected token<TAB>POS<TAB>NER");
    std::string ner = line.substr(t2 + 1);
    if (!ner.empty() && ner.back() == '\r') ner.pop_back();
    return {line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), ner};
}

}  // namespace

std::vector<AnnotatedUtterance> parse_annotations(const std::string& bytes) {
    std::vector<AnnotatedUtterance> out;
    std::vector<std::array<std::string, 3>> rows;
    std::istringstream in(bytes);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (!rows.empty()) out.push_back(finish_block(rows));
            continue;
        }
        try {
            rows.push_back(split_tagged_line(line, line_no));
            parse_pos_tag(rows.back()[1]);
            parse_ner_tag(rows.back()[2]);
        } catch (const InputError& e) {
            throw InputError("annotation line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!rows.empty()) out.push_back(finish_block(rows));
    return out;
}

std::vector<AnnotatedUtterance> load_annotations(const std::string& path) {
    return parse_annotations(read_file(path));
}

TagLexicon load_tag_lexicon(const std::string& path) {
    TagLexicon lex;
    const std::string bytes = read_file(path);
    std::istringstream in(bytes);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cols = split_tagged_line(line, line_no);
        lex.entries[cols[0]] = {parse_pos_tag(cols[1]), parse_ner_tag(cols[2])};
    }
    return lex;
}

AnnotatedUtterance annotate_with_lexicon(const Utterance& u, const TagLexicon& lex) {
    AnnotatedUtterance a;
    a.tokens = u.tokens;
    for (const auto& tok : u.tokens) {
        auto it = lex.entries.find(tok);
        if (it != lex.entries.end()) {
            a.pos_tags.push_back(it->second.first);
            a.ner_tags.push_back(it->second.second);
        } else if (is_punct_token(tok)) {
            a.pos_tags.push_back(PosTag::PUNCT);
            a.ner_tags.push_back(NerTag::O);
        } else {
            a.pos_tags.push_back(PosTag::OTHER);
            a.ner_tags.push_back(NerTag::O);
        }
    }
    return a;
}

}  // namespace dialeval
