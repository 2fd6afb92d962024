#include "dialeval/embed.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dialeval {

Pooling parse_pooling(const std::string& name) {
    if (name == "mean") return Pooling::MEAN;
    if (name == "sum") return Pooling::SUM;
    if (name == "extrema") return Pooling::EXTREMA;
    throw InputError("unknown encoder pooling: " + name);
}

std::string to_string(Pooling p) {
    switch (p) {
        case Pooling::MEAN: return "mean";
        case Pooling::SUM: return "sum";
        case Pooling::EXTREMA: return "extrema";
    }
    return "mean";
}

EmbeddingTable parse_embedding_table(const std::string& bytes, std::vector<std::string>* warnings) {
    EmbeddingTable table;
    std::istringstream in(bytes);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string token;
        ls >> token;
        Vec v;
        std::string comp;
        while (ls >> comp) {
            try {
                std::size_t used = 0;
                const double x = std::stod(comp, &used);
                if (used != comp.size()) throw std::invalid_argument(comp);
                v.push_back(x);
            } catch (const std::exception&) {
                throw InputError("embedding line " + std::to_string(line_no) +
                                 ": non-numeric component '" + comp + "'");
            }
        }
        if (v.empty())
            throw InputError("embedding line " + std::to_string(line_no) + ": no components");
        if (table.dimension == 0) {
            table.dimension = v.size();
        } else if (v.size() != table.dimension) {
            throw InputError("embedding line " + std::to_string(line_no) + ": dimension " +
                             std::to_string(v.size()) + " != " + std::to_string(table.dimension));
        }
        if (table.entries.count(token) && warnings)
            warnings->push_back("duplicate token '" + token + "' at line " +
                                std::to_string(line_no) + "; last occurrence wins");
        table.entries[token] = std::move(v);
    }
    if (table.dimension == 0)
        throw InputError("embedding file is empty; dimension undeterminable");
    return table;
}

EmbeddingTable load_embedding_table(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open embedding file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_embedding_table(ss.str(), warnings);
}

SentenceEmbedding encode(const Utterance& u, const EmbeddingTable& table, EncoderSpec spec) {
    // Canonical (sorted) token order makes the accumulation independent of
    // word order, bit for bit.
    std::vector<std::string> toks = u.tokens;
    std::sort(toks.begin(), toks.end());

    SentenceEmbedding out;
    out.vector.assign(table.dimension, 0.0);
    std::size_t found = 0;
    for (const auto& tok : toks) {
        const Vec* v = table.find(tok);
        if (!v) continue;
        ++found;
        switch (spec.pooling) {
            case Pooling::MEAN:
            case Pooling::SUM:
                for (std::size_t i = 0; i < table.dimension; ++i) out.vector[i] += (*v)[i];
                break;
            case Pooling::EXTREMA:
                if (found == 1) {
                    out.vector = *v;
                } else {
                    for (std::size_t i = 0; i < table.dimension; ++i)
                        if (std::fabs((*v)[i]) > std::fabs(out.vector[i])) out.vector[i] = (*v)[i];
                }
                break;
        }
    }
    if (found == 0) {
        out.vector.assign(table.dimension, 0.0);
        out.empty_flag = true;
        return out;
    }
    if (spec.pooling == Pooling::MEAN)
        for (double& x : out.vector) x /= static_cast<double>(found);
    return out;
}

SentenceEmbedding encode_context(const std::vector<Utterance>& turns, const EmbeddingTable& table,
                                 EncoderSpec spec) {
    if (turns.empty()) throw InputError("encode_context requires at least one turn");
    Utterance flat;
    for (const auto& t : turns)
        flat.tokens.insert(flat.tokens.end(), t.tokens.begin(), t.tokens.end());
    return encode(flat, table, spec);
}

double embedding_average_similarity(const Utterance& a, const Utterance& b,
                                    const EmbeddingTable& table) {
    const SentenceEmbedding ea = encode(a, table, {Pooling::MEAN});
    const SentenceEmbedding eb = encode(b, table, {Pooling::MEAN});
    if (ea.empty_flag || eb.empty_flag)
        throw NumericError("embedding average undefined: utterance has no in-vocabulary token");
    return cosine(ea.vector, eb.vector);
}

namespace {

std::vector<const Vec*> in_vocab_vectors(const Utterance& u, const EmbeddingTable& table) {
    std::vector<const Vec*> vs;
    for (const auto& tok : u.tokens)
        if (const Vec* v = table.find(tok)) vs.push_back(v);
    return vs;
}

double directional_greedy(const std::vector<const Vec*>& from, const std::vector<const Vec*>& to) {
    double total = 0.0;
    for (const Vec* f : from) {
        double best = -1.0;
        for (const Vec* t : to) best = std::max(best, cosine(*f, *t));
        total += best;
    }
    return total / static_cast<double>(from.size());
}

}  // namespace

double greedy_match_similarity(const Utterance& a, const Utterance& b,
                               const EmbeddingTable& table) {
    const auto va = in_vocab_vectors(a, table);
    const auto vb = in_vocab_vectors(b, table);
    if (va.empty() || vb.empty())
        throw NumericError("greedy match undefined: utterance has no in-vocabulary token");
    return 0.5 * (directional_greedy(va, vb) + directional_greedy(vb, va));
}

double extrema_similarity(const Utterance& a, const Utterance& b, const EmbeddingTable& table) {
    const SentenceEmbedding ea = encode(a, table, {Pooling::EXTREMA});
    const SentenceEmbedding eb = encode(b, table, {Pooling::EXTREMA});
    if (ea.empty_flag || eb.empty_flag)
        throw NumericError("extrema similarity undefined: utterance has no in-vocabulary token");
    return cosine(ea.vector, eb.vector);
}

}  // namespace dialeval
