#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dialeval/attack.hpp"
#include "dialeval/perturb.hpp"
#include "dialeval/scorer.hpp"
#include "dialeval/stats.hpp"

namespace dialeval {

enum class BaseField { reference, candidate };

struct ReportMetadata {
    std::string corpus_path;
    std::string scorer_file;
    std::string encoder;
    std::uint64_t seed = 0;
    // Left empty unless the caller supplies one, so identical runs emit
    // identical bytes.
    std::string timestamp;
};

struct BatteryRow {
    std::string label;
    double mean = 0.0;
    double sd = 0.0;
    double pct_within_1sd = 0.0;
    double pearson = 0.0;   // vs the original series; NaN when undefined
    double spearman = 0.0;
    double pct_better = 0.0;
    double p_value = 0.0;
};

struct BatteryReport {
    std::vector<BatteryRow> rows;  // "original" first, then one row per variant
    ReportMetadata meta;
};

struct BatteryOptions {
    std::uint64_t master_seed = 0;
    BaseField base = BaseField::reference;
    const StopwordList* full_stopwords = nullptr;  // stopwords-full + synonyms
    const SynonymLexicon* synonyms = nullptr;      // synonyms
    std::size_t p_value_iterations = 999;
    unsigned threads = 1;
    bool jumble_fix_punct = false;
    bool repeat_with_replacement = false;
};

struct ProbeRow {
    std::string label;
    double ideal = 0.0;
    double mean = 0.0;
    double sd = 0.0;
};

struct ProbeReport {
    std::vector<ProbeRow> rows;
    ReportMetadata meta;
};

struct AttackCampaignRow {
    std::size_t record = 0;
    double original = 0.0;
    double ann_best = 0.0;
    std::string ann_text;
    double brute_best = 0.0;
    std::string brute_text;
};

struct AttackAggregate {
    double mean = 0.0;
    double sd = 0.0;
    double max = 0.0;
    double min = 0.0;
};

struct AttackReport {
    std::vector<AttackCampaignRow> rows;
    AttackAggregate original;
    AttackAggregate ann;
    AttackAggregate brute;
    double mean_increment_ann = 0.0;    // mean(ann - original)
    double mean_increment_brute = 0.0;  // mean(brute - original)
    ReportMetadata meta;
};

struct AttackCampaignOptions {
    double target_lo = 4.6;
    double target_hi = 4.9;
    std::size_t k = 400;
    std::size_t search_budget = 0;  // 0 = k * tree count
    BaseField base = BaseField::reference;
    unsigned threads = 1;
};

enum class ReportFormat { json, tsv, markdown };
ReportFormat parse_report_format(const std::string& name);

// Scores the original base utterance and every requested variant of it per
// record, then aggregates. Per-record randomness is derived from
// (master_seed, record index, transform kind id). Statistics whose
// preconditions fail on tiny or constant series are reported as NaN; the
// original row's correlations are 1 by definition. Deterministic for a given
// option set, independent of the thread count.
BatteryReport run_battery(const std::vector<DialogueTriple>& corpus,
                          const std::vector<AnnotatedUtterance>* annotations,
                          const ScorerParams& params, const EmbeddingTable& table, EncoderSpec enc,
                          const std::vector<TransformKind>& kinds, const BatteryOptions& opts);

// One row per sanity probe, aggregated over the corpus, with the fixed ideal
// score annotation per probe. Machine responses (when given) must align with
// the corpus one-to-one.
ProbeReport run_sanity_probes(const std::vector<DialogueTriple>& corpus,
                              const std::optional<std::vector<Utterance>>& machine_responses,
                              const ScorerParams& params, const EmbeddingTable& table,
                              EncoderSpec enc);

// Per record: closed-form attack at the band midpoint realized through the
// index, plus the brute-force exact search.
AttackReport run_attack_campaign(const std::vector<DialogueTriple>& corpus,
                                 const ResponseDatabase& db, const RpForestIndex& index,
                                 const ScorerParams& params, const EmbeddingTable& table,
                                 EncoderSpec enc, const AttackCampaignOptions& opts);

// Stable field order in every format. TSV carries full precision; markdown
// renders display tables (battery headers exactly
// Variant | mean | SD | %1SD | Pearson | Spearman | %better).
std::string emit_report(const BatteryReport& report, ReportFormat format);
std::string emit_report(const ProbeReport& report, ReportFormat format);
std::string emit_report(const AttackReport& report, ReportFormat format);

// Re-render a JSON report produced by emit_report (the "type" field selects
// the schema).
std::string convert_report_json(const std::string& json_bytes, ReportFormat format);

// Battery TSV parser (used by the round-trip checks and the report tool).
std::vector<BatteryRow> parse_battery_tsv(const std::string& bytes);

// Plain text, one machine response per line, aligned with the corpus.
std::vector<Utterance> load_machine_responses(const std::string& path);

}  // namespace dialeval
