// classify.hpp
// Bounded enumeration over the eight structural cases of defining matrices
// for terminal Q-factorial Fano threefolds of Picard number one with 2-torus
// action, the per-candidate filter pipeline, and the reference-table diff.
//
// The search-space bounds are transcribed verbatim into one generator record
// per sub-case (see bound_records() and the generator functions in
// classify.cpp); candidates are exactly the integer tuples inside the
// recorded windows, assembled into defining data. Four of the eight cases
// admit no terminal varieties and carry empty generators.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antican/invariants.hpp"
#include "antican/rap.hpp"

namespace antican {

enum class CaseId { i, ii, iii, iv, v, vi, vii, viii };

std::string case_name(CaseId c);
std::optional<CaseId> case_from_name(const std::string& s);

struct CaseSpec {
  CaseId id{};
};

struct BoundRecord {
  std::string name;      // e.g. "i.unit_exponents"
  CaseId case_id{};
  bool excluded_by_analysis = false;  // cases with no terminal varieties
  std::vector<std::int64_t> shards;   // outer loop values; one shard each
};

const std::vector<BoundRecord>& bound_records();

using CandidateSink = std::function<void(DefiningData&&)>;

// Emits the raw candidate stream of one shard (no pruning beyond the
// recorded inequality windows).
void generate_shard(const std::string& record_name, std::int64_t shard, const CandidateSink& sink);

// Raw candidate stream of a whole case.
void enumerate_case(const CaseSpec& spec, const CandidateSink& sink);

struct GateStats {
  std::uint64_t generated = 0;
  std::uint64_t invalid = 0;        // shape, primitivity, duplicate columns, rank
  std::uint64_t not_irredundant = 0;
  std::uint64_t not_rank_one = 0;
  std::uint64_t not_fano = 0;       // includes non-positive weight systems
  std::uint64_t not_qfactorial = 0;
  std::uint64_t not_log_terminal = 0;
  std::uint64_t not_terminal = 0;
  std::uint64_t emitted = 0;

  GateStats& operator+=(const GateStats& o);
};

struct ClassRow {
  DefiningData data;  // normalized representative
  InvariantSet inv;
  CoxPresentation presentation;
  std::optional<int> table_no;  // filled by diff_table against a reference
};

// Runs the pipeline on one candidate: validity, irredundancy, free rank one,
// Fano, Q-factorial, log terminal (ell gate), terminal (lattice points);
// returns the normalized survivor or nothing. Cheap gates run first.
std::optional<DefiningData> filter_pipeline(const DefiningData& candidate, GateStats& stats);

struct RunConfig {
  std::vector<CaseId> cases{CaseId::i, CaseId::ii, CaseId::iii, CaseId::iv,
                            CaseId::v,  CaseId::vi, CaseId::vii, CaseId::viii};
  int workers = 0;                 // 0 = hardware concurrency / env override
  std::string checkpoint_dir;     // empty = no checkpointing
};

struct RunResult {
  std::vector<ClassRow> rows;      // deduplicated, sorted by distinctness key
  GateStats stats;
  std::map<std::string, GateStats> per_record;
};

// Deterministic result regardless of worker count; resumable when a
// checkpoint directory is given. Throws CheckpointCorrupt on unreadable
// checkpoint files.
RunResult run_classification(const RunConfig& cfg);

// ---- reference table ----

struct TableRow {
  int no = 0;
  std::string relations;                        // display form
  std::vector<std::vector<Int>> rel_exponents;  // sorted tuples, sorted
  int generators = 0;
  int m = 0;
  int lambda_count = 0;
  ClassGroup cl;
  std::vector<KClass> degrees;  // generator order as printed
  Rat antican_cube;
  Int gorenstein_index;
  std::string key() const;
};

// The embedded copy of the 40-row reference table.
const std::vector<TableRow>& reference_table();

// Parse/serialize the reference-table schema (JSON).
std::vector<TableRow> parse_table(const std::string& json_text);  // throws SchemaMismatch
std::string serialize_table(const std::vector<TableRow>& rows);

struct RowDiff {
  int table_no = 0;
  bool matched = false;
  std::vector<std::string> field_diffs;  // filled for near-misses
};

struct DiffReport {
  std::vector<RowDiff> per_row;
  int matched = 0;
  int missing = 0;
  int extra = 0;  // result rows matching no table row
  std::string summary() const;
};

// Pairs result rows with table rows by distinctness key; near-misses (same
// class group, degrees and exponents, different numeric invariants) are
// reported with field-level diffs. Fills table_no on matched rows.
DiffReport diff_table(std::vector<ClassRow>& result, const std::vector<TableRow>& expected);

// Serialization of classification output.
std::string rows_to_json(const std::vector<ClassRow>& rows);
std::string rows_to_csv(const std::vector<ClassRow>& rows);
std::string stats_to_json(const RunResult& r);

}  // namespace antican
