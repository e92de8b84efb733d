#ifndef RENNER_TABLE_IO_HPP
#define RENNER_TABLE_IO_HPP

#include <string>
#include <vector>

#include "renner/labeled_matrix.hpp"
#include "renner/partition.hpp"

namespace renner {

inline constexpr const char* kToolVersion = "0.1.0";

// A computed table plus the metadata needed to reproduce and cache it.
struct TableArtifact {
  MonoidKind kind = MonoidKind::Symplectic;
  int n = 0;
  std::string table_kind;  // one of M, A, B, Y, Mq, Yq, Aq
  std::string order_version = kOrderVersion;
  std::string tool_version = kToolVersion;
  LabeledMatrix table;
};

// Computes the requested table.  Sizes past the supported CLI range throw
// UnsupportedSize unless allow_large is set (the per-monoid hard limits in
// MonoidContext still apply).
TableArtifact compute_table(MonoidKind kind, int n, const std::string& table_kind,
                            bool allow_large = false);

// JSON serialization.  to_json output is deterministic; from_json accepts
// exactly that shape and throws ParseError otherwise.
std::string to_json(const TableArtifact& artifact);
TableArtifact artifact_from_json(const std::string& text);

// Text renderings of a table artifact.
std::string render_pretty(const TableArtifact& artifact);
std::string render_csv(const TableArtifact& artifact);
std::string render_latex(const TableArtifact& artifact);

// Entrywise comparison.  Returns human-readable mismatch descriptions
// (empty when the two matrices agree, labels included).
std::vector<std::string> table_differences(const LabeledMatrix& got,
                                           const LabeledMatrix& want);

// On-disk cache of table artifacts, keyed by the artifact metadata.
struct CacheSettings {
  bool enabled = true;
  std::string dir;  // empty: $RENNER_CACHE_DIR, else ".renner-cache"
};

std::string cache_directory(const CacheSettings& settings);
std::string cache_file_name(MonoidKind kind, int n, const std::string& table_kind);

// Returns the cached artifact when present and valid; otherwise computes the
// table and stores it (write-to-temp then rename).  A cache entry whose
// orderVersion or toolVersion differs is silently recomputed; an unreadable
// or inconsistent entry is recomputed and reported through *warning.
TableArtifact load_or_compute(MonoidKind kind, int n, const std::string& table_kind,
                              const CacheSettings& settings,
                              bool allow_large = false,
                              std::string* warning = nullptr);

}  // namespace renner

#endif  // RENNER_TABLE_IO_HPP
