#include "renner/table_io.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "renner/decomposition.hpp"
#include "renner/errors.hpp"
#include "renner/hecke_table.hpp"

namespace renner {

namespace {

bool is_hecke_kind(const std::string& table_kind) {
  return table_kind == "Mq" || table_kind == "Yq" || table_kind == "Aq";
}

bool is_classical_kind(const std::string& table_kind) {
  return table_kind == "M" || table_kind == "A" || table_kind == "B" ||
         table_kind == "Y";
}

void check_size(MonoidKind kind, int n, const std::string& table_kind) {
  int limit;
  if (is_hecke_kind(table_kind))
    limit = kind == MonoidKind::Rook ? 4 : 3;
  else
    limit = kind == MonoidKind::Rook ? 6 : 4;
  if (n > limit)
    throw UnsupportedSize(kind_to_string(kind) + " " + table_kind +
                          " tables are supported up to n=" +
                          std::to_string(limit) + ", got n=" + std::to_string(n));
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

// Wraps multi-digit exponents in braces: q^12 -> q^{12}.
std::string latex_value(const std::string& value) {
  std::string out;
  for (size_t i = 0; i < value.size(); ++i) {
    if (value[i] != '^') {
      out += value[i];
      continue;
    }
    size_t j = i + 1;
    while (j < value.size() && std::isdigit(static_cast<unsigned char>(value[j])))
      ++j;
    out += "^{" + value.substr(i + 1, j - i - 1) + "}";
    i = j - 1;
  }
  return out;
}

std::string table_display_name(const std::string& table_kind) {
  if (table_kind == "Mq") return "M_q";
  if (table_kind == "Yq") return "Y_q";
  if (table_kind == "Aq") return "A_q";
  return table_kind;
}

std::string monoid_display_name(MonoidKind kind, int n) {
  if (kind == MonoidKind::Rook) return "R_{" + std::to_string(n) + "}";
  return "RSp_{" + std::to_string(2 * n) + "}";
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_whole_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptCache("cannot read cache file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Throws CorruptCache when the file content does not describe the requested
// table; returns an empty optional-style flag via bool for version skew.
bool cached_artifact_matches(const TableArtifact& artifact, MonoidKind kind,
                             int n, const std::string& table_kind) {
  if (artifact.order_version != kOrderVersion ||
      artifact.tool_version != kToolVersion)
    return false;  // stale, recompute without complaint
  if (artifact.kind != kind || artifact.n != n ||
      artifact.table_kind != table_kind)
    throw CorruptCache("cache entry holds a different table");
  const QnOrder order = enumerate_qn(kind, n);
  if (artifact.table.row_labels() != order.labels ||
      artifact.table.col_labels() != order.labels)
    throw CorruptCache("cache entry has unexpected labels");
  return true;
}

}  // namespace

TableArtifact compute_table(MonoidKind kind, int n, const std::string& table_kind,
                            bool allow_large) {
  if (!is_classical_kind(table_kind) && !is_hecke_kind(table_kind))
    throw ParseError("unknown table kind '" + table_kind +
                     "' (expected M, A, B, Y, Mq, Yq or Aq)");
  if (!allow_large) check_size(kind, n, table_kind);

  TableArtifact artifact;
  artifact.kind = kind;
  artifact.n = n;
  artifact.table_kind = table_kind;
  if (table_kind == "Mq") {
    artifact.table = hecke_monoid_table(kind, n).table;
  } else if (table_kind == "Yq") {
    artifact.table = assemble_Yq(kind, n).table;
  } else if (table_kind == "Aq") {
    artifact.table = hecke_a_matrix(kind, n).table;
  } else {
    const SolomonDecomposition dec = monoid_table(kind, n);
    if (table_kind == "M")
      artifact.table = dec.M;
    else if (table_kind == "A")
      artifact.table = dec.A;
    else if (table_kind == "B")
      artifact.table = dec.B;
    else
      artifact.table = dec.Y;
  }
  return artifact;
}

std::string to_json(const TableArtifact& artifact) {
  nlohmann::ordered_json j;
  j["monoidKind"] = kind_to_string(artifact.kind);
  j["n"] = artifact.n;
  j["tableKind"] = artifact.table_kind;
  j["orderVersion"] = artifact.order_version;
  j["toolVersion"] = artifact.tool_version;
  auto labels_json = [](const std::vector<MunnIndex>& labels) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const MunnIndex& m : labels) arr.push_back(m.to_string());
    return arr;
  };
  j["rowLabels"] = labels_json(artifact.table.row_labels());
  j["colLabels"] = labels_json(artifact.table.col_labels());
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int i = 0; i < artifact.table.num_rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < artifact.table.num_cols(); ++k)
      row.push_back(artifact.table.at(i, k).to_string());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

TableArtifact artifact_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid table JSON: ") + e.what());
  }
  try {
    TableArtifact artifact;
    artifact.kind = kind_from_string(j.at("monoidKind").get<std::string>());
    artifact.n = j.at("n").get<int>();
    artifact.table_kind = j.at("tableKind").get<std::string>();
    artifact.order_version = j.at("orderVersion").get<std::string>();
    artifact.tool_version = j.at("toolVersion").get<std::string>();
    std::vector<MunnIndex> rows, cols;
    for (const auto& item : j.at("rowLabels"))
      rows.push_back(MunnIndex::parse(item.get<std::string>()));
    for (const auto& item : j.at("colLabels"))
      cols.push_back(MunnIndex::parse(item.get<std::string>()));
    LabeledMatrix table(rows, cols);
    const auto& entries = j.at("entries");
    if (entries.size() != rows.size())
      throw ParseError("entry row count does not match rowLabels");
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& row = entries.at(i);
      if (row.size() != cols.size())
        throw ParseError("entry column count does not match colLabels");
      for (size_t k = 0; k < cols.size(); ++k)
        table.at(static_cast<int>(i), static_cast<int>(k)) =
            QRat::parse(row.at(k).get<std::string>());
    }
    artifact.table = std::move(table);
    return artifact;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table JSON missing or mistyped field: ") +
                     e.what());
  }
}

std::string render_pretty(const TableArtifact& artifact) {
  const LabeledMatrix& t = artifact.table;
  std::vector<std::string> row_names, col_names;
  for (const MunnIndex& m : t.row_labels()) row_names.push_back(m.to_string());
  for (const MunnIndex& m : t.col_labels()) col_names.push_back(m.to_string());

  size_t label_width = 0;
  for (const std::string& s : row_names) label_width = std::max(label_width, s.size());
  std::vector<size_t> widths(col_names.size());
  for (size_t k = 0; k < col_names.size(); ++k) widths[k] = col_names[k].size();
  std::vector<std::vector<std::string>> cells(row_names.size());
  for (size_t i = 0; i < row_names.size(); ++i)
    for (size_t k = 0; k < col_names.size(); ++k) {
      cells[i].push_back(t.at(static_cast<int>(i), static_cast<int>(k)).to_string());
      widths[k] = std::max(widths[k], cells[i][k].size());
    }

  std::ostringstream os;
  os << table_display_name(artifact.table_kind) << "  "
     << kind_to_string(artifact.kind) << "  n=" << artifact.n << "  ("
     << artifact.order_version << ")\n\n";
  os << std::string(label_width, ' ');
  for (size_t k = 0; k < col_names.size(); ++k)
    os << "  " << std::string(widths[k] - col_names[k].size(), ' ') << col_names[k];
  os << "\n";
  for (size_t i = 0; i < row_names.size(); ++i) {
    os << row_names[i] << std::string(label_width - row_names[i].size(), ' ');
    for (size_t k = 0; k < col_names.size(); ++k)
      os << "  " << std::string(widths[k] - cells[i][k].size(), ' ') << cells[i][k];
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const TableArtifact& artifact) {
  const LabeledMatrix& t = artifact.table;
  std::ostringstream os;
  os << csv_quote("");
  for (const MunnIndex& m : t.col_labels()) os << "," << csv_quote(m.to_string());
  os << "\n";
  for (int i = 0; i < t.num_rows(); ++i) {
    os << csv_quote(t.row_labels()[i].to_string());
    for (int k = 0; k < t.num_cols(); ++k)
      os << "," << csv_quote(t.at(i, k).to_string());
    os << "\n";
  }
  return os.str();
}

std::string render_latex(const TableArtifact& artifact) {
  const LabeledMatrix& t = artifact.table;
  std::ostringstream os;
  os << "\\[\n"
     << table_display_name(artifact.table_kind) << "("
     << monoid_display_name(artifact.kind, artifact.n)
     << ") = \\kbordermatrix{\n  r_\\mu \\backslash \\chi_\\lambda";
  for (const MunnIndex& m : t.col_labels())
    os << " & " << latex_value(m.to_string());
  os << " \\\\\n";
  for (int i = 0; i < t.num_rows(); ++i) {
    os << "  " << latex_value(t.row_labels()[i].to_string());
    for (int k = 0; k < t.num_cols(); ++k)
      os << " & " << latex_value(t.at(i, k).to_string());
    os << (i + 1 < t.num_rows() ? " \\\\\n" : "\n");
  }
  os << "}\n\\]\n";
  return os.str();
}

std::vector<std::string> table_differences(const LabeledMatrix& got,
                                           const LabeledMatrix& want) {
  std::vector<std::string> diffs;
  auto label_strings = [](const std::vector<MunnIndex>& labels) {
    std::string s;
    for (const MunnIndex& m : labels) s += m.to_string() + " ";
    return s;
  };
  if (got.row_labels() != want.row_labels()) {
    diffs.push_back("row labels differ: got " + label_strings(got.row_labels()) +
                    "want " + label_strings(want.row_labels()));
    return diffs;
  }
  if (got.col_labels() != want.col_labels()) {
    diffs.push_back("column labels differ: got " +
                    label_strings(got.col_labels()) + "want " +
                    label_strings(want.col_labels()));
    return diffs;
  }
  for (int i = 0; i < got.num_rows(); ++i)
    for (int k = 0; k < got.num_cols(); ++k)
      if (got.at(i, k) != want.at(i, k))
        diffs.push_back("(" + got.row_labels()[i].to_string() + ", " +
                        got.col_labels()[k].to_string() + "): got " +
                        got.at(i, k).to_string() + ", want " +
                        want.at(i, k).to_string());
  return diffs;
}

std::string cache_directory(const CacheSettings& settings) {
  if (!settings.dir.empty()) return settings.dir;
  if (const char* env = std::getenv("RENNER_CACHE_DIR"))
    if (*env) return env;
  return ".renner-cache";
}

std::string cache_file_name(MonoidKind kind, int n, const std::string& table_kind) {
  const std::string key = kind_to_string(kind) + "|" + std::to_string(n) + "|" +
                          table_kind + "|" + kOrderVersion + "|" + kToolVersion;
  std::ostringstream os;
  os << "table-" << std::hex << fnv1a64(key) << ".json";
  return os.str();
}

TableArtifact load_or_compute(MonoidKind kind, int n, const std::string& table_kind,
                              const CacheSettings& settings, bool allow_large,
                              std::string* warning) {
  if (!settings.enabled) return compute_table(kind, n, table_kind, allow_large);

  namespace fs = std::filesystem;
  const fs::path dir = cache_directory(settings);
  const fs::path path = dir / cache_file_name(kind, n, table_kind);

  std::error_code ec;
  if (fs::exists(path, ec)) {
    try {
      TableArtifact cached = artifact_from_json(read_whole_file(path.string()));
      if (cached_artifact_matches(cached, kind, n, table_kind)) return cached;
      // Version skew: fall through and refresh the entry quietly.
    } catch (const std::runtime_error& e) {
      if (warning)
        *warning = "discarding corrupt cache entry " + path.string() + ": " +
                   e.what();
    }
  }

  TableArtifact fresh = compute_table(kind, n, table_kind, allow_large);
  try {
    fs::create_directories(dir);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << to_json(fresh);
      if (!out) throw std::runtime_error("short write");
    }
    fs::rename(tmp, path);
  } catch (const std::exception& e) {
    if (warning) {
      if (!warning->empty()) *warning += "; ";
      *warning += std::string("cache write failed: ") + e.what();
    }
  }
  return fresh;
}

}  // namespace renner
