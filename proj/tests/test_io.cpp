// Tests for table serialization, text renderings, entrywise comparison,
// and the on-disk artifact cache.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "renner/decomposition.hpp"
#include "renner/errors.hpp"
#include "renner/table_io.hpp"

using namespace renner;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kAllKinds = {"M", "A", "B", "Y", "Mq", "Yq", "Aq"};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  REQUIRE(static_cast<bool>(out));
}

// Fresh scratch directory, removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("renner-io-test-" + tag + "-" +
                                        std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

bool artifacts_equal(const TableArtifact& a, const TableArtifact& b) {
  return a.kind == b.kind && a.n == b.n && a.table_kind == b.table_kind &&
         a.order_version == b.order_version && a.tool_version == b.tool_version &&
         table_differences(a.table, b.table).empty();
}

}  // namespace

TEST_CASE("serialize, parse, serialize is byte-identical for every table kind") {
  struct Case {
    MonoidKind kind;
    int n;
  };
  for (const Case& c : {Case{MonoidKind::Rook, 2}, Case{MonoidKind::Symplectic, 1}}) {
    for (const std::string& table_kind : kAllKinds) {
      TableArtifact artifact = compute_table(c.kind, c.n, table_kind);
      std::string first = to_json(artifact);
      TableArtifact parsed = artifact_from_json(first);
      std::string second = to_json(parsed);
      INFO(kind_to_string(c.kind), " n=", c.n, " ", table_kind);
      CHECK(first == second);
      CHECK(artifacts_equal(artifact, parsed));
    }
  }
}

TEST_CASE("computed artifacts carry the canonical metadata and labels") {
  TableArtifact artifact = compute_table(MonoidKind::Symplectic, 2, "M");
  CHECK(artifact.kind == MonoidKind::Symplectic);
  CHECK(artifact.n == 2);
  CHECK(artifact.table_kind == "M");
  CHECK(artifact.order_version == kOrderVersion);
  CHECK(artifact.tool_version == kToolVersion);
  const QnOrder order = enumerate_qn(MonoidKind::Symplectic, 2);
  CHECK(artifact.table.row_labels() == order.labels);
  CHECK(artifact.table.col_labels() == order.labels);

  // Repeated computation serializes identically (deterministic output).
  CHECK(to_json(artifact) == to_json(compute_table(MonoidKind::Symplectic, 2, "M")));
}

TEST_CASE("unknown table kinds and malformed JSON are rejected") {
  CHECK_THROWS_AS(compute_table(MonoidKind::Rook, 2, "Z"), ParseError);
  CHECK_THROWS_AS(compute_table(MonoidKind::Rook, 2, "m"), ParseError);
  CHECK_THROWS_AS(artifact_from_json("not json"), ParseError);
  CHECK_THROWS_AS(artifact_from_json("{\"monoidKind\": \"rook\"}"), ParseError);

  // Structurally valid JSON with inconsistent dimensions.
  TableArtifact artifact = compute_table(MonoidKind::Rook, 1, "M");
  std::string text = to_json(artifact);
  std::string truncated = text;
  size_t pos = truncated.rfind("\"rowLabels\"");
  REQUIRE(pos != std::string::npos);
  truncated.replace(truncated.find('[', pos), std::string::npos,
                    "[\"(1)\"],\n  \"colLabels\": [\"(1)\", \"(0)\"],\n  "
                    "\"entries\": [[\"1\"]]\n}\n");
  CHECK_THROWS_AS(artifact_from_json(truncated), ParseError);
}

TEST_CASE("size bounds reject oversized requests unless explicitly lifted") {
  CHECK_THROWS_AS(compute_table(MonoidKind::Rook, 7, "M"), UnsupportedSize);
  CHECK_THROWS_AS(compute_table(MonoidKind::Symplectic, 5, "Y"), UnsupportedSize);
  CHECK_THROWS_AS(compute_table(MonoidKind::Rook, 5, "Mq"), UnsupportedSize);
  CHECK_THROWS_AS(compute_table(MonoidKind::Symplectic, 4, "Aq"), UnsupportedSize);

  // The rook-monoid classical tables are closed-form in n, so lifting the
  // bound lets them run past the command-line limit.
  TableArtifact big = compute_table(MonoidKind::Rook, 7, "M", /*allow_large=*/true);
  CHECK(big.table.num_rows() == big.table.num_cols());
  CHECK(big.table.row_labels() == enumerate_qn(MonoidKind::Rook, 7).labels);
}

TEST_CASE("entrywise comparison reports labeled mismatches") {
  TableArtifact a = compute_table(MonoidKind::Symplectic, 1, "M");
  TableArtifact b = compute_table(MonoidKind::Symplectic, 1, "M");
  CHECK(table_differences(a.table, b.table).empty());

  b.table.at(0, 1) = b.table.at(0, 1) + QRat(1);
  std::vector<std::string> diffs = table_differences(a.table, b.table);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].find(a.table.row_labels()[0].to_string()) != std::string::npos);
  CHECK(diffs[0].find(a.table.col_labels()[1].to_string()) != std::string::npos);
  CHECK(diffs[0].find("got") != std::string::npos);
  CHECK(diffs[0].find("want") != std::string::npos);

  TableArtifact c = compute_table(MonoidKind::Rook, 1, "M");
  std::vector<std::string> label_diffs = table_differences(a.table, c.table);
  REQUIRE(label_diffs.size() == 1);
  CHECK(label_diffs[0].find("labels differ") != std::string::npos);
}

TEST_CASE("pretty rendering is aligned and names the table") {
  TableArtifact artifact = compute_table(MonoidKind::Rook, 2, "M");
  std::string text = render_pretty(artifact);
  CHECK(text.find("M  rook  n=2") != std::string::npos);
  CHECK(text.find(kOrderVersion) != std::string::npos);

  // Every row of the matrix block has the same rendered width.
  std::istringstream lines(text);
  std::string line;
  std::vector<size_t> widths;
  bool past_header = false;
  while (std::getline(lines, line)) {
    if (line.empty()) {
      past_header = true;
      continue;
    }
    if (past_header) widths.push_back(line.size());
  }
  REQUIRE(widths.size() == static_cast<size_t>(artifact.table.num_rows()) + 1);
  for (size_t w : widths) CHECK(w == widths[0]);
}

TEST_CASE("csv rendering quotes every field") {
  TableArtifact artifact = compute_table(MonoidKind::Symplectic, 1, "Mq");
  std::string text = render_csv(artifact);
  std::istringstream lines(text);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    REQUIRE(!line.empty());
    CHECK(line.front() == '"');
    CHECK(line.back() == '"');
    // Fields are "..." separated by commas: count the separators.
    int commas = 0;
    bool in_quotes = false;
    for (char ch : line) {
      if (ch == '"') in_quotes = !in_quotes;
      else if (ch == ',' && !in_quotes) ++commas;
    }
    CHECK(commas == artifact.table.num_cols());
  }
  CHECK(rows == artifact.table.num_rows() + 1);
  CHECK(text.find("\"(0)\"") != std::string::npos);
}

TEST_CASE("latex rendering brackets the table and braces long exponents") {
  TableArtifact artifact = compute_table(MonoidKind::Rook, 2, "Mq");
  std::string text = render_latex(artifact);
  CHECK(text.find("M_q(R_{2})") != std::string::npos);
  CHECK(text.find("\\kbordermatrix") != std::string::npos);
  CHECK(text.find("(1^{2})") != std::string::npos);  // exponent in a label
  CHECK(text.find("q-1") != std::string::npos);      // polynomial entry

  // A hand-built artifact with a two-digit exponent: q^12 renders as q^{12}.
  std::vector<MunnIndex> labels = {MunnIndex::parse("(0)")};
  LabeledMatrix tiny(labels, labels);
  tiny.at(0, 0) = QRat(QPoly::q_power(12));
  TableArtifact hand;
  hand.kind = MonoidKind::Rook;
  hand.n = 0;
  hand.table_kind = "Mq";
  hand.table = tiny;
  std::string tiny_text = render_latex(hand);
  CHECK(tiny_text.find("q^{12}") != std::string::npos);
  CHECK(tiny_text.find("q^12") == std::string::npos);
}

TEST_CASE("cache writes an artifact file and serves it back byte-identical") {
  TempDir tmp("roundtrip");
  CacheSettings settings;
  settings.dir = tmp.path.string();

  std::string warning;
  TableArtifact first = load_or_compute(MonoidKind::Symplectic, 2, "M", settings,
                                        false, &warning);
  CHECK(warning.empty());
  fs::path file = tmp.path / cache_file_name(MonoidKind::Symplectic, 2, "M");
  REQUIRE(fs::exists(file));
  std::string stored = read_file(file);
  CHECK(stored == to_json(first));

  std::string warning2;
  TableArtifact second = load_or_compute(MonoidKind::Symplectic, 2, "M", settings,
                                         false, &warning2);
  CHECK(warning2.empty());
  CHECK(artifacts_equal(first, second));
  CHECK(read_file(file) == stored);

  // Distinct tables land in distinct files.
  load_or_compute(MonoidKind::Symplectic, 2, "Y", settings);
  fs::path other = tmp.path / cache_file_name(MonoidKind::Symplectic, 2, "Y");
  CHECK(other != file);
  CHECK(fs::exists(other));
}

TEST_CASE("stale order version is silently recomputed and refreshed") {
  TempDir tmp("stale");
  CacheSettings settings;
  settings.dir = tmp.path.string();

  TableArtifact fresh = load_or_compute(MonoidKind::Rook, 2, "A", settings);
  fs::path file = tmp.path / cache_file_name(MonoidKind::Rook, 2, "A");
  std::string good = read_file(file);

  std::string poisoned = good;
  size_t pos = poisoned.find(kOrderVersion);
  REQUIRE(pos != std::string::npos);
  poisoned.replace(pos, std::string(kOrderVersion).size(), "qn-order-v0");
  write_file(file, poisoned);

  std::string warning;
  TableArtifact again = load_or_compute(MonoidKind::Rook, 2, "A", settings,
                                        false, &warning);
  CHECK(warning.empty());  // version skew is not an error
  CHECK(artifacts_equal(fresh, again));
  CHECK(read_file(file) == good);  // entry refreshed in place
}

TEST_CASE("corrupt cache entries warn and recompute") {
  TempDir tmp("corrupt");
  CacheSettings settings;
  settings.dir = tmp.path.string();

  TableArtifact fresh = load_or_compute(MonoidKind::Rook, 2, "B", settings);
  fs::path file = tmp.path / cache_file_name(MonoidKind::Rook, 2, "B");
  std::string good = read_file(file);

  SUBCASE("unparseable JSON") {
    write_file(file, "{ definitely not a table");
    std::string warning;
    TableArtifact again = load_or_compute(MonoidKind::Rook, 2, "B", settings,
                                          false, &warning);
    CHECK(!warning.empty());
    CHECK(artifacts_equal(fresh, again));
    CHECK(read_file(file) == good);
  }

  SUBCASE("well-formed entry for a different table") {
    write_file(file, to_json(compute_table(MonoidKind::Rook, 1, "B")));
    std::string warning;
    TableArtifact again = load_or_compute(MonoidKind::Rook, 2, "B", settings,
                                          false, &warning);
    CHECK(!warning.empty());
    CHECK(artifacts_equal(fresh, again));
    CHECK(read_file(file) == good);
  }
}

TEST_CASE("disabled cache computes without touching the filesystem") {
  TempDir tmp("disabled");
  CacheSettings settings;
  settings.enabled = false;
  settings.dir = tmp.path.string();

  TableArtifact artifact = load_or_compute(MonoidKind::Rook, 2, "Y", settings);
  CHECK(artifacts_equal(artifact, compute_table(MonoidKind::Rook, 2, "Y")));
  CHECK(fs::is_empty(tmp.path));
}

TEST_CASE("cache directory resolution prefers the explicit setting") {
  CacheSettings explicit_dir;
  explicit_dir.dir = "/explicit/path";
  CHECK(cache_directory(explicit_dir) == "/explicit/path");

  CacheSettings from_env;
  ::setenv("RENNER_CACHE_DIR", "/from/env", 1);
  CHECK(cache_directory(from_env) == "/from/env");
  CHECK(cache_directory(explicit_dir) == "/explicit/path");

  ::unsetenv("RENNER_CACHE_DIR");
  CHECK(cache_directory(from_env) == ".renner-cache");

  // File names are deterministic and distinguish every coordinate.
  std::string base = cache_file_name(MonoidKind::Rook, 2, "M");
  CHECK(base == cache_file_name(MonoidKind::Rook, 2, "M"));
  CHECK(base != cache_file_name(MonoidKind::Rook, 3, "M"));
  CHECK(base != cache_file_name(MonoidKind::Rook, 2, "Mq"));
  CHECK(base != cache_file_name(MonoidKind::Symplectic, 2, "M"));
  CHECK(base.size() > 5);
  CHECK(base.substr(base.size() - 5) == ".json");
}
