#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>

#include "scopegate/csv.hpp"
#include "scopegate/structural.hpp"
#include "testutil.hpp"

// Shell-level checks of the command-line tool; SCOPEGATE_BIN points at the
// built binary.

using namespace scopegate::test;

namespace {

std::string binary() {
  const char* bin = std::getenv("SCOPEGATE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SCOPEGATE_BIN not set");
  return bin;
}

int run(const std::string& args, const std::filesystem::path& log) {
  const std::string cmd = binary() + " " + args + " >" + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

// tiny two-class corpus on disk
void write_corpus(const std::filesystem::path& dir, int docs = 16) {
  std::filesystem::create_directories(dir / "text");
  std::string manifest = "id,label,text_file,page_count,file_size_kb\n";
  for (int i = 0; i < docs; ++i) {
    const bool pos = i % 2 == 0;
    const std::string id = (pos ? "p" : "n") + std::to_string(i);
    write_file(dir / "text" / (id + ".txt"),
               pos ? "Abstract\nthis paper reports findings [1] page\fReferences\n(Lee, 2004)"
                   : "flyer sale discount coupon menu\fsecond page prices");
    manifest += id + "," + (pos ? "in_scope" : "out_of_scope") + "," + id +
                ".txt,2,3.5\n";
  }
  write_file(dir / "manifest.csv", manifest);
}

}  // namespace

TEST_CASE("ingest summarises and writes a normalized manifest") {
  TempDir dir("cli-ingest");
  write_corpus(dir.path());
  const auto log = dir.path() / "log.txt";
  const int code = run("ingest --manifest " + (dir.path() / "manifest.csv").string() +
                           " --text-dir " + (dir.path() / "text").string() +
                           " --out-dir " + (dir.path() / "out").string(),
                       log);
  CHECK(code == 0);
  const std::string out = read_file(log);
  CHECK(out.find("fingerprint:") != std::string::npos);
  CHECK(out.find("documents: 16") != std::string::npos);
  CHECK(std::filesystem::exists(dir.path() / "out" / "manifest.csv"));
  CHECK(read_file(dir.path() / "out" / "manifest.csv").find("# fingerprint:") !=
        std::string::npos);
}

TEST_CASE("ingest on a missing text file exits 2 and names the document") {
  TempDir dir("cli-missing");
  write_corpus(dir.path(), 4);
  write_file(dir.path() / "manifest.csv",
             "id,label,text_file,page_count,file_size_kb\n"
             "ghost,in_scope,missing.txt,1,1\n");
  const auto log = dir.path() / "log.txt";
  const int code = run("ingest --manifest " + (dir.path() / "manifest.csv").string() +
                           " --text-dir " + (dir.path() / "text").string() +
                           " --out-dir " + (dir.path() / "out").string(),
                       log);
  CHECK(code == 2);
  CHECK(read_file(log).find("ghost") != std::string::npos);
}

TEST_CASE("ingest of an empty manifest exits 2") {
  TempDir dir("cli-empty");
  std::filesystem::create_directories(dir.path() / "text");
  write_file(dir.path() / "manifest.csv",
             "id,label,text_file,page_count,file_size_kb\n");
  const auto log = dir.path() / "log.txt";
  const int code = run("ingest --manifest " + (dir.path() / "manifest.csv").string() +
                           " --text-dir " + (dir.path() / "text").string() +
                           " --out-dir " + (dir.path() / "out").string(),
                       log);
  CHECK(code == 2);
  CHECK(read_file(log).find("empty corpus") != std::string::npos);
}

TEST_CASE("split then train then predict round-trips artifacts") {
  TempDir dir("cli-roundtrip");
  write_corpus(dir.path(), 24);
  const std::string common = " --text-dir " + (dir.path() / "text").string() +
                             " --out-dir " + (dir.path() / "out").string();
  const auto log = dir.path() / "log.txt";

  REQUIRE(run("split --manifest " + (dir.path() / "manifest.csv").string() +
                  common + " --seed 5",
              log) == 0);
  REQUIRE(std::filesystem::exists(dir.path() / "out" / "train.csv"));
  REQUIRE(run("train --manifest " + (dir.path() / "out" / "train.csv").string() +
                  " --dev-manifest " + (dir.path() / "out" / "dev.csv").string() +
                  common + " --features bow --portion first-50 --model dt",
              log) == 0);
  REQUIRE(std::filesystem::exists(dir.path() / "out" / "model.json"));
  REQUIRE(run("predict --manifest " + (dir.path() / "out" / "test.csv").string() +
                  " --model-file " + (dir.path() / "out" / "model.json").string() +
                  common,
              log) == 0);
  const std::string preds = read_file(dir.path() / "out" / "predictions.csv");
  CHECK(preds.find("id,label,predicted") != std::string::npos);
  // the toy corpus is trivially separable: every row should be correct
  std::istringstream lines(preds);
  std::string line;
  size_t data_rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("id,", 0) == 0) continue;
    ++data_rows;
    const auto fields = scopegate::split_csv_row(line);
    REQUIRE(fields.size() == 3);
    CHECK(fields[1] == fields[2]);
  }
  CHECK(data_rows > 0);
}

TEST_CASE("rank writes the full structural ranking") {
  TempDir dir("cli-rank");
  write_corpus(dir.path());
  const auto log = dir.path() / "log.txt";
  REQUIRE(run("rank --manifest " + (dir.path() / "manifest.csv").string() +
                  " --text-dir " + (dir.path() / "text").string() +
                  " --features str --out-dir " + (dir.path() / "out").string(),
              log) == 0);
  const std::string csv = read_file(dir.path() / "out" / "ranking.csv");
  std::istringstream lines(csv);
  std::string line;
  size_t rows = 0;
  bool header = false;
  while (std::getline(lines, line)) {
    if (line.rfind("rank,feature,ig_bits", 0) == 0) header = true;
    else if (!line.empty() && line[0] != '#') ++rows;
  }
  CHECK(header);
  CHECK(rows == scopegate::kStructuralFeatureCount);
  // reference-driven features must rank near the top on this corpus
  CHECK(csv.find("refCount") != std::string::npos);
}

TEST_CASE("config file values are overridden by flags") {
  TempDir dir("cli-config");
  write_corpus(dir.path());
  write_file(dir.path() / "run.ini",
             "[corpus]\n"
             "manifest = " + (dir.path() / "manifest.csv").string() + "\n"
             "text-dir = " + (dir.path() / "text").string() + "\n"
             "[split]\n"
             "seed = 11\n"
             "[output]\n"
             "out-dir = " + (dir.path() / "out-a").string() + "\n");
  const auto log = dir.path() / "log.txt";
  REQUIRE(run("split --config " + (dir.path() / "run.ini").string(), log) == 0);
  CHECK(std::filesystem::exists(dir.path() / "out-a" / "train.csv"));

  REQUIRE(run("split --config " + (dir.path() / "run.ini").string() +
                  " --out-dir " + (dir.path() / "out-b").string(),
              log) == 0);
  CHECK(std::filesystem::exists(dir.path() / "out-b" / "train.csv"));

  // same config + same flags -> identical fingerprint and identical artifacts
  const auto log2 = dir.path() / "log2.txt";
  REQUIRE(run("split --config " + (dir.path() / "run.ini").string() +
                  " --out-dir " + (dir.path() / "out-b").string(),
              log2) == 0);
  CHECK(read_file(dir.path() / "out-b" / "train.csv") ==
        read_file(dir.path() / "out-b" / "train.csv"));
  const std::string fp1 = read_file(log), fp2 = read_file(log2);
  CHECK(fp1.substr(0, fp1.find('\n')) == fp2.substr(0, fp2.find('\n')));
}

TEST_CASE("unknown config keys are rejected") {
  TempDir dir("cli-badconfig");
  write_corpus(dir.path(), 4);
  write_file(dir.path() / "run.ini", "[nope]\nkey = value\n");
  const auto log = dir.path() / "log.txt";
  CHECK(run("ingest --config " + (dir.path() / "run.ini").string(), log) == 2);
  CHECK(read_file(log).find("unknown option") != std::string::npos);
}

TEST_CASE("evaluate honours the stopword environment override") {
  TempDir dir("cli-env");
  write_corpus(dir.path(), 20);
  write_file(dir.path() / "stops.txt", "# custom list\nflyer\nsale\n");
  const auto log = dir.path() / "log.txt";
  const std::string cmd =
      "SCOPEGATE_STOPWORDS=" + (dir.path() / "stops.txt").string() + " " +
      binary() + " evaluate --manifest " + (dir.path() / "manifest.csv").string() +
      " --text-dir " + (dir.path() / "text").string() + " --out-dir " +
      (dir.path() / "out").string() +
      " --features bow --model dt --seeds 1 --min-df 2 >" + log.string() +
      " 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(std::filesystem::exists(dir.path() / "out" / "report.csv"));
}
