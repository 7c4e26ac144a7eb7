// Acceptance run over the default corpus. One PASS/FAIL line per criterion;
// exits nonzero if any criterion fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "cozc/cozpart.hpp"
#include "cozc/corpus.hpp"
#include "cozc/io.hpp"
#include "cozc/verify.hpp"

using namespace cozc;
namespace fs = std::filesystem;

namespace {

struct Tally {
  std::size_t records = 0, checks = 0, failures = 0;
  std::set<std::string> frames;
  std::string first;

  void add(const PropertyReport& r) {
    ++records;
    checks += r.checked;
    frames.insert(r.frame);
    if (!r.verdict) {
      ++failures;
      if (first.empty()) first = r.frame + " " + r.property;
    }
  }
};

std::string suite_of(const std::string& property) { return property.substr(0, property.find(':')); }
std::string check_of(const std::string& property) { return property.substr(property.find(':') + 1); }

std::string dir_bytes(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) all += f.filename().string() + '\0' + read_text_file(f) + '\0';
  return all;
}

int failed = 0;

void line(int n, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failed;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << n << "] " << title << ": " << detail << std::endl;
}

// Every nondegenerate frame has at least one record and none fails.
void from_records(int n, const std::string& title, const std::vector<PropertyReport>& reports,
                  std::size_t frames, const std::function<bool(const PropertyReport&)>& select,
                  const std::function<bool(const PropertyReport&)>& extra = nullptr) {
  Tally t;
  std::size_t extra_bad = 0;
  for (const auto& r : reports)
    if (select(r)) {
      t.add(r);
      if (extra && !extra(r)) ++extra_bad;
    }
  std::ostringstream detail;
  detail << t.records << " records, " << t.checks << " checks, " << t.frames.size() << "/" << frames
         << " frames, " << t.failures << " violations";
  if (extra_bad) detail << ", " << extra_bad << " records missing requirements";
  if (!t.first.empty()) detail << ", first: " << t.first;
  line(n, title, t.failures == 0 && extra_bad == 0 && t.frames.size() == frames && t.checks > 0,
       detail.str());
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  const CorpusSpec spec;
  const auto corpus = generate_corpus(spec);
  std::vector<Frame> frames;
  for (const auto& e : corpus) frames.push_back(e.frame);
  std::map<std::string, const Frame*> by_name;
  for (const auto& f : frames) by_name[f.name()] = &f;

  VerifyOptions options;  // all suites, 50 samples, seed 7
  const auto reports = verify_frames(frames, options);
  std::cout << "corpus: " << frames.size() << " frames, " << reports.size() << " records"
            << std::endl;

  const auto in_suite = [](const char* suite, std::set<std::string> checks = {}) {
    return [=](const PropertyReport& r) {
      return suite_of(r.property) == suite && (checks.empty() || checks.count(check_of(r.property)));
    };
  };
  const auto n = frames.size();

  from_records(1, "model laws R1-R4 and the operation formula", reports, n, in_suite("model-laws"));
  from_records(2, "idempotent and multiple tables", reports, n, in_suite("remark3"));
  {
    std::size_t small = 0;
    for (const auto& f : frames) small += f.center().size() <= 16;
    Tally t;
    std::size_t missing = 0;
    std::set<std::string> covered;
    for (const auto& r : reports)
      if (suite_of(r.property) == "idempotent-tables") {
        const bool applies = by_name.at(r.frame)->center().size() <= 16;
        if (!applies) continue;
        if (!r.mandatory) ++missing;
        t.add(r);
        covered.insert(r.frame);
      }
    std::ostringstream d;
    d << t.records << " records, " << t.checks << " checks, " << covered.size() << "/" << small
      << " frames with center <= 16, " << t.failures << " violations";
    if (!t.first.empty()) d << ", first: " << t.first;
    line(3, "two-idempotent tables", t.failures == 0 && missing == 0 && covered.size() == small,
         d.str());
  }
  from_records(4, "cut coincidence, idempotent values, scaling, additivity", reports, n,
               in_suite("cut-lemmas", {"coincidence", "idempotent-values", "scaling", "additivity"}));
  from_records(5, "linear-combination cut additivity", reports, n,
               in_suite("cut-lemmas", {"linear-combination"}));
  from_records(6, "range via cuts equals range set", reports, n,
               in_suite("range-subsets", {"range-via-cuts"}));
  from_records(7, "range subset statements", reports, n,
               in_suite("range-subsets", {"linear", "binary", "series"}));
  from_records(8, "cozero part is a sigma-frame", reports, n, in_suite("sigma-frame"));
  {
    Tally t;
    for (const auto& r : reports)
      if (r.property == "coz-decomposition:zero-dimensional-iff-c-completely-regular") t.add(r);
    // direct spot values on the families
    std::size_t wrong = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto b = boolean_frame(k);
      wrong += !(is_zero_dimensional(b).verdict && is_c_completely_regular(b).verdict);
    }
    for (std::size_t k = 3; k <= 8; ++k) {
      const auto c = chain_frame(k);
      wrong += is_zero_dimensional(c).verdict || is_c_completely_regular(c).verdict;
    }
    std::ostringstream d;
    d << t.frames.size() << "/" << n << " frames, " << t.failures << " disagreements, " << wrong
      << " wrong family values";
    line(9, "zero-dimensional iff c-completely regular", t.failures == 0 && wrong == 0 &&
                                                             t.frames.size() == n,
         d.str());
  }
  from_records(10, "separation and cover properties of the cozero part", reports, n,
               in_suite("coz-properties"),
               [](const PropertyReport& r) { return !r.witnesses.empty(); });
  {
    Tally t;
    std::size_t uncovered = 0;
    std::map<std::string, std::set<std::string>> compared;
    for (const auto& r : reports)
      if (suite_of(r.property) == "oracles") {
        t.add(r);
        if (r.mandatory) compared[r.frame].insert(check_of(r.property));
      }
    for (const auto& f : frames) {
      const auto& got = compared[f.name()];
      if (!got.count("birkhoff")) ++uncovered;
      if (f.size() <= 16 && !got.count("prime-ideals")) ++uncovered;
      if (f.size() <= 32 && !got.count("rather-below")) ++uncovered;
    }
    std::ostringstream d;
    d << t.records << " records, " << t.checks << " checks, " << t.failures << " disagreements, "
      << uncovered << " missing comparisons";
    if (!t.first.empty()) d << ", first: " << t.first;
    line(11, "oracle agreement", t.failures == 0 && uncovered == 0, d.str());
  }
  {
    const auto base = fs::temp_directory_path() / "cozc_acceptance";
    fs::remove_all(base);
    cli::cmd_gen(spec, base / "a");
    cli::cmd_gen(spec, base / "b");
    const bool same = dir_bytes(base / "a") == dir_bytes(base / "b");
    fs::remove_all(base);
    std::ostringstream d;
    bool counts = true;
    const std::size_t expected[] = {1, 2, 5, 16, 63};
    d << (same ? "byte-identical" : "files differ") << ", posets:";
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto got = enumerate_posets(k).size();
      counts = counts && got == expected[k - 1];
      d << " " << got;
    }
    line(12, "corpus determinism and poset counts", same && counts, d.str());
  }

  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << 12 - failed << "/12 (" << secs << " s)"
            << std::endl;
  return failed ? 1 : 0;
}
