#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "cozc/cozpart.hpp"
#include "cozc/cuts.hpp"
#include "cozc/error.hpp"

namespace cozc::cli {

namespace fs = std::filesystem;

namespace {

Json names(const Frame& frame, const ElementSet& set) {
  Json out = Json::array();
  for (auto e : set) out.push_back(frame.name_of(e));
  return out;
}

Json rationals(const RationalSet& set) {
  Json out = Json::array();
  for (const auto& r : set) out.push_back(format_rational(r));
  return out;
}

struct CorpusFlags {
  std::string kind = "default";
  std::optional<std::size_t> size, min_size, max_size;
  std::uint64_t seed = 7;
  std::size_t count = 20;

  void attach(CLI::App& app) {
    app.add_option("--kind", kind,
                   "all-posets | boolean | chain | topology | random-downset | default");
    app.add_option("--size", size, "exact size (elements, exponent or points)");
    app.add_option("--min-size", min_size, "smallest size (defaults to --max-size)");
    app.add_option("--max-size", max_size, "largest size");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--count", count, "instances for the random families");
  }

  CorpusSpec spec() const {
    CorpusSpec s;
    s.kind = parse_generator_kind(kind);
    s.seed = seed;
    s.count = count;
    if (size) {
      s.min_size = s.max_size = *size;
    } else if (max_size) {
      s.max_size = *max_size;
      s.min_size = min_size.value_or(*max_size);
    } else if (min_size) {
      s.min_size = *min_size;
      s.max_size = std::max(s.max_size, *min_size);
    }
    return s;
  }
};

Frame load_frame(const fs::path& path) { return parse_frame(read_text_file(path)); }

}  // namespace

std::vector<ManifestEntry> cmd_gen(const CorpusSpec& spec, const fs::path& dir) {
  return write_corpus(generate_corpus(spec), dir);
}

Json cmd_props(const Frame& frame) {
  Json out;
  out["frame"] = frame.name();
  out["elements"] = frame.size();
  out["center"] = names(frame, frame.center());
  out["zero_dimensional"] = is_zero_dimensional(frame).verdict;
  out["c_completely_regular"] = is_c_completely_regular(frame).verdict;
  if (frame.size() < 2) {
    out["coz_c"] = nullptr;
    out["sigma_frame"] = nullptr;
    return out;
  }
  const auto part = coz_part(frame);
  out["coz_c"] = names(frame, part.members);
  out["sigma_frame"] = sigma_frame_check(part).verdict;
  return out;
}

Json cmd_cuts(const StepFunction& fn) {
  const auto& frame = fn.frame();
  Json rows = Json::array();
  for (const auto& ideal : prime_ideals(frame)) {
    const auto c = cut(fn, ideal);
    Json row;
    row["ideal"] = ideal.label(frame);
    row["join_irreducible"] = ideal.witness() ? Json(frame.name_of(*ideal.witness())) : Json(nullptr);
    row["value"] = format_rational(c.value);
    row["upper_attained"] = c.upper_attained;
    row["lower_attained"] = c.lower_attained;
    rows.push_back(std::move(row));
  }
  const auto range = range_set(fn);
  const auto via = range_via_cuts(fn);
  Json out;
  out["frame"] = frame.name();
  out["rows"] = std::move(rows);
  out["range_set"] = rationals(range);
  out["range_via_cuts"] = rationals(via);
  out["agree"] = range == via;
  return out;
}

VerifyOutcome cmd_verify(const std::vector<Frame>& frames, const VerifyOptions& options,
                         const std::optional<fs::path>& report_path) {
  VerifyOutcome outcome;
  outcome.reports = verify_frames(frames, options);
  if (report_path) write_text_file(*report_path, reports_json(outcome.reports).dump(2) + "\n");
  outcome.exit_code = all_mandatory_pass(outcome.reports) ? kPass : kCounterexample;
  return outcome;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of cozero-part statements over finite frames", "cozc"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a frame corpus and its manifest");
  CorpusFlags gen_corpus;
  gen_corpus.attach(*gen);
  std::string gen_out;
  gen->add_option("--out", gen_out, "output directory")->required();

  auto* props = app.add_subcommand("props", "print cozero-part properties of a frame");
  std::string props_file;
  props->add_option("frame", props_file, "frame file")->required();

  auto* cuts = app.add_subcommand("cuts", "cut table of a step function");
  std::string cuts_frame, cuts_fn;
  cuts->add_option("frame", cuts_frame, "frame file")->required();
  cuts->add_option("function", cuts_fn, "step-function file")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> verify_paths;
  std::vector<std::string> suites{"all"};
  std::string report_file;
  std::size_t jobs = 1, samples = 50;
  std::uint64_t verify_seed = 7;
  CorpusFlags verify_corpus;
  verify->add_option("frames", verify_paths, "frame files or directories (default: generated corpus)");
  verify->add_option("--suite", suites, "suite to run; repeatable; 'all' for every suite")
      ->take_all();
  verify->add_option("--report", report_file, "write the JSON report here");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--samples", samples, "sampled functions per frame");
  verify->add_option("--verify-seed", verify_seed, "sampling seed");
  verify_corpus.attach(*verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kInvalidInput;
  }

  try {
    if (*gen) {
      const auto manifest = cmd_gen(gen_corpus.spec(), gen_out);
      out << "wrote " << manifest.size() << " frames and manifest.json to " << gen_out << "\n";
      return kPass;
    }
    if (*props) {
      const auto report = cmd_props(load_frame(props_file));
      out << report.dump(2) << "\n";
      return report["sigma_frame"] == false ? kCounterexample : kPass;
    }
    if (*cuts) {
      const auto frame = load_frame(cuts_frame);
      const auto report = cmd_cuts(parse_step_function(read_text_file(cuts_fn), frame));
      out << report.dump(2) << "\n";
      return report["agree"] == true ? kPass : kCounterexample;
    }
    // verify
    VerifyOptions options;
    options.suites = parse_suites(suites);
    options.jobs = jobs;
    options.samples = samples;
    options.seed = verify_seed;
    std::vector<Frame> frames;
    if (verify_paths.empty()) {
      for (auto& entry : generate_corpus(verify_corpus.spec())) frames.push_back(entry.frame);
    } else {
      std::vector<fs::path> inputs(verify_paths.begin(), verify_paths.end());
      for (const auto& path : expand_frame_paths(inputs)) frames.push_back(load_frame(path));
    }
    if (frames.empty()) throw Error(ErrorKind::InvalidInput, "no frames to verify");
    const auto outcome =
        cmd_verify(frames, options,
                   report_file.empty() ? std::nullopt : std::optional<fs::path>(report_file));
    std::size_t failed = 0, informational = 0;
    for (const auto& r : outcome.reports)
      if (!r.verdict) ++(r.mandatory ? failed : informational);
    out << "frames: " << frames.size() << ", records: " << outcome.reports.size()
        << ", failed: " << failed << ", informational failures: " << informational << "\n";
    if (const auto* bad = first_failure(outcome.reports)) {
      out << "FAIL " << bad->frame << " " << bad->property << "\n";
      out << "counterexample: " << (bad->counterexample ? bad->counterexample->dump() : "null")
          << "\n";
    }
    return outcome.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace cozc::cli
