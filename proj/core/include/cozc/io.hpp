#ifndef COZC_IO_HPP
#define COZC_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cozc/corpus.hpp"
#include "cozc/step_function.hpp"

namespace cozc {

/// {"name", "elements", "covers"} with elements and cover pairs sorted; two
/// space indent and a trailing newline, so equal frames give equal bytes.
std::string serialize_frame(const Frame& frame);

/// Throws ParseError (with line and column) for malformed documents or
/// covers naming unknown elements; structural problems keep the kind raised
/// by Frame::build.
Frame parse_frame(std::string_view text);

/// {"frame": name, "parts": [[element, "num/den"], ...]} in element order.
std::string serialize_step_function(const StepFunction& fn);

/// Throws ParseError, or FrameMismatch when the document names another frame.
StepFunction parse_step_function(std::string_view text, const Frame& frame);

struct ManifestEntry {
  std::string name;
  std::string file;
  std::size_t size = 0;
  std::string kind;
  std::uint64_t seed = 0;
};

std::string serialize_manifest(const std::vector<ManifestEntry>& entries);

/// Writes <name>.json for every entry plus manifest.json. Files are
/// overwritten, so a rerun with the same corpus leaves identical bytes.
/// Throws IoError.
std::vector<ManifestEntry> write_corpus(const std::vector<CorpusEntry>& corpus,
                                        const std::filesystem::path& dir);

/// Throws IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Files are taken as given; directories contribute their *.json files other
/// than manifest.json, in name order. Throws IoError for missing paths.
std::vector<std::filesystem::path> expand_frame_paths(
    const std::vector<std::filesystem::path>& inputs);

}  // namespace cozc

#endif  // COZC_IO_HPP
