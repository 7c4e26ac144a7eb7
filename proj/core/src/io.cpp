#include "cozc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cozc/error.hpp"
#include "cozc/report.hpp"

namespace cozc {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points one past the offending character.
    std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
               e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) parse_fail("document is not an object");
  auto it = doc.find(key);
  if (it == doc.end()) parse_fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_at(const Json& value, const std::string& where) {
  if (!value.is_string()) parse_fail(where + " is not a string");
  return value.get<std::string>();
}

}  // namespace

std::string serialize_frame(const Frame& frame) {
  Json doc;
  doc["name"] = frame.name();
  Json elements = Json::array();
  for (auto e : frame.elements()) elements.push_back(frame.name_of(e));
  doc["elements"] = std::move(elements);
  Json covers = Json::array();
  for (auto [lo, hi] : frame.covers()) covers.push_back({frame.name_of(lo), frame.name_of(hi)});
  doc["covers"] = std::move(covers);
  return doc.dump(2) + "\n";
}

Frame parse_frame(std::string_view text) {
  const auto doc = parse_document(text);
  const auto name = string_at(field(doc, "name"), "name");
  const auto& elements_json = field(doc, "elements");
  if (!elements_json.is_array()) parse_fail("elements is not an array");
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < elements_json.size(); ++i)
    elements.push_back(string_at(elements_json[i], "elements[" + std::to_string(i) + "]"));

  const auto& covers_json = field(doc, "covers");
  if (!covers_json.is_array()) parse_fail("covers is not an array");
  std::vector<Frame::CoverPair> covers;
  for (std::size_t i = 0; i < covers_json.size(); ++i) {
    const auto where = "covers[" + std::to_string(i) + "]";
    const auto& pair = covers_json[i];
    if (!pair.is_array() || pair.size() != 2) parse_fail(where + " is not a pair");
    auto lo = string_at(pair[0], where);
    auto hi = string_at(pair[1], where);
    for (const auto& n : {lo, hi})
      if (std::find(elements.begin(), elements.end(), n) == elements.end())
        parse_fail(where + " names unknown element '" + n + "'");
    covers.emplace_back(std::move(lo), std::move(hi));
  }
  return Frame::build(name, std::move(elements), covers);
}

std::string serialize_step_function(const StepFunction& fn) {
  Json doc;
  doc["frame"] = fn.frame().name();
  Json parts = Json::array();
  for (const auto& p : fn.parts())
    parts.push_back({fn.frame().name_of(p.element), format_rational(p.value)});
  doc["parts"] = std::move(parts);
  return doc.dump(2) + "\n";
}

StepFunction parse_step_function(std::string_view text, const Frame& frame) {
  const auto doc = parse_document(text);
  const auto name = string_at(field(doc, "frame"), "frame");
  if (name != frame.name())
    throw Error(ErrorKind::FrameMismatch,
                "function is over '" + name + "', frame is '" + frame.name() + "'");
  const auto& parts_json = field(doc, "parts");
  if (!parts_json.is_array()) parse_fail("parts is not an array");
  std::vector<Part> parts;
  for (std::size_t i = 0; i < parts_json.size(); ++i) {
    const auto where = "parts[" + std::to_string(i) + "]";
    const auto& pair = parts_json[i];
    if (!pair.is_array() || pair.size() != 2) parse_fail(where + " is not a pair");
    const auto element_name = string_at(pair[0], where);
    auto element = frame.find(element_name);
    if (!element) parse_fail(where + " names unknown element '" + element_name + "'");
    parts.push_back(Part{*element, parse_rational(string_at(pair[1], where))});
  }
  return StepFunction::make(frame, std::move(parts));
}

std::string serialize_manifest(const std::vector<ManifestEntry>& entries) {
  Json frames = Json::array();
  for (const auto& e : entries) {
    Json row;
    row["name"] = e.name;
    row["file"] = e.file;
    row["size"] = e.size;
    row["kind"] = e.kind;
    row["seed"] = e.seed;
    frames.push_back(std::move(row));
  }
  Json doc;
  doc["frames"] = std::move(frames);
  return doc.dump(2) + "\n";
}

std::vector<ManifestEntry> write_corpus(const std::vector<CorpusEntry>& corpus,
                                        const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<ManifestEntry> manifest;
  for (const auto& entry : corpus) {
    ManifestEntry row{entry.frame.name(), entry.frame.name() + ".json", entry.frame.size(),
                      entry.kind, entry.seed};
    write_text_file(dir / row.file, serialize_frame(entry.frame));
    manifest.push_back(std::move(row));
  }
  write_text_file(dir / "manifest.json", serialize_manifest(manifest));
  return manifest;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  return buffer.str();
}

void write_text_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

std::vector<fs::path> expand_frame_paths(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const auto& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input, ec)) {
        const auto& p = entry.path();
        if (entry.is_regular_file() && p.extension() == ".json" && p.filename() != "manifest.json")
          found.push_back(p);
      }
      if (ec) throw Error(ErrorKind::IoError, "cannot list " + input.string());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::exists(input, ec)) {
      out.push_back(input);
    } else {
      throw Error(ErrorKind::IoError, "no such file or directory: " + input.string());
    }
  }
  return out;
}

}  // namespace cozc
