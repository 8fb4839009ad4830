#pragma once

#include <string>
#include <vector>

#include "seqpool/matrix.hpp"

namespace seqpool {

enum class Direction { forward, reverse, both };

std::string to_string(Direction d);
Direction parse_direction(const std::string& s);

// Ordered T x D matrix of per-frame feature vectors (row t = frame t).
struct FrameSequence {
  Matrix frames;
  std::string id;

  std::size_t length() const { return frames.rows(); }
  std::size_t dim() const { return frames.cols(); }
  void validate() const;  // T >= 1, D >= 1, finite entries
};

struct DescriptorMeta {
  std::string pooler;
  Direction direction = Direction::forward;
  std::string smoothing = "none";
  std::string feature_map = "none";
};

// Fixed-length pooled representation of one sequence.
struct Descriptor {
  std::vector<double> values;
  DescriptorMeta meta;

  std::size_t size() const { return values.size(); }
};

struct LabeledDescriptor {
  Descriptor descriptor;
  std::string label;
};

enum class Split { train, test, validation };

std::string to_string(Split s);
Split parse_split(const std::string& s);  // throws on unknown tag

struct ManifestRecord {
  std::string path;  // relative to the manifest's directory
  std::string label;
  Split split = Split::train;
};

struct DatasetManifest {
  std::vector<ManifestRecord> records;
  std::string base_dir;  // directory the manifest was read from ("." if unset)

  std::vector<ManifestRecord> split_records(Split s) const;
  std::string resolve(const ManifestRecord& rec) const;
};

// Sorted unique labels; index in this list is the class index everywhere.
std::vector<std::string> class_names(const DatasetManifest& m);

// CSV, one frame per row, no header.
FrameSequence read_sequence(const std::string& path);
void write_sequence(const FrameSequence& seq, const std::string& path);

// Single CSV row, 17 significant digits (exact text round-trip).
void write_descriptor(const Descriptor& d, const std::string& path);
Descriptor read_descriptor(const std::string& path);

// CSV rows "path,label,split".
DatasetManifest read_manifest(const std::string& path);
void write_manifest(const DatasetManifest& m, const std::string& path);

// Shortest representation that round-trips a double exactly ("%.17g").
std::string format_double(double v);

}  // namespace seqpool
