#include "seqpool/seqcore.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace seqpool {

namespace fs = std::filesystem;

std::string to_string(Direction d) {
  switch (d) {
    case Direction::forward: return "forward";
    case Direction::reverse: return "reverse";
    case Direction::both: return "both";
  }
  return "?";
}

Direction parse_direction(const std::string& s) {
  if (s == "forward") return Direction::forward;
  if (s == "reverse") return Direction::reverse;
  if (s == "both") return Direction::both;
  fail("unknown direction '" + s + "'");
}

void FrameSequence::validate() const {
  if (frames.rows() == 0 || frames.cols() == 0) fail("sequence '" + id + "': empty");
  if (!frames.all_finite()) fail("sequence '" + id + "': non-finite value");
}

std::string to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::test: return "test";
    case Split::validation: return "validation";
  }
  return "?";
}

Split parse_split(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "test") return Split::test;
  if (s == "validation") return Split::validation;
  fail("unknown split '" + s + "'");
}

std::vector<ManifestRecord> DatasetManifest::split_records(Split s) const {
  std::vector<ManifestRecord> out;
  for (const auto& r : records)
    if (r.split == s) out.push_back(r);
  return out;
}

std::string DatasetManifest::resolve(const ManifestRecord& rec) const {
  fs::path p(rec.path);
  if (p.is_absolute() || base_dir.empty()) return rec.path;
  return (fs::path(base_dir) / p).string();
}

std::vector<std::string> class_names(const DatasetManifest& m) {
  std::set<std::string> labels;
  for (const auto& r : m.records) labels.insert(r.label);
  return {labels.begin(), labels.end()};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

// Strict float token parse; reports the failing token back to the caller.
bool parse_number(const std::string& tok, double& out) {
  if (tok.empty()) return false;
  const char* begin = tok.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + tok.size();
}

std::vector<double> parse_number_row(const std::string& line, const std::string& path,
                                     std::size_t lineno) {
  auto fields = split_fields(line);
  std::vector<double> row(fields.size());
  for (std::size_t c = 0; c < fields.size(); ++c) {
    if (!parse_number(fields[c], row[c]))
      fail(path + ": non-numeric token '" + fields[c] + "' at line " + std::to_string(lineno) +
           ", column " + std::to_string(c + 1));
  }
  return row;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write '" + path + "'");
  return out;
}

}  // namespace

FrameSequence read_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("missing file '" + path + "'");

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() && in.peek() == EOF) break;  // trailing newline
    auto row = parse_number_row(line, path, lineno);
    if (!rows.empty() && row.size() != rows.front().size())
      fail(path + ": ragged row at line " + std::to_string(lineno) + " (expected " +
           std::to_string(rows.front().size()) + " columns, got " + std::to_string(row.size()) +
           ")");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(path + ": empty file");

  FrameSequence seq{Matrix::from_rows(rows), fs::path(path).stem().string()};
  seq.validate();
  return seq;
}

void write_sequence(const FrameSequence& seq, const std::string& path) {
  auto out = open_out(path);
  for (std::size_t r = 0; r < seq.frames.rows(); ++r) {
    for (std::size_t c = 0; c < seq.frames.cols(); ++c) {
      if (c) out << ',';
      out << format_double(seq.frames(r, c));
    }
    out << '\n';
  }
  if (!out) fail("write failed for '" + path + "'");
}

void write_descriptor(const Descriptor& d, const std::string& path) {
  if (d.values.empty()) fail("empty descriptor");
  for (double v : d.values)
    if (!std::isfinite(v)) fail("non-finite value in descriptor");
  auto out = open_out(path);
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (i) out << ',';
    out << format_double(d.values[i]);
  }
  out << '\n';
  if (!out) fail("write failed for '" + path + "'");
}

Descriptor read_descriptor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("missing file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) fail(path + ": empty file");
  Descriptor d;
  d.values = parse_number_row(strip_cr(line), path, 1);
  if (std::getline(in, line) && !strip_cr(line).empty())
    fail(path + ": descriptor file has more than one row");
  return d;
}

DatasetManifest read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("missing file '" + path + "'");

  DatasetManifest m;
  m.base_dir = fs::path(path).parent_path().string();
  if (m.base_dir.empty()) m.base_dir = ".";

  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 3)
      fail(path + ": expected 'path,label,split' at line " + std::to_string(lineno));
    if (fields[0].empty()) fail(path + ": empty path at line " + std::to_string(lineno));
    if (fields[1].empty()) fail(path + ": empty label at line " + std::to_string(lineno));
    if (!seen.insert(fields[0]).second)
      fail(path + ": duplicate path '" + fields[0] + "' at line " + std::to_string(lineno));
    m.records.push_back({fields[0], fields[1], parse_split(fields[2])});
  }
  if (m.records.empty()) fail(path + ": empty manifest");
  return m;
}

void write_manifest(const DatasetManifest& m, const std::string& path) {
  auto out = open_out(path);
  for (const auto& r : m.records) out << r.path << ',' << r.label << ',' << to_string(r.split) << '\n';
  if (!out) fail("write failed for '" + path + "'");
}

}  // namespace seqpool
