#include "seqpool/smooth.hpp"

#include <algorithm>

namespace seqpool {

std::string smoothing_name(Smoothing s, int window) {
  switch (s) {
    case Smoothing::independent: return "independent";
    case Smoothing::moving_average: return "moving_average(" + std::to_string(window) + ")";
    case Smoothing::time_varying_mean: return "time_varying_mean";
  }
  return "?";
}

Smoothing parse_smoothing(const std::string& s) {
  if (s == "independent") return Smoothing::independent;
  if (s == "ma" || s == "moving_average") return Smoothing::moving_average;
  if (s == "tvm" || s == "time_varying_mean") return Smoothing::time_varying_mean;
  fail("unknown smoothing '" + s + "'");
}

namespace {

void normalize_row_in_place(std::span<double> row) {
  double n = norm2(row);
  if (n == 0.0) return;  // zero vectors pass through as zero
  for (double& v : row) v /= n;
}

}  // namespace

SmoothedSequence independent_frames(const FrameSequence& x) {
  x.validate();
  SmoothedSequence out{x.frames, Smoothing::independent, 1, Direction::forward};
  for (std::size_t t = 0; t < out.values.rows(); ++t) normalize_row_in_place(out.values.row(t));
  return out;
}

SmoothedSequence moving_average(const FrameSequence& x, int window) {
  x.validate();
  if (window < 1) fail("moving_average: window must be >= 1");
  const std::size_t T = x.length(), D = x.dim();
  SmoothedSequence out{Matrix(T, D), Smoothing::moving_average, window, Direction::forward};
  for (std::size_t t = 0; t < T; ++t) {
    std::size_t end = std::min(T, t + static_cast<std::size_t>(window));
    double inv = 1.0 / static_cast<double>(end - t);
    for (std::size_t c = 0; c < D; ++c) {
      double s = 0.0;
      for (std::size_t r = t; r < end; ++r) s += x.frames(r, c);
      out.values(t, c) = s * inv;
    }
  }
  return out;
}

SmoothedSequence time_varying_mean(const FrameSequence& x) {
  x.validate();
  const std::size_t T = x.length(), D = x.dim();
  SmoothedSequence out{Matrix(T, D), Smoothing::time_varying_mean, 1, Direction::forward};
  std::vector<double> mean(D, 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    double inv = 1.0 / static_cast<double>(t + 1);
    for (std::size_t c = 0; c < D; ++c) {
      mean[c] = (static_cast<double>(t) * mean[c] + x.frames(t, c)) * inv;
      out.values(t, c) = mean[c];
    }
    normalize_row_in_place(out.values.row(t));
  }
  return out;
}

FrameSequence reverse_sequence(const FrameSequence& x) {
  x.validate();
  const std::size_t T = x.length(), D = x.dim();
  FrameSequence out;
  out.frames = Matrix(T, D);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t c = 0; c < D; ++c) out.frames(t, c) = x.frames(T - 1 - t, c);
  static const std::string marker = "#reverse";
  if (x.id.size() >= marker.size() &&
      x.id.compare(x.id.size() - marker.size(), marker.size(), marker) == 0)
    out.id = x.id.substr(0, x.id.size() - marker.size());
  else
    out.id = x.id + marker;
  return out;
}

SmoothedSequence smooth(const FrameSequence& x, Smoothing strategy, int window) {
  switch (strategy) {
    case Smoothing::independent: return independent_frames(x);
    case Smoothing::moving_average: return moving_average(x, window);
    case Smoothing::time_varying_mean: return time_varying_mean(x);
  }
  fail("unknown smoothing strategy");
}

}  // namespace seqpool
