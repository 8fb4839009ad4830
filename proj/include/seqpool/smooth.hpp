#pragma once

#include <string>

#include "seqpool/seqcore.hpp"

namespace seqpool {

enum class Smoothing { independent, moving_average, time_varying_mean };

std::string smoothing_name(Smoothing s, int window);
Smoothing parse_smoothing(const std::string& s);  // "independent" | "ma" | "tvm"

// Derived signal fed to the poolers. Row t is v_t; T' == T for all strategies.
struct SmoothedSequence {
  Matrix values;
  Smoothing strategy = Smoothing::independent;
  int window = 1;  // moving_average only
  Direction direction = Direction::forward;
};

// v_t = x_t / ||x_t||; zero rows stay zero.
SmoothedSequence independent_frames(const FrameSequence& x);

// v_t = mean of rows t .. min(t+window-1, T); truncated at the end, not normalized.
SmoothedSequence moving_average(const FrameSequence& x, int window);

// v_t = m_t / ||m_t|| with m_t the cumulative mean, computed by the exact
// recurrence m_t = ((t-1)*m_{t-1} + x_t) / t.
SmoothedSequence time_varying_mean(const FrameSequence& x);

// Rows in reverse temporal order; the id carries a "#reverse" marker that a
// second reversal removes, so reverse(reverse(x)) == x.
FrameSequence reverse_sequence(const FrameSequence& x);

SmoothedSequence smooth(const FrameSequence& x, Smoothing strategy, int window);

}  // namespace seqpool
