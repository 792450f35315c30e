#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dspp/model.hpp"
#include "dspp/random.hpp"

namespace dspp {

enum class PathInit {
  FreshOn,     // a new on-period starts at time 0 (the post-event view)
  Stationary,  // time 0 is an arbitrary epoch of the stationary process
};

struct IntensitySegment {
  double level;     // lambda or 0
  double duration;  // > 0, except 0 for atom-at-zero off draws
};

// One realization of the on-off intensity over [0, horizon]. Levels strictly
// alternate between the on level and zero; the summed durations cover the
// horizon and the last segment may overshoot it.
class IntensityPath {
 public:
  IntensityPath(std::vector<IntensitySegment> segments, double horizon);

  std::span<const IntensitySegment> segments() const noexcept { return segments_; }
  double horizon() const noexcept { return horizon_; }
  bool starts_on() const noexcept { return segments_.front().level > 0; }

 private:
  std::vector<IntensitySegment> segments_;
  double horizon_;
};

// Strictly increasing event epochs in the half-open window [0, horizon).
class EventStream {
 public:
  EventStream(std::vector<double> events, double horizon);

  const std::vector<double>& events() const noexcept { return events_; }
  double horizon() const noexcept { return horizon_; }
  std::size_t size() const noexcept { return events_.size(); }

 private:
  std::vector<double> events_;
  double horizon_;
};

// Alternating on/off segments: on-durations i.i.d. Exponential(k),
// off-durations i.i.d. G. FreshOn draws a full on-period first. Stationary
// draws one uniform for the initial state (on with probability p_on), then
// the residual of that state: Exponential(k) again when on (memorylessness),
// the equilibrium residual of G when off. Segments are appended until the
// horizon is covered.
IntensityPath sample_intensity_path(const DsppModel& model, double horizon,
                                    PathInit init, RandomStream& rng);

// Conditional Poisson sampling: a homogeneous Poisson stream of rate lambda
// on every on-segment, nothing on off-segments. Gaps within a segment are
// sequential Exponential(lambda) draws; each on-segment starts a fresh gap.
// Events at or beyond the horizon are dropped.
EventStream thin_events_on_path(const IntensityPath& path, double lambda,
                                RandomStream& rng);

// One inter-arrival time by the direct construction: N failures before the
// first success with failure probability k / (lambda + k), then
// T = sum_{i=1..N} (X_i + Y_i) + X_0 with X ~ Exponential(lambda + k) and
// Y ~ G; the sum is empty when N = 0. Draw order: one uniform for N
// (inverse transform), then X_i followed by Y_i for each failure round, then
// X_0 last.
double sample_interarrival(const DsppModel& model, RandomStream& rng);

// Partial sums of i.i.d. sample_interarrival draws, truncated at the
// horizon. Palm version: the first inter-arrival starts at time 0, and the
// origin itself is not an event of the stream.
EventStream simulate_renewal_stream(const DsppModel& model, double horizon,
                                    RandomStream& rng);

// Time from a stationary origin to the next event. Draw order: one uniform
// for the initial state; when on (probability p_on) a fresh
// sample_interarrival draw; when off, the equilibrium residual of G plus a
// fresh sample_interarrival draw.
double stationary_first_event_time(const DsppModel& model, RandomStream& rng);

}  // namespace dspp
