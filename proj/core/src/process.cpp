#include "dspp/process.hpp"

#include <cmath>
#include <utility>

#include "dspp/errors.hpp"

namespace dspp {

IntensityPath::IntensityPath(std::vector<IntensitySegment> segments,
                             double horizon)
    : segments_(std::move(segments)), horizon_(horizon) {
  if (!(horizon > 0.0)) throw InvalidParameter("horizon", "must be > 0");
  if (segments_.empty()) throw InvalidParameter("segments", "must be non-empty");
  double total = 0.0;
  bool prev_on = false;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& seg = segments_[i];
    if (!(seg.duration >= 0.0))
      throw InvalidParameter("segments", "durations must be >= 0");
    const bool on = seg.level > 0.0;
    if (i > 0 && on == prev_on)
      throw InvalidParameter("segments", "levels must strictly alternate");
    prev_on = on;
    total += seg.duration;
  }
  if (total < horizon_ * (1.0 - 1e-12))
    throw InvalidParameter("segments", "durations do not cover the horizon");
}

EventStream::EventStream(std::vector<double> events, double horizon)
    : events_(std::move(events)), horizon_(horizon) {
  if (!(horizon > 0.0)) throw InvalidParameter("horizon", "must be > 0");
  double prev = -1.0;
  for (double e : events_) {
    if (!(e >= 0.0) || e >= horizon_)
      throw InvalidParameter("events", "epochs must lie in [0, horizon)");
    if (e <= prev)
      throw InvalidParameter("events", "epochs must be strictly increasing");
    prev = e;
  }
}

IntensityPath sample_intensity_path(const DsppModel& model, double horizon,
                                    PathInit init, RandomStream& rng) {
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
  std::vector<IntensitySegment> segs;
  bool on;
  if (init == PathInit::FreshOn) {
    on = true;
    segs.push_back({model.lambda(), rng.exponential(model.k())});
  } else {
    if (!model.off_dist().has_finite_mean())
      throw InfiniteMean("stationary start requires finite E[Y]");
    const double u = rng.next_double();
    if (u < model.p_on()) {
      // residual on-time is again Exponential(k) by memorylessness
      on = true;
      segs.push_back({model.lambda(), rng.exponential(model.k())});
    } else {
      on = false;
      segs.push_back(
          {0.0, model.off_dist().equilibrium_residual_sample(rng)});
    }
  }
  double covered = segs.back().duration;
  while (covered < horizon) {
    on = !on;
    const double duration =
        on ? rng.exponential(model.k()) : model.off_dist().sample(rng);
    segs.push_back({on ? model.lambda() : 0.0, duration});
    covered += duration;
  }
  return IntensityPath(std::move(segs), horizon);
}

EventStream thin_events_on_path(const IntensityPath& path, double lambda,
                                RandomStream& rng) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  for (const auto& seg : path.segments()) {
    if (seg.level != 0.0 && seg.level != lambda)
      throw InvalidParameter("path", "positive level differs from lambda");
  }
  std::vector<double> events;
  double start = 0.0;
  for (const auto& seg : path.segments()) {
    if (start >= path.horizon()) break;
    if (seg.level > 0.0) {
      double t = rng.exponential(lambda);
      while (t < seg.duration) {
        const double epoch = start + t;
        if (epoch >= path.horizon()) break;
        // a gap below the resolution of doubles would duplicate the epoch
        if (events.empty() || epoch > events.back()) events.push_back(epoch);
        t += rng.exponential(lambda);
      }
    }
    start += seg.duration;
  }
  return EventStream(std::move(events), path.horizon());
}

double sample_interarrival(const DsppModel& model, RandomStream& rng) {
  const double total_rate = model.lambda() + model.k();
  const double failure_p = model.k() / total_rate;
  const double u = rng.next_double();
  const auto failures =
      static_cast<std::uint64_t>(std::floor(std::log(u) / std::log(failure_p)));
  double t = 0.0;
  for (std::uint64_t i = 0; i < failures; ++i) {
    t += rng.exponential(total_rate);         // X_i: on-time ending in a drop
    t += model.off_dist().sample(rng);        // Y_i: off-time
  }
  return t + rng.exponential(total_rate);     // X_0: on-time ending in an event
}

EventStream simulate_renewal_stream(const DsppModel& model, double horizon,
                                    RandomStream& rng) {
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
  std::vector<double> events;
  double t = sample_interarrival(model, rng);
  while (t < horizon) {
    if (events.empty() || t > events.back()) events.push_back(t);
    t += sample_interarrival(model, rng);
  }
  return EventStream(std::move(events), horizon);
}

double stationary_first_event_time(const DsppModel& model, RandomStream& rng) {
  if (!model.off_dist().has_finite_mean())
    throw InfiniteMean("stationary start requires finite E[Y]");
  const double u = rng.next_double();
  if (u < model.p_on()) {
    // on at the origin: the residual on-time is memoryless, so the time to
    // the next event is a fresh inter-arrival
    return sample_interarrival(model, rng);
  }
  return model.off_dist().equilibrium_residual_sample(rng) +
         sample_interarrival(model, rng);
}

}  // namespace dspp
