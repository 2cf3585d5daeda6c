#include "tabinhib/cooccurrence.h"

#include <algorithm>
#include <string>

#include "tabinhib/errors.h"

namespace tabinhib {

namespace {

uint64_t pairKey(int dim, int i, int j) {
  int lo = std::min(i, j);
  int hi = std::max(i, j);
  return static_cast<uint64_t>(lo) * dim + hi;
}

}  // namespace

int TrackPairStats::inter(int i, int j) const {
  if (i == j) return counts_[i];
  auto it = coactive_.find(pairKey(dim_, i, j));
  return it == coactive_.end() ? 0 : it->second;
}

int TrackPairStats::unionCount(int i, int j) const {
  if (i == j) return counts_[i];
  return counts_[i] + counts_[j] - inter(i, j);
}

std::vector<int> TrackPairStats::occurringCombos() const {
  std::vector<int> combos;
  for (int c = 0; c < dim_; ++c) {
    if (counts_[c] > 0) combos.push_back(c);
  }
  return combos;
}

void TrackPairStats::bumpCoactive(int i, int j) { ++coactive_[pairKey(dim_, i, j)]; }

TrackPairStats trackPairStats(const ByteMatrix& targets) {
  TrackPairStats stats(targets.rows, targets.cols);
  std::vector<int> active;
  active.reserve(targets.rows);
  for (int n = 0; n < targets.cols; ++n) {
    active.clear();
    for (int c = 0; c < targets.rows; ++c) {
      if (targets(c, n)) active.push_back(c);
    }
    for (size_t a = 0; a < active.size(); ++a) {
      stats.bumpCount(active[a]);
      for (size_t b = a + 1; b < active.size(); ++b) {
        stats.bumpCoactive(active[a], active[b]);
      }
    }
  }
  return stats;
}

CooccurrenceAccumulator::CooccurrenceAccumulator(int dim, uint64_t config_hash)
    : dim_(dim),
      config_hash_(config_hash),
      ratios_(static_cast<size_t>(dim) * (dim + 1) / 2) {}

size_t CooccurrenceAccumulator::pairSlot(int i, int j) const {
  // i >= j within the lower triangle.
  return static_cast<size_t>(i) * (i + 1) / 2 + j;
}

void CooccurrenceAccumulator::add(const TrackPairStats& stats) {
  if (stats.dim() != dim_) {
    throw ValidationError("co-occurrence accumulate: track has C = " +
                          std::to_string(stats.dim()) + ", expected " + std::to_string(dim_));
  }
  ++track_count_;
  std::vector<int> occurring = stats.occurringCombos();
  for (size_t a = 0; a < occurring.size(); ++a) {
    for (size_t b = 0; b <= a; ++b) {
      int i = occurring[a];
      int j = occurring[b];
      double ratio = static_cast<double>(stats.inter(i, j)) / stats.unionCount(i, j);
      ratios_[pairSlot(i, j)].push_back(ratio);
    }
  }
}

CooccurrenceMatrix CooccurrenceAccumulator::finalize() const {
  CooccurrenceMatrix m;
  m.dim = dim_;
  m.config_hash = config_hash_;
  m.track_count = track_count_;
  m.values = Matrix(dim_, dim_);
  m.valid_track_counts.assign(static_cast<size_t>(dim_) * dim_, 0);

  std::vector<double> sorted;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j <= i; ++j) {
      const std::vector<double>& contributions = ratios_[pairSlot(i, j)];
      if (contributions.empty()) continue;
      // Sorting before summation makes the mean independent of track order.
      sorted = contributions;
      std::sort(sorted.begin(), sorted.end());
      double sum = 0.0;
      for (double r : sorted) sum += r;
      double mean = sum / static_cast<double>(sorted.size());
      m.values(i, j) = mean;
      m.values(j, i) = mean;
      auto count = static_cast<int32_t>(sorted.size());
      m.valid_track_counts[static_cast<size_t>(i) * dim_ + j] = count;
      m.valid_track_counts[static_cast<size_t>(j) * dim_ + i] = count;
    }
  }
  return m;
}

namespace {

uint64_t corpusConfigHash(std::span<const FrameTablature> tracks) {
  if (tracks.empty()) throw ValidationError("co-occurrence estimation needs a nonempty corpus");
  const FretboardConfig& config = tracks.front().config;
  for (const FrameTablature& t : tracks) {
    if (!(t.config == config)) {
      throw ValidationError("co-occurrence estimation: corpus mixes fretboard configs (track '" +
                            t.track_id + "' differs)");
    }
  }
  return config.hash();
}

}  // namespace

CooccurrenceMatrix estimateCorpus(std::span<const FrameTablature> tracks) {
  uint64_t hash = corpusConfigHash(tracks);
  int dim = tracks.front().config.comboCount();

  std::vector<TrackPairStats> per_track(tracks.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t t = 0; t < tracks.size(); ++t) {
    per_track[t] = trackPairStats(targetsOf(tracks[t]));
  }

  CooccurrenceAccumulator acc(dim, hash);
  for (const TrackPairStats& stats : per_track) acc.add(stats);
  return acc.finalize();
}

CooccurrenceMatrix estimateCorpusSerial(std::span<const FrameTablature> tracks) {
  uint64_t hash = corpusConfigHash(tracks);
  int dim = tracks.front().config.comboCount();

  CooccurrenceAccumulator acc(dim, hash);
  for (const FrameTablature& track : tracks) acc.add(trackPairStats(targetsOf(track)));
  return acc.finalize();
}

}  // namespace tabinhib
