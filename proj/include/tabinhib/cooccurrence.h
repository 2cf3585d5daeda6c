#ifndef TABINHIB_COOCCURRENCE_H_
#define TABINHIB_COOCCURRENCE_H_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tabinhib/fretboard.h"
#include "tabinhib/matrix.h"
#include "tabinhib/tab_io.h"

namespace tabinhib {

/// Per-track intersection/union frame counts for combination pairs.
///
/// Storage is sparse: per-combination occurrence counts plus the co-active
/// frame counts of pairs that actually fire together. inter/unionCount serve
/// any (i, j) from those (pairs never occurring report 0/0).
class TrackPairStats {
 public:
  TrackPairStats() = default;
  TrackPairStats(int dim, int num_frames) : dim_(dim), num_frames_(num_frames), counts_(dim, 0) {}

  int dim() const { return dim_; }
  int numFrames() const { return num_frames_; }

  /// Frames in which combination c is active.
  int occurrences(int c) const { return counts_[c]; }

  /// Frames where both ci and cj are active (Eq. 4 count).
  int inter(int i, int j) const;

  /// Frames where at least one of ci, cj is active (Eq. 5 count).
  int unionCount(int i, int j) const;

  /// Combinations active in at least one frame, ascending.
  std::vector<int> occurringCombos() const;

  void bumpCount(int c) { ++counts_[c]; }
  void bumpCoactive(int i, int j);

 private:
  int dim_ = 0;
  int num_frames_ = 0;
  std::vector<int> counts_;
  std::unordered_map<uint64_t, int> coactive_;  // key lo * dim + hi, lo < hi
};

/// Pairwise co-occurrence counts of one binary target tensor.
TrackPairStats trackPairStats(const ByteMatrix& targets);

/// Averaged-IoU matrix over a corpus, plus the per-pair valid-track counts
/// |T'(i,j)| kept for diagnostics and reproducibility.
struct CooccurrenceMatrix {
  int dim = 0;
  uint64_t config_hash = 0;
  int track_count = 0;
  Matrix values;                          // dim x dim, symmetric, entries in [0,1]
  std::vector<int32_t> valid_track_counts;  // dim x dim row-major

  int32_t validTracks(int i, int j) const {
    return valid_track_counts[static_cast<size_t>(i) * dim + j];
  }
  bool operator==(const CooccurrenceMatrix&) const = default;
};

/// Order-insensitive reduction of per-track stats into the averaged-IoU
/// matrix. A track is valid for pair (i, j) when ci and cj each occur in at
/// least one of its frames; the track then contributes inter/union for the
/// pair. Contributions are sorted before summing, so the result is identical
/// under any insertion order.
class CooccurrenceAccumulator {
 public:
  explicit CooccurrenceAccumulator(int dim, uint64_t config_hash = 0);

  void add(const TrackPairStats& stats);
  CooccurrenceMatrix finalize() const;

 private:
  size_t pairSlot(int i, int j) const;  // lower-triangle index, i >= j

  int dim_ = 0;
  uint64_t config_hash_ = 0;
  int track_count_ = 0;
  std::vector<std::vector<double>> ratios_;  // per unordered pair, one IoU per valid track
};

/// End-to-end estimation over a corpus of frame tablature. Per-track stats
/// are computed in parallel; the reduction is order-insensitive, so the
/// result does not depend on track order or thread count.
CooccurrenceMatrix estimateCorpus(std::span<const FrameTablature> tracks);

/// Single-threaded reference implementation kept for testing and benchmarks.
CooccurrenceMatrix estimateCorpusSerial(std::span<const FrameTablature> tracks);

}  // namespace tabinhib

#endif  // TABINHIB_COOCCURRENCE_H_
