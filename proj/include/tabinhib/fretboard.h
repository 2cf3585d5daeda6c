#ifndef TABINHIB_FRETBOARD_H_
#define TABINHIB_FRETBOARD_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tabinhib {

constexpr int kSilenceFret = -1;

/// Instrument geometry and tuning. Defines the flattened string/fret
/// combination index space every other module works in.
///
/// Strings are 1-based. Fret classes run over {-1, 0, ..., num_frets} where
/// -1 is silence and 0 the open string, so each string block spans
/// num_frets + 2 classes and the total combination count is
/// C = num_strings * (num_frets + 2).
struct FretboardConfig {
  int num_strings = 6;
  int num_frets = 19;
  std::vector<int> tuning = {40, 45, 50, 55, 59, 64};  // open-string MIDI pitches

  int classesPerString() const { return num_frets + 2; }
  int comboCount() const { return num_strings * classesPerString(); }

  /// Throws ValidationError if any invariant fails.
  void validate() const;

  /// Stable content hash, embedded in persisted matrix headers so files can
  /// be checked against the config they were computed under.
  uint64_t hash() const;

  bool operator==(const FretboardConfig&) const = default;
};

/// Range of pitches reachable on the instrument, as MIDI semitones.
struct PitchSpace {
  int min_pitch = 0;
  int max_pitch = 0;

  int count() const { return max_pitch - min_pitch + 1; }
};

PitchSpace pitchSpaceOf(const FretboardConfig& config);

/// Flatten (string, fret_class) into a combination index in [0, C).
/// Silence comes first within each string block.
int comboOf(const FretboardConfig& config, int string, int fret_class);

/// Inverse of comboOf.
std::pair<int, int> splitCombo(const FretboardConfig& config, int combo);

/// MIDI pitch of a fretted position; empty for the silence class.
std::optional<int> pitchOf(const FretboardConfig& config, int string, int fret_class);

}  // namespace tabinhib

#endif  // TABINHIB_FRETBOARD_H_
