#include "tabinhib/fretboard.h"

#include <string>

#include "tabinhib/errors.h"

namespace tabinhib {

void FretboardConfig::validate() const {
  if (num_strings < 1) throw ValidationError("fretboard: num_strings must be >= 1");
  if (num_frets < 1) throw ValidationError("fretboard: num_frets must be >= 1");
  if (static_cast<int>(tuning.size()) != num_strings) {
    throw ValidationError("fretboard: tuning has " + std::to_string(tuning.size()) +
                          " entries, expected " + std::to_string(num_strings));
  }
  for (int pitch : tuning) {
    if (pitch <= 0) throw ValidationError("fretboard: tuning pitches must be positive");
  }
}

uint64_t FretboardConfig::hash() const {
  // FNV-1a over the defining fields.
  uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (byte * 8)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<uint64_t>(num_strings));
  mix(static_cast<uint64_t>(num_frets));
  for (int pitch : tuning) mix(static_cast<uint64_t>(pitch));
  return h;
}

PitchSpace pitchSpaceOf(const FretboardConfig& config) {
  config.validate();
  int lo = config.tuning.front();
  int hi = config.tuning.front();
  for (int pitch : config.tuning) {
    lo = pitch < lo ? pitch : lo;
    hi = pitch > hi ? pitch : hi;
  }
  return PitchSpace{lo, hi + config.num_frets};
}

namespace {

void checkPosition(const FretboardConfig& config, int string, int fret_class) {
  if (string < 1 || string > config.num_strings) {
    throw DomainError("string " + std::to_string(string) + " out of range [1, " +
                      std::to_string(config.num_strings) + "]");
  }
  if (fret_class < kSilenceFret || fret_class > config.num_frets) {
    throw DomainError("fret class " + std::to_string(fret_class) + " out of range [-1, " +
                      std::to_string(config.num_frets) + "]");
  }
}

}  // namespace

int comboOf(const FretboardConfig& config, int string, int fret_class) {
  checkPosition(config, string, fret_class);
  return (string - 1) * config.classesPerString() + (fret_class + 1);
}

std::pair<int, int> splitCombo(const FretboardConfig& config, int combo) {
  if (combo < 0 || combo >= config.comboCount()) {
    throw DomainError("combination index " + std::to_string(combo) + " out of range [0, " +
                      std::to_string(config.comboCount()) + ")");
  }
  int per_string = config.classesPerString();
  return {combo / per_string + 1, combo % per_string - 1};
}

std::optional<int> pitchOf(const FretboardConfig& config, int string, int fret_class) {
  checkPosition(config, string, fret_class);
  if (fret_class == kSilenceFret) return std::nullopt;
  return config.tuning[string - 1] + fret_class;
}

}  // namespace tabinhib
