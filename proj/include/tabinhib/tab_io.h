#ifndef TABINHIB_TAB_IO_H_
#define TABINHIB_TAB_IO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "tabinhib/fretboard.h"
#include "tabinhib/matrix.h"

namespace tabinhib {

/// Default analysis frame rate: hop 512 at 22050 Hz.
constexpr double kDefaultFrameRate = 22050.0 / 512.0;

/// One fretted note with absolute timing. Silence is the absence of events,
/// never an event itself.
struct NoteEvent {
  int string = 0;    // 1-based
  int fret = 0;      // 0 = open string
  double onset_sec = 0.0;
  double offset_sec = 0.0;
};

/// A parsed interchange document: instrument header plus note events.
struct SymbolicTrack {
  std::string track_id;
  FretboardConfig config;
  double duration_sec = 0.0;
  std::vector<NoteEvent> events;

  /// Throws ValidationError on out-of-range events, inverted timing,
  /// same-string overlaps, or duration shorter than the last offset.
  void validate() const;
};

/// Frame-level tablature: one fret class per string per frame.
struct FrameTablature {
  FretboardConfig config;
  std::string track_id;
  int num_frames = 0;
  std::vector<int16_t> frets;  // num_strings x num_frames, row per string

  FrameTablature() = default;
  FrameTablature(const FretboardConfig& cfg, std::string id, int frames)
      : config(cfg),
        track_id(std::move(id)),
        num_frames(frames),
        frets(static_cast<size_t>(cfg.num_strings) * frames, kSilenceFret) {}

  int16_t fretAt(int string, int frame) const {
    return frets[static_cast<size_t>(string - 1) * num_frames + frame];
  }
  void setFret(int string, int frame, int16_t fret) {
    frets[static_cast<size_t>(string - 1) * num_frames + frame] = fret;
  }

  bool operator==(const FrameTablature&) const = default;
};

/// Parse one interchange document. Throws ParseError with line/field location
/// on malformed input, ValidationError on domain violations.
SymbolicTrack parseTrack(const std::string& document);

/// Canonical serialization (events sorted by onset, then string, then fret).
/// parse(serialize(t)) rasterizes identically to t, and serializing a parsed
/// document again is byte-identical.
std::string serializeTrack(const SymbolicTrack& track);

SymbolicTrack loadTrackFile(const std::string& path);
void saveTrackFile(const std::string& path, const SymbolicTrack& track);

/// Sample a track onto a fixed frame grid. Frame n covers
/// [n/rate, (n+1)/rate); a string's fret class at frame n is the fret of the
/// event active at the frame's start instant, else silence.
FrameTablature rasterize(const SymbolicTrack& track, double frame_rate = kDefaultFrameRate);

/// Binary target tensor t with t[combo][frame] in {0,1} and exactly one
/// active class per string block per frame.
ByteMatrix targetsOf(const FrameTablature& frames);

/// Inverse of rasterize for persistence: collapse constant-fret runs back
/// into note events on the same frame grid.
SymbolicTrack trackFromFrames(const FrameTablature& frames, double frame_rate = kDefaultFrameRate);

/// Fret-class view of a binary prediction/target tensor (one active class
/// per string block per frame).
FrameTablature tablatureFromTensor(const ByteMatrix& tensor, const FretboardConfig& config,
                                   const std::string& track_id = "");

}  // namespace tabinhib

#endif  // TABINHIB_TAB_IO_H_
