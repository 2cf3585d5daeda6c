#include "tabinhib/tab_io.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tabinhib/errors.h"
#include "tabinhib/io_util.h"

namespace tabinhib {

namespace {

// Slack when mapping continuous times onto the frame grid, so that times
// reconstructed as frame_index / frame_rate land on their own frame.
constexpr double kGridSlack = 1e-9;

int frameCount(double duration_sec, double frame_rate) {
  double x = duration_sec * frame_rate;
  double base = std::floor(x);
  int n = static_cast<int>(base);
  if (x - base > kGridSlack) ++n;
  return n;
}

std::string describeEvent(const NoteEvent& e) {
  return "(string " + std::to_string(e.string) + ", fret " + std::to_string(e.fret) +
         ", " + fmtDouble(e.onset_sec) + "-" + fmtDouble(e.offset_sec) + "s)";
}

}  // namespace

void SymbolicTrack::validate() const {
  config.validate();
  if (duration_sec < 0.0) throw ValidationError("track '" + track_id + "': negative duration");
  for (const NoteEvent& e : events) {
    if (e.string < 1 || e.string > config.num_strings) {
      throw ValidationError("track '" + track_id + "': event " + describeEvent(e) +
                            " string out of range [1, " + std::to_string(config.num_strings) + "]");
    }
    if (e.fret < 0 || e.fret > config.num_frets) {
      throw ValidationError("track '" + track_id + "': event " + describeEvent(e) +
                            " fret out of range [0, " + std::to_string(config.num_frets) + "]");
    }
    if (e.onset_sec < 0.0) {
      throw ValidationError("track '" + track_id + "': event " + describeEvent(e) +
                            " has negative onset");
    }
    if (e.offset_sec <= e.onset_sec) {
      throw ValidationError("track '" + track_id + "': event " + describeEvent(e) +
                            " has offset <= onset");
    }
    if (e.offset_sec > duration_sec) {
      throw ValidationError("track '" + track_id + "': event " + describeEvent(e) +
                            " extends past duration_sec " + fmtDouble(duration_sec));
    }
  }

  // A physical string sounds one fret at a time; overlapping events on the
  // same string are an ingestion error rather than last-writer-wins.
  std::vector<const NoteEvent*> per_string;
  for (int s = 1; s <= config.num_strings; ++s) {
    per_string.clear();
    for (const NoteEvent& e : events) {
      if (e.string == s) per_string.push_back(&e);
    }
    std::sort(per_string.begin(), per_string.end(),
              [](const NoteEvent* a, const NoteEvent* b) { return a->onset_sec < b->onset_sec; });
    for (size_t i = 1; i < per_string.size(); ++i) {
      if (per_string[i]->onset_sec < per_string[i - 1]->offset_sec) {
        throw ValidationError("track '" + track_id + "': overlapping events on string " +
                              std::to_string(s) + ": " + describeEvent(*per_string[i - 1]) +
                              " and " + describeEvent(*per_string[i]));
      }
    }
  }
}

SymbolicTrack parseTrack(const std::string& document) {
  SymbolicTrack track;
  bool saw_track_id = false, saw_duration = false, saw_tuning = false, saw_frets = false;
  bool in_notes = false;

  std::istringstream stream(document);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<std::string> tokens = splitTokens(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    const std::string& key = tokens[0];

    if (key == "note") {
      // note string <s> fret <f> onset_sec <a> offset_sec <b>
      if (tokens.size() != 9 || tokens[1] != "string" || tokens[3] != "fret" ||
          tokens[5] != "onset_sec" || tokens[7] != "offset_sec") {
        throw ParseError(where + ": expected 'note string <s> fret <f> onset_sec <a> offset_sec <b>'");
      }
      NoteEvent e;
      e.string = static_cast<int>(parseLong(tokens[2], where + ", field string"));
      e.fret = static_cast<int>(parseLong(tokens[4], where + ", field fret"));
      e.onset_sec = parseDouble(tokens[6], where + ", field onset_sec");
      e.offset_sec = parseDouble(tokens[8], where + ", field offset_sec");
      track.events.push_back(e);
      in_notes = true;
    } else if (in_notes) {
      throw ParseError(where + ": header field '" + key + "' after first note record");
    } else if (key == "track_id") {
      if (tokens.size() != 2) throw ParseError(where + ": track_id needs exactly one value");
      track.track_id = tokens[1];
      saw_track_id = true;
    } else if (key == "duration_sec") {
      if (tokens.size() != 2) throw ParseError(where + ": duration_sec needs exactly one value");
      track.duration_sec = parseDouble(tokens[1], where + ", field duration_sec");
      saw_duration = true;
    } else if (key == "tuning") {
      if (tokens.size() < 2) throw ParseError(where + ": tuning needs at least one pitch");
      track.config.tuning.clear();
      for (size_t i = 1; i < tokens.size(); ++i) {
        track.config.tuning.push_back(
            static_cast<int>(parseLong(tokens[i], where + ", field tuning")));
      }
      track.config.num_strings = static_cast<int>(track.config.tuning.size());
      saw_tuning = true;
    } else if (key == "num_frets") {
      if (tokens.size() != 2) throw ParseError(where + ": num_frets needs exactly one value");
      track.config.num_frets = static_cast<int>(parseLong(tokens[1], where + ", field num_frets"));
      saw_frets = true;
    } else {
      throw ParseError(where + ": unknown field '" + key + "'");
    }
  }

  if (!saw_track_id) throw ParseError("missing header field 'track_id'");
  if (!saw_duration) throw ParseError("missing header field 'duration_sec'");
  if (!saw_tuning) throw ParseError("missing header field 'tuning'");
  if (!saw_frets) throw ParseError("missing header field 'num_frets'");

  track.validate();
  return track;
}

std::string serializeTrack(const SymbolicTrack& track) {
  std::vector<NoteEvent> events = track.events;
  std::sort(events.begin(), events.end(), [](const NoteEvent& a, const NoteEvent& b) {
    if (a.onset_sec != b.onset_sec) return a.onset_sec < b.onset_sec;
    if (a.string != b.string) return a.string < b.string;
    return a.fret < b.fret;
  });

  std::string out;
  out += "track_id " + track.track_id + "\n";
  out += "duration_sec " + fmtDouble(track.duration_sec) + "\n";
  out += "tuning";
  for (int pitch : track.config.tuning) out += " " + std::to_string(pitch);
  out += "\n";
  out += "num_frets " + std::to_string(track.config.num_frets) + "\n";
  for (const NoteEvent& e : events) {
    out += "note string " + std::to_string(e.string) + " fret " + std::to_string(e.fret) +
           " onset_sec " + fmtDouble(e.onset_sec) + " offset_sec " + fmtDouble(e.offset_sec) + "\n";
  }
  return out;
}

SymbolicTrack loadTrackFile(const std::string& path) {
  try {
    return parseTrack(readTextFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void saveTrackFile(const std::string& path, const SymbolicTrack& track) {
  writeTextFile(path, serializeTrack(track));
}

FrameTablature rasterize(const SymbolicTrack& track, double frame_rate) {
  if (frame_rate <= 0.0) throw DomainError("frame_rate must be positive");
  track.validate();

  int num_frames = frameCount(track.duration_sec, frame_rate);
  FrameTablature frames(track.config, track.track_id, num_frames);

  for (const NoteEvent& e : track.events) {
    // Frames whose start instant n / frame_rate lies in [onset, offset).
    int first = static_cast<int>(std::ceil(e.onset_sec * frame_rate - kGridSlack));
    int last = static_cast<int>(std::floor(e.offset_sec * frame_rate - kGridSlack));
    first = std::max(first, 0);
    last = std::min(last, num_frames - 1);
    for (int n = first; n <= last; ++n) {
      frames.setFret(e.string, n, static_cast<int16_t>(e.fret));
    }
  }
  return frames;
}

ByteMatrix targetsOf(const FrameTablature& frames) {
  const FretboardConfig& cfg = frames.config;
  ByteMatrix targets(cfg.comboCount(), frames.num_frames);
  for (int s = 1; s <= cfg.num_strings; ++s) {
    for (int n = 0; n < frames.num_frames; ++n) {
      targets(comboOf(cfg, s, frames.fretAt(s, n)), n) = 1;
    }
  }
  return targets;
}

SymbolicTrack trackFromFrames(const FrameTablature& frames, double frame_rate) {
  if (frame_rate <= 0.0) throw DomainError("frame_rate must be positive");
  SymbolicTrack track;
  track.track_id = frames.track_id;
  track.config = frames.config;
  track.duration_sec = frames.num_frames / frame_rate;

  for (int s = 1; s <= frames.config.num_strings; ++s) {
    int n = 0;
    while (n < frames.num_frames) {
      int16_t fret = frames.fretAt(s, n);
      int run_end = n + 1;
      while (run_end < frames.num_frames && frames.fretAt(s, run_end) == fret) ++run_end;
      if (fret != kSilenceFret) {
        NoteEvent e;
        e.string = s;
        e.fret = fret;
        e.onset_sec = n / frame_rate;
        e.offset_sec = run_end / frame_rate;
        track.events.push_back(e);
      }
      n = run_end;
    }
  }
  std::sort(track.events.begin(), track.events.end(), [](const NoteEvent& a, const NoteEvent& b) {
    if (a.onset_sec != b.onset_sec) return a.onset_sec < b.onset_sec;
    if (a.string != b.string) return a.string < b.string;
    return a.fret < b.fret;
  });
  return track;
}

FrameTablature tablatureFromTensor(const ByteMatrix& tensor, const FretboardConfig& config,
                                   const std::string& track_id) {
  if (tensor.rows != config.comboCount()) {
    throw DomainError("tensor has " + std::to_string(tensor.rows) + " rows, expected C = " +
                      std::to_string(config.comboCount()));
  }
  constexpr int kNone = -1000;
  FrameTablature frames(config, track_id, tensor.cols);
  for (int s = 1; s <= config.num_strings; ++s) {
    for (int n = 0; n < tensor.cols; ++n) {
      int active = kNone;
      for (int f = kSilenceFret; f <= config.num_frets; ++f) {
        if (tensor(comboOf(config, s, f), n)) {
          if (active != kNone) {
            throw ValidationError("tensor is not one-hot per string block (string " +
                                  std::to_string(s) + ", frame " + std::to_string(n) + ")");
          }
          active = f;
        }
      }
      if (active == kNone) {
        throw ValidationError("tensor has no active class for string " + std::to_string(s) +
                              " at frame " + std::to_string(n));
      }
      frames.setFret(s, n, static_cast<int16_t>(active));
    }
  }
  return frames;
}

}  // namespace tabinhib
