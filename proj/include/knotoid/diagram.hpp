#pragma once
// Morse diagrams of knotoids and multi-knotoids.
//
// A diagram is a bottom-to-top word of events, one per horizontal level; pos
// counts strands left of the event at its level.  Kinds and width effects:
//   Leg      +1  orientation start, tangent points up (vertex below its strand)
//   LegDown  -1  orientation start, tangent points down (vertex above its strand)
//   Head     -1  orientation end, tangent points up
//   HeadDown +1  orientation end, tangent points down
//   Cup      +2  local minimum
//   Cap      -2  local maximum
//   CrossPos  0  crossing, the strand running bottom-left to top-right on top
//   CrossNeg  0  crossing, the other strand on top
// A diagram with no endpoint events is a closed link diagram; with one
// start/end pair it is a knotoid (plus any closed components).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotoid {

enum class EventKind : std::uint8_t {
  Leg,
  Head,
  LegDown,
  HeadDown,
  Cup,
  Cap,
  CrossPos,
  CrossNeg
};

struct MorseEvent {
  EventKind kind;
  int pos;
  bool operator==(const MorseEvent&) const = default;
};

struct MorseDiagram {
  std::vector<MorseEvent> events;
  bool operator==(const MorseDiagram&) const = default;
};

// Strands entering from below / leaving above.
int in_arity(EventKind k);
int out_arity(EventKind k);
inline int width_delta(EventKind k) { return out_arity(k) - in_arity(k); }
inline bool is_crossing(EventKind k) {
  return k == EventKind::CrossPos || k == EventKind::CrossNeg;
}
inline bool is_endpoint(EventKind k) {
  return k == EventKind::Leg || k == EventKind::Head ||
         k == EventKind::LegDown || k == EventKind::HeadDown;
}
inline bool is_orientation_start(EventKind k) {
  return k == EventKind::Leg || k == EventKind::LegDown;
}
inline bool is_orientation_end(EventKind k) {
  return k == EventKind::Head || k == EventKind::HeadDown;
}

struct DiagramError {
  int event_index;  // -1 for whole-diagram errors
  std::string message;
};

// Empty optional when the word is a well-formed diagram.
std::optional<DiagramError> validate(const MorseDiagram& d);

int num_crossings(const MorseDiagram& d);
int max_width(const MorseDiagram& d);
bool is_closed(const MorseDiagram& d);

// --- strand graph -----------------------------------------------------------

enum class Side : std::uint8_t { Below, Above };

struct PortRef {
  int event;
  Side side;
  int slot;
  bool operator==(const PortRef&) const = default;
};

// A segment runs from the top of one event (birth) to the bottom of a later
// event (death).
struct Segment {
  PortRef birth;
  PortRef death;
};

struct Skeleton {
  std::vector<Segment> segs;
  std::vector<std::array<int, 2>> below;  // seg ids consumed by each event (-1 pad)
  std::vector<std::array<int, 2>> above;  // seg ids produced by each event
  std::vector<int> width;                 // width[i] = strands below event i; size events+1

  int seg_at(const PortRef& p) const {
    return p.side == Side::Below ? below[p.event][p.slot] : above[p.event][p.slot];
  }
};

// Requires a valid diagram.
Skeleton build_skeleton(const MorseDiagram& d);

enum class Dir : std::uint8_t { Up, Down };
inline Dir flip(Dir d) { return d == Dir::Up ? Dir::Down : Dir::Up; }

// Follow the curve past the far end of seg when moving in direction dir.
// False when the curve terminates at an endpoint vertex there.
bool step(const Skeleton& sk, const MorseDiagram& d, int seg, Dir dir,
          int* next_seg, Dir* next_dir);

struct Components {
  int count = 0;
  std::vector<int> comp_of_seg;
  int open_comp = -1;            // component carrying the endpoints, -1 if none
  std::vector<int> anchor;       // per component: lowest incident event index
                                 // (a Cup for closed components)
};

// Components ordered by their lowest event index.
Components find_components(const MorseDiagram& d, const Skeleton& sk);

struct OrientedDiagram {
  MorseDiagram d;
  Skeleton sk;
  Components comps;
  std::vector<Dir> seg_dir;

  Dir dir_at(const PortRef& p) const { return seg_dir[sk.seg_at(p)]; }
};

// Orient the diagram.  The open component follows its endpoints.  Each closed
// component defaults to "left leg of its lowest cup points up", which traces
// the circle clockwise; indices listed in flip_components (component ids from
// find_components) get the opposite direction.  Throws std::invalid_argument
// for bad indices or an attempt to flip the open component.
OrientedDiagram orient(const MorseDiagram& d,
                       const std::vector<int>& flip_components = {});

// Like orient, but closed components take their direction from seed ports
// (direction of the segment at that port); unseeded components default.
// Used to carry an orientation through a rewrite.
OrientedDiagram orient_seeded(const MorseDiagram& d,
                              const std::vector<std::pair<PortRef, Dir>>& seeds);

// --- oriented measurements --------------------------------------------------

// Doubled rotation numbers (tangent winding; a half-integer when exactly one
// endpoint tangent points down).
struct Rotation {
  int total2 = 0;
  std::vector<int> per_comp2;
};
Rotation rotation_number(const OrientedDiagram& od);

int crossing_sign(const OrientedDiagram& od, int event);
int writhe(const OrientedDiagram& od);

struct GaussEntry {
  int event;
  bool over;
  int sign;
};

// Crossing passages along the open component from its orientation start.
// Self-crossings of the open component appear twice, crossings shared with a
// closed component once.  Empty for closed diagrams.
std::vector<GaussEntry> gauss_code(const OrientedDiagram& od);

// Self-crossings of the open component whose two passages enclose an odd
// number of other entries; such crossings flip under the coloring used by the
// parity invariants.
std::vector<int> odd_crossings(const OrientedDiagram& od);
bool all_crossings_even(const OrientedDiagram& od);
// Sum of signs of the odd self-crossings.
int odd_writhe(const OrientedDiagram& od);

}  // namespace knotoid
