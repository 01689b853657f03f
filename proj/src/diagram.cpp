#include "knotoid/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace knotoid {

int in_arity(EventKind k) {
  switch (k) {
    case EventKind::Leg:
    case EventKind::HeadDown:
    case EventKind::Cup:
      return 0;
    case EventKind::Head:
    case EventKind::LegDown:
      return 1;
    case EventKind::Cap:
    case EventKind::CrossPos:
    case EventKind::CrossNeg:
      return 2;
  }
  return 0;
}

int out_arity(EventKind k) {
  switch (k) {
    case EventKind::Leg:
    case EventKind::HeadDown:
      return 1;
    case EventKind::Head:
    case EventKind::LegDown:
    case EventKind::Cap:
      return 0;
    case EventKind::Cup:
    case EventKind::CrossPos:
    case EventKind::CrossNeg:
      return 2;
  }
  return 0;
}

std::optional<DiagramError> validate(const MorseDiagram& d) {
  int width = 0, starts = 0, ends = 0;
  for (size_t i = 0; i < d.events.size(); ++i) {
    const auto& ev = d.events[i];
    const int in = in_arity(ev.kind);
    if (ev.pos < 0) return DiagramError{int(i), "negative position"};
    if (ev.pos > width - in)
      return DiagramError{int(i), "position " + std::to_string(ev.pos) +
                                      " does not fit width " +
                                      std::to_string(width)};
    width += width_delta(ev.kind);
    if (is_orientation_start(ev.kind)) ++starts;
    if (is_orientation_end(ev.kind)) ++ends;
  }
  if (width != 0)
    return DiagramError{-1, "diagram ends with width " + std::to_string(width)};
  if (starts != ends) return DiagramError{-1, "unbalanced endpoint events"};
  if (starts > 1) return DiagramError{-1, "more than one open component"};
  return std::nullopt;
}

int num_crossings(const MorseDiagram& d) {
  int n = 0;
  for (const auto& ev : d.events) n += is_crossing(ev.kind) ? 1 : 0;
  return n;
}

int max_width(const MorseDiagram& d) {
  int w = 0, m = 0;
  for (const auto& ev : d.events) {
    w += width_delta(ev.kind);
    m = std::max(m, w);
  }
  return m;
}

bool is_closed(const MorseDiagram& d) {
  for (const auto& ev : d.events)
    if (is_endpoint(ev.kind)) return false;
  return true;
}

Skeleton build_skeleton(const MorseDiagram& d) {
  Skeleton sk;
  const int n = int(d.events.size());
  sk.below.assign(n, {-1, -1});
  sk.above.assign(n, {-1, -1});
  sk.width.assign(n + 1, 0);
  std::vector<int> frontier;  // live seg ids, left to right
  for (int i = 0; i < n; ++i) {
    const auto& ev = d.events[i];
    sk.width[i] = int(frontier.size());
    const int in = in_arity(ev.kind), out = out_arity(ev.kind);
    for (int k = 0; k < in; ++k) {
      const int s = frontier[ev.pos + k];
      sk.segs[s].death = {i, Side::Below, k};
      sk.below[i][k] = s;
    }
    frontier.erase(frontier.begin() + ev.pos, frontier.begin() + ev.pos + in);
    for (int k = 0; k < out; ++k) {
      const int s = int(sk.segs.size());
      sk.segs.push_back({{i, Side::Above, k}, {-1, Side::Below, -1}});
      sk.above[i][k] = s;
      frontier.insert(frontier.begin() + ev.pos + k, s);
    }
  }
  sk.width[n] = int(frontier.size());
  assert(frontier.empty());
  return sk;
}

bool step(const Skeleton& sk, const MorseDiagram& d, int seg, Dir dir,
          int* next_seg, Dir* next_dir) {
  if (dir == Dir::Up) {
    const PortRef p = sk.segs[seg].death;
    switch (d.events[p.event].kind) {
      case EventKind::Cap:
        *next_seg = sk.below[p.event][p.slot ^ 1];
        *next_dir = Dir::Down;
        return true;
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
        *next_seg = sk.above[p.event][p.slot ^ 1];
        *next_dir = Dir::Up;
        return true;
      default:  // Head or LegDown vertex
        return false;
    }
  }
  const PortRef p = sk.segs[seg].birth;
  switch (d.events[p.event].kind) {
    case EventKind::Cup:
      *next_seg = sk.above[p.event][p.slot ^ 1];
      *next_dir = Dir::Up;
      return true;
    case EventKind::CrossPos:
    case EventKind::CrossNeg:
      *next_seg = sk.below[p.event][p.slot ^ 1];
      *next_dir = Dir::Down;
      return true;
    default:  // Leg or HeadDown vertex
      return false;
  }
}

Components find_components(const MorseDiagram& d, const Skeleton& sk) {
  Components cs;
  const int nseg = int(sk.segs.size());
  cs.comp_of_seg.assign(nseg, -1);
  std::vector<int> lowest;
  std::vector<bool> open_flag;
  for (int s0 = 0; s0 < nseg; ++s0) {
    if (cs.comp_of_seg[s0] >= 0) continue;
    const int id = int(lowest.size());
    int low = sk.segs[s0].birth.event;
    bool open = false;
    cs.comp_of_seg[s0] = id;
    for (Dir d0 : {Dir::Up, Dir::Down}) {
      int seg = s0;
      Dir dir = d0;
      while (true) {
        int ns;
        Dir nd;
        if (!step(sk, d, seg, dir, &ns, &nd)) {
          open = true;
          break;
        }
        if (cs.comp_of_seg[ns] >= 0) break;  // closed the loop
        cs.comp_of_seg[ns] = id;
        low = std::min(low, sk.segs[ns].birth.event);
        seg = ns;
        dir = nd;
      }
    }
    lowest.push_back(low);
    open_flag.push_back(open);
  }
  // Renumber components by lowest incident event.
  const int n = int(lowest.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lowest[a] < lowest[b]; });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  for (auto& c : cs.comp_of_seg) c = rank[c];
  cs.count = n;
  cs.anchor.resize(n);
  cs.open_comp = -1;
  for (int i = 0; i < n; ++i) {
    cs.anchor[rank[i]] = lowest[i];
    if (open_flag[i]) cs.open_comp = rank[i];
  }
  return cs;
}

namespace {

// Assign flow directions along the curve through (seg0, dir0); walks forward,
// and if the curve terminates, backward from the seed as well.
void propagate(const MorseDiagram& d, const Skeleton& sk, std::vector<Dir>& sd,
               std::vector<bool>& set, int seg0, Dir dir0) {
  int seg = seg0;
  Dir dir = dir0;
  bool ended = false;
  while (!set[seg]) {
    sd[seg] = dir;
    set[seg] = true;
    int ns;
    Dir nd;
    if (!step(sk, d, seg, dir, &ns, &nd)) {
      ended = true;
      break;
    }
    seg = ns;
    dir = nd;
  }
  if (!ended) return;  // looped around a closed component
  // Walk against the flow; each seg reached has flow opposite to the walk.
  seg = seg0;
  dir = flip(dir0);
  while (true) {
    int ns;
    Dir nd;
    if (!step(sk, d, seg, dir, &ns, &nd)) return;
    seg = ns;
    dir = nd;
    if (set[seg]) return;
    sd[seg] = flip(dir);
    set[seg] = true;
  }
}

OrientedDiagram orient_impl(const MorseDiagram& d, const std::vector<int>* flips,
                            const std::vector<std::pair<PortRef, Dir>>* seeds) {
  if (auto err = validate(d))
    throw std::invalid_argument("invalid diagram: " + err->message);
  OrientedDiagram od;
  od.d = d;
  od.sk = build_skeleton(d);
  od.comps = find_components(d, od.sk);
  const int nseg = int(od.sk.segs.size());
  od.seg_dir.assign(nseg, Dir::Up);
  std::vector<bool> set(nseg, false);

  // The open component is forced by its endpoints.
  for (size_t i = 0; i < d.events.size(); ++i) {
    const EventKind k = d.events[i].kind;
    if (k == EventKind::Leg)
      propagate(d, od.sk, od.seg_dir, set, od.sk.above[i][0], Dir::Up);
    else if (k == EventKind::LegDown)
      propagate(d, od.sk, od.seg_dir, set, od.sk.below[i][0], Dir::Down);
  }

  std::vector<int> mode(od.comps.count, 0);  // 0 default, -1 flipped, 2 seeded
  if (flips) {
    for (int f : *flips) {
      if (f < 0 || f >= od.comps.count)
        throw std::invalid_argument("flip index out of range");
      if (f == od.comps.open_comp)
        throw std::invalid_argument("cannot flip the open component");
      mode[f] = -1;
    }
  }
  if (seeds) {
    for (const auto& [port, dir] : *seeds) {
      const int seg = od.sk.seg_at(port);
      if (seg < 0) throw std::invalid_argument("seed port has no strand");
      const int comp = od.comps.comp_of_seg[seg];
      if (comp == od.comps.open_comp || set[seg]) continue;
      propagate(d, od.sk, od.seg_dir, set, seg, dir);
      mode[comp] = 2;
    }
  }

  // Remaining closed components: lowest cup, left leg up (clockwise circles)
  // unless flipped.
  for (int c = 0; c < od.comps.count; ++c) {
    if (c == od.comps.open_comp || mode[c] == 2) continue;
    const int cup = od.comps.anchor[c];
    assert(d.events[cup].kind == EventKind::Cup);
    const int seg = od.sk.above[cup][0];
    if (!set[seg])
      propagate(d, od.sk, od.seg_dir, set, seg,
                mode[c] == -1 ? Dir::Down : Dir::Up);
  }
  return od;
}

}  // namespace

OrientedDiagram orient(const MorseDiagram& d, const std::vector<int>& flips) {
  return orient_impl(d, &flips, nullptr);
}

OrientedDiagram orient_seeded(const MorseDiagram& d,
                              const std::vector<std::pair<PortRef, Dir>>& seeds) {
  return orient_impl(d, nullptr, &seeds);
}

Rotation rotation_number(const OrientedDiagram& od) {
  Rotation r;
  r.per_comp2.assign(od.comps.count, 0);
  for (size_t i = 0; i < od.d.events.size(); ++i) {
    const EventKind k = od.d.events[i].kind;
    int seg_right;
    if (k == EventKind::Cup)
      seg_right = od.sk.above[i][1];
    else if (k == EventKind::Cap)
      seg_right = od.sk.below[i][1];
    else
      continue;
    // Right leg up = extremum turns counterclockwise (+1), else clockwise.
    const int sign = od.seg_dir[seg_right] == Dir::Up ? 1 : -1;
    r.total2 += sign;
    r.per_comp2[od.comps.comp_of_seg[seg_right]] += sign;
  }
  return r;
}

int crossing_sign(const OrientedDiagram& od, int event) {
  assert(is_crossing(od.d.events[event].kind));
  const Dir d_slash = od.seg_dir[od.sk.below[event][0]];  // runs to top-right
  const Dir d_back = od.seg_dir[od.sk.below[event][1]];   // runs to top-left
  const bool same = d_slash == d_back;
  const bool pos = od.d.events[event].kind == EventKind::CrossPos;
  return same == pos ? 1 : -1;
}

int writhe(const OrientedDiagram& od) {
  int w = 0;
  for (size_t i = 0; i < od.d.events.size(); ++i)
    if (is_crossing(od.d.events[i].kind)) w += crossing_sign(od, int(i));
  return w;
}

std::vector<GaussEntry> gauss_code(const OrientedDiagram& od) {
  std::vector<GaussEntry> out;
  int seg = -1;
  Dir dir = Dir::Up;
  for (size_t i = 0; i < od.d.events.size(); ++i) {
    const EventKind k = od.d.events[i].kind;
    if (k == EventKind::Leg) {
      seg = od.sk.above[i][0];
      dir = Dir::Up;
    } else if (k == EventKind::LegDown) {
      seg = od.sk.below[i][0];
      dir = Dir::Down;
    }
  }
  if (seg < 0) return out;
  while (true) {
    // The far end of the current segment is the next vertex we pass.
    const PortRef arr =
        dir == Dir::Up ? od.sk.segs[seg].death : od.sk.segs[seg].birth;
    const EventKind k = od.d.events[arr.event].kind;
    if (is_crossing(k)) {
      const bool on_slash = arr.side == Side::Below ? arr.slot == 0 : arr.slot == 1;
      const bool over = on_slash == (k == EventKind::CrossPos);
      out.push_back({arr.event, over, crossing_sign(od, arr.event)});
    }
    int ns;
    Dir nd;
    if (!step(od.sk, od.d, seg, dir, &ns, &nd)) break;
    seg = ns;
    dir = nd;
  }
  return out;
}

std::vector<int> odd_crossings(const OrientedDiagram& od) {
  const auto gc = gauss_code(od);
  std::vector<int> odd;
  for (size_t i = 0; i < gc.size(); ++i) {
    for (size_t j = i + 1; j < gc.size(); ++j) {
      if (gc[j].event != gc[i].event) continue;
      if ((j - i - 1) % 2 == 1) odd.push_back(gc[i].event);
      break;
    }
  }
  return odd;
}

bool all_crossings_even(const OrientedDiagram& od) {
  return odd_crossings(od).empty();
}

int odd_writhe(const OrientedDiagram& od) {
  int j = 0;
  for (int e : odd_crossings(od)) j += crossing_sign(od, e);
  return j;
}

}  // namespace knotoid
