#include "knotoid/moves.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace knotoid {
namespace {

// width below each event; index n = final width
std::vector<int> level_widths(const MorseDiagram& d) {
  std::vector<int> w(d.events.size() + 1, 0);
  for (size_t i = 0; i < d.events.size(); ++i)
    w[i + 1] = w[i] + width_delta(d.events[i].kind);
  return w;
}

EventKind flip_cross(EventKind k) {
  return k == EventKind::CrossPos ? EventKind::CrossNeg : EventKind::CrossPos;
}

void append(std::vector<Move>& out, std::vector<Move> v) {
  for (auto& m : v) out.push_back(std::move(m));
}

}  // namespace

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::MinMaxInsert: return "minmax-insert";
    case MoveKind::MinMaxDelete: return "minmax-delete";
    case MoveKind::Slide: return "slide";
    case MoveKind::RIIInsert: return "rii-insert";
    case MoveKind::RIIDelete: return "rii-delete";
    case MoveKind::RIII: return "riii";
    case MoveKind::DistantCommute: return "commute";
    case MoveKind::EndpointShift: return "endpoint-shift";
    case MoveKind::RIInsert: return "ri-insert";
    case MoveKind::RIDelete: return "ri-delete";
  }
  return "?";
}

MoveResult apply_move(const MorseDiagram& d, const Move& mv) {
  const int n = int(d.events.size());
  if (mv.at < 0 || mv.ndel < 0 || mv.at + mv.ndel > n)
    throw std::invalid_argument("move window out of range");
  MoveResult r;
  r.d.events.reserve(size_t(n - mv.ndel) + mv.ins.size());
  r.event_map.reserve(size_t(n - mv.ndel) + mv.ins.size());
  for (int j = 0; j < mv.at; ++j) {
    r.d.events.push_back(d.events[j]);
    r.event_map.push_back(j);
  }
  for (const MorseEvent& ev : mv.ins) {
    r.d.events.push_back(ev);
    r.event_map.push_back(-1);
  }
  for (int j = mv.at + mv.ndel; j < n; ++j) {
    r.d.events.push_back(d.events[j]);
    r.event_map.push_back(j);
  }
  if (auto err = validate(r.d))
    throw std::invalid_argument("move produces invalid diagram: " + err->message);
  return r;
}

OrientedDiagram splice_oriented(const OrientedDiagram& od, int at, int ndel,
                                const std::vector<MorseEvent>& ins) {
  MoveResult r = apply_move(od.d, Move{MoveKind::DistantCommute, at, ndel, ins});
  std::vector<std::pair<PortRef, Dir>> seeds;
  for (size_t j = 0; j < r.event_map.size(); ++j) {
    const int i = r.event_map[j];
    if (i < 0) continue;
    const EventKind k = od.d.events[i].kind;
    for (int s = 0; s < in_arity(k); ++s)
      seeds.push_back(
          {PortRef{int(j), Side::Below, s}, od.seg_dir[od.sk.below[i][s]]});
    for (int s = 0; s < out_arity(k); ++s)
      seeds.push_back(
          {PortRef{int(j), Side::Above, s}, od.seg_dir[od.sk.above[i][s]]});
  }
  return orient_seeded(r.d, seeds);
}

OrientedDiagram apply_move_oriented(const OrientedDiagram& od, const Move& mv) {
  return splice_oriented(od, mv.at, mv.ndel, mv.ins);
}

std::vector<Move> minmax_insert_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  const auto w = level_widths(d);
  for (int g = 0; g <= int(d.events.size()); ++g)
    for (int p = 0; p + 1 <= w[g]; ++p) {
      // reroute the strand at p over a new maximum (left) or minimum (right)
      out.push_back({MoveKind::MinMaxInsert, g, 0,
                     {{EventKind::Cup, p + 1}, {EventKind::Cap, p}}});
      out.push_back({MoveKind::MinMaxInsert, g, 0,
                     {{EventKind::Cup, p}, {EventKind::Cap, p + 1}}});
    }
  return out;
}

std::vector<Move> minmax_delete_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  for (int i = 0; i + 1 < int(d.events.size()); ++i) {
    const MorseEvent a = d.events[i], b = d.events[i + 1];
    if (a.kind != EventKind::Cup || b.kind != EventKind::Cap) continue;
    // b.pos == a.pos would erase a free circle, which is not an isotopy
    if (b.pos + 1 == a.pos || b.pos == a.pos + 1)
      out.push_back({MoveKind::MinMaxDelete, i, 2, {}});
  }
  return out;
}

std::vector<Move> slide_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  for (int i = 0; i + 1 < int(d.events.size()); ++i) {
    const MorseEvent a = d.events[i], b = d.events[i + 1];
    if (is_crossing(a.kind) && b.kind == EventKind::Cap) {
      // strand entering the crossing from beside the cap stays over/under,
      // so the crossing kind flips when it passes to the other side
      if (b.pos == a.pos + 1)
        out.push_back({MoveKind::Slide, i, 2,
                       {{flip_cross(a.kind), a.pos + 1}, {EventKind::Cap, a.pos}}});
      if (b.pos + 1 == a.pos)
        out.push_back({MoveKind::Slide, i, 2,
                       {{flip_cross(a.kind), b.pos}, {EventKind::Cap, b.pos + 1}}});
    }
    if (a.kind == EventKind::Cup && is_crossing(b.kind)) {
      if (b.pos == a.pos + 1)
        out.push_back({MoveKind::Slide, i, 2,
                       {{EventKind::Cup, a.pos + 1}, {flip_cross(b.kind), a.pos}}});
      if (b.pos + 1 == a.pos)
        out.push_back({MoveKind::Slide, i, 2,
                       {{EventKind::Cup, b.pos}, {flip_cross(b.kind), b.pos + 1}}});
    }
  }
  return out;
}

std::vector<Move> rii_insert_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  const auto w = level_widths(d);
  for (int g = 0; g <= int(d.events.size()); ++g)
    for (int p = 0; p + 2 <= w[g]; ++p) {
      out.push_back({MoveKind::RIIInsert, g, 0,
                     {{EventKind::CrossPos, p}, {EventKind::CrossNeg, p}}});
      out.push_back({MoveKind::RIIInsert, g, 0,
                     {{EventKind::CrossNeg, p}, {EventKind::CrossPos, p}}});
    }
  return out;
}

std::vector<Move> rii_delete_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  for (int i = 0; i + 1 < int(d.events.size()); ++i) {
    const MorseEvent a = d.events[i], b = d.events[i + 1];
    if (is_crossing(a.kind) && is_crossing(b.kind) && a.pos == b.pos &&
        a.kind != b.kind)
      out.push_back({MoveKind::RIIDelete, i, 2, {}});
  }
  return out;
}

std::vector<Move> riii_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  for (int i = 0; i + 2 < int(d.events.size()); ++i) {
    const MorseEvent a = d.events[i], b = d.events[i + 1], c = d.events[i + 2];
    if (!is_crossing(a.kind) || !is_crossing(b.kind) || !is_crossing(c.kind))
      continue;
    if (a.pos != c.pos) continue;
    // The braid relation and its consequences by cancelling pairs: valid
    // exactly when the first two or the last two crossings share a kind.
    if (a.kind != b.kind && b.kind != c.kind) continue;
    if (b.pos == a.pos + 1)
      out.push_back({MoveKind::RIII, i, 3,
                     {{c.kind, a.pos + 1}, {b.kind, a.pos}, {a.kind, a.pos + 1}}});
    if (b.pos + 1 == a.pos)
      out.push_back({MoveKind::RIII, i, 3,
                     {{c.kind, b.pos}, {b.kind, b.pos + 1}, {a.kind, b.pos}}});
  }
  return out;
}

std::vector<Move> commute_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  for (int i = 0; i + 1 < int(d.events.size()); ++i) {
    const MorseEvent a = d.events[i], b = d.events[i + 1];
    const MoveKind kind = (is_endpoint(a.kind) || is_endpoint(b.kind))
                              ? MoveKind::EndpointShift
                              : MoveKind::DistantCommute;
    // b entirely left of a's inputs: b keeps its position, a shifts by b's
    // width change once b happens first
    if (b.pos + in_arity(b.kind) <= a.pos)
      out.push_back({kind, i, 2,
                     {{b.kind, b.pos},
                      {a.kind, a.pos + width_delta(b.kind)}}});
    // b entirely right of a's outputs
    if (b.pos >= a.pos + out_arity(a.kind))
      out.push_back({kind, i, 2,
                     {{b.kind, b.pos - width_delta(a.kind)},
                      {a.kind, a.pos}}});
  }
  return out;
}

std::vector<Move> ri_insert_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  const auto w = level_widths(d);
  for (int g = 0; g <= int(d.events.size()); ++g)
    for (int p = 0; p + 1 <= w[g]; ++p)
      for (EventKind x : {EventKind::CrossPos, EventKind::CrossNeg}) {
        out.push_back({MoveKind::RIInsert, g, 0,
                       {{EventKind::Cup, p + 1}, {x, p}, {EventKind::Cap, p + 1}}});
        out.push_back({MoveKind::RIInsert, g, 0,
                       {{EventKind::Cup, p}, {x, p + 1}, {EventKind::Cap, p}}});
      }
  return out;
}

std::vector<Move> ri_delete_moves(const MorseDiagram& d) {
  std::vector<Move> out;
  for (int i = 0; i + 2 < int(d.events.size()); ++i) {
    const MorseEvent a = d.events[i], b = d.events[i + 1], c = d.events[i + 2];
    if (a.kind != EventKind::Cup || !is_crossing(b.kind) ||
        c.kind != EventKind::Cap)
      continue;
    if (c.pos == a.pos && (b.pos + 1 == a.pos || b.pos == a.pos + 1))
      out.push_back({MoveKind::RIDelete, i, 3, {}});
  }
  return out;
}

std::vector<Move> all_moves(const MorseDiagram& d, bool include_ri) {
  std::vector<Move> out;
  append(out, minmax_insert_moves(d));
  append(out, minmax_delete_moves(d));
  append(out, slide_moves(d));
  append(out, rii_insert_moves(d));
  append(out, rii_delete_moves(d));
  append(out, riii_moves(d));
  append(out, commute_moves(d));
  if (include_ri) {
    append(out, ri_insert_moves(d));
    append(out, ri_delete_moves(d));
  }
  return out;
}

OrientedDiagram random_equivalent(const OrientedDiagram& od,
                                  std::mt19937_64& rng,
                                  const RandomWalkOptions& opt) {
  OrientedDiagram cur = od;
  for (int step = 0; step < opt.steps; ++step) {
    const auto widths = level_widths(cur.d);
    const int ncross = num_crossings(cur.d);
    const int nev = int(cur.d.events.size());
    std::vector<Move> cands;
    for (Move& m : all_moves(cur.d, false)) {
      // size of the rewritten diagram: only levels and events inside the
      // replaced window change
      int delta_cross = 0;
      for (int j = m.at; j < m.at + m.ndel; ++j)
        delta_cross -= is_crossing(cur.d.events[j].kind);
      int wlevel = widths[m.at], wmax = wlevel;
      for (const MorseEvent& ev : m.ins) {
        delta_cross += is_crossing(ev.kind);
        wlevel += width_delta(ev.kind);
        wmax = std::max(wmax, wlevel);
      }
      if (nev - m.ndel + int(m.ins.size()) <= opt.max_events &&
          ncross + delta_cross <= opt.max_crossings && wmax <= opt.max_width)
        cands.push_back(std::move(m));
    }
    if (cands.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
    cur = apply_move_oriented(cur, cands[pick(rng)]);
  }
  return cur;
}

}  // namespace knotoid
