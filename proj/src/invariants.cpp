#include "knotoid/invariants.hpp"

#include <stdexcept>
#include <vector>

#include "knotoid/moves.hpp"

namespace knotoid {
namespace {

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

LaurentPoly loop_value() {
  LaurentPoly d = LaurentPoly::mono(Var::A, 4, CycScalar(-1));
  d += LaurentPoly::mono(Var::A, -4, CycScalar(-1));
  return d;  // -A^2 - A^-2
}

// Contraction of the open arc of a crossingless diagram through its extrema:
// the product of one bilinear-form factor per max/min, transposed when the
// arc enters the extremum on its right leg.  Entry (a, b) is the value with
// the walk's start labeled a and its end labeled b.
Matrix arc_product(const MorseDiagram& d, const Skeleton& sk, const Matrix& m,
                   int start, int end) {
  Matrix p = Matrix::identity(m.rows);
  int ev = start;
  int seg = out_arity(d.events[ev].kind) ? sk.above[ev][0] : sk.below[ev][0];
  while (true) {
    const Segment& s = sk.segs[seg];
    const PortRef far = s.birth.event == ev ? s.death : s.birth;
    ev = far.event;
    if (ev == end) break;
    p = p * (far.slot == 0 ? m : transpose(m));
    const int other = far.slot ^ 1;
    seg = far.side == Side::Below ? sk.below[ev][other] : sk.above[ev][other];
  }
  return p;
}

// Runs fn(coeff_e2, smoothed) over the full smoothing expansion, where coeff =
// A^(coeff_e2 / 2) and `smoothed` is the crossingless rewritten word (vertical
// pass, or a turn-back written cap-then-cup).
template <typename Fn>
void for_each_smoothing(const MorseDiagram& d, Fn&& fn) {
  std::vector<int> cross;
  for (size_t i = 0; i < d.events.size(); ++i)
    if (is_crossing(d.events[i].kind)) cross.push_back(int(i));
  const size_t n = cross.size();
  if (n > 20) throw EngineLimitError("too many crossings to expand");
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    MorseDiagram s;
    s.events.reserve(d.events.size() + n);
    int e2 = 0;
    size_t ci = 0;
    for (size_t i = 0; i < d.events.size(); ++i) {
      const MorseEvent ev = d.events[i];
      if (!is_crossing(ev.kind)) {
        s.events.push_back(ev);
        continue;
      }
      const bool turn = (mask >> ci) & 1;
      ++ci;
      const int a_weight = ev.kind == EventKind::CrossPos ? 1 : -1;
      e2 += turn ? -2 * a_weight : 2 * a_weight;
      if (turn) {
        s.events.push_back({EventKind::Cap, ev.pos});
        s.events.push_back({EventKind::Cup, ev.pos});
      }
    }
    fn(e2, s);
  }
}

LaurentPoly half_trace(const Matrix& m) {
  return m.trace() * CycScalar::dyadic(1, 1);
}

}  // namespace

Matrix bracket_matrix(const MorseDiagram& d, const EngineLimits& lim) {
  return contract(orient(d), bracket_model(), lim);
}

Matrix bracket_matrix_state_sum(const MorseDiagram& d) {
  const Matrix& m = bracket_model().cup[kLeftUp];
  const bool open = !is_closed(d);
  Matrix out(open ? 2 : 1, open ? 2 : 1);
  const LaurentPoly delta = loop_value();
  for_each_smoothing(d, [&](int e2, const MorseDiagram& s) {
    const Skeleton sk = build_skeleton(s);
    const Components comps = find_components(s, sk);
    const int loops = comps.count - (open ? 1 : 0);
    LaurentPoly w = LaurentPoly::mono(Var::A, e2) * delta.pow(loops);
    if (!open) {
      out.at(0, 0) += w;
      return;
    }
    int start = -1, stop = -1, first = -1;
    for (size_t i = 0; i < s.events.size(); ++i) {
      const EventKind k = s.events[i].kind;
      if (!is_endpoint(k)) continue;
      if (first < 0) first = int(i);
      (is_orientation_start(k) ? start : stop) = int(i);
    }
    Matrix arc = arc_product(s, sk, m, start, stop);
    if (start != first) arc = transpose(arc);
    out = out + arc * w;
  });
  return out;
}

LaurentPoly rotational_bracket(const MorseDiagram& d) {
  LaurentPoly out;
  const LaurentPoly delta = loop_value();
  const bool open = !is_closed(d);
  for_each_smoothing(d, [&](int e2, const MorseDiagram& s) {
    LaurentPoly w = LaurentPoly::mono(Var::A, e2);
    const OrientedDiagram os = orient(s);
    const int loops = os.comps.count - (open ? 1 : 0);
    w *= delta.pow(loops);
    if (open)
      w *= LaurentPoly::mono(Var::L,
                             rotation_number(os).per_comp2[os.comps.open_comp]);
    out += w;
  });
  return out;
}

LaurentPoly binary_bracket(const MorseDiagram& d, const EngineLimits& lim) {
  return contract(orient(d), binary_model(), lim).at(0, 0);
}

LaurentPoly normalized_binary_bracket(const OrientedDiagram& od,
                                      const EngineLimits& lim) {
  return LaurentPoly::mono(Var::A, -2 * writhe(od)) *
         contract(od, binary_model(), lim).at(0, 0);
}

AlexanderResult alexander_invariant(const OrientedDiagram& od,
                                    const EngineLimits& lim) {
  AlexanderResult r;
  r.tilde = contract(od, alexander_model(), lim);
  r.rot2 = rotation_number(od).total2;
  Expt e{};
  e[int(Var::Q)] = std::int16_t(-r.rot2);
  r.normalized = r.tilde * LaurentPoly::mono(e, CycScalar::zeta_pow(-r.rot2));
  r.scalar = half_trace(r.normalized);
  return r;
}

SawollekResult sawollek_invariant(const OrientedDiagram& od,
                                  const EngineLimits& lim) {
  SawollekResult r;
  r.z = contract(od, sawollek_model(), lim) * LaurentPoly::constant(
                                                  CycScalar::dyadic(1, 1));
  r.rot2 = rotation_number(od).total2;
  // A curl scales the sweep matrix by (i*s^-1*t)^{drot}, so the factor that
  // makes W insensitive to curls is its inverse power, (-i*s*t^-1)^{rot}.
  Expt e{};
  e[int(Var::S)] = std::int16_t(r.rot2);
  e[int(Var::T)] = std::int16_t(-r.rot2);
  r.w = r.z * LaurentPoly::mono(e, CycScalar::zeta_pow(3 * r.rot2));
  r.scalar = r.w.trace();
  return r;
}

HomflyptResult homflypt_invariant(const OrientedDiagram& od, int n,
                                  const EngineLimits& lim) {
  HomflyptResult r;
  r.n = n;
  const QuantumModel m = homflypt_model(n);
  r.raw = contract(od, m, lim);
  r.writhe = writhe(od);
  r.normalized = r.raw * LaurentPoly::mono(Var::Q, -2 * (n + 1) * r.writhe);
  for (int v : m.label_value) r.circle += LaurentPoly::mono(Var::Q, -2 * v);
  r.numerator = r.normalized.trace();
  LaurentPoly q;
  if (r.numerator.exact_div(r.circle, &q))
    r.scalar = q;
  else if (is_closed(od.d))
    throw std::logic_error("closed-diagram value not divisible by the circle");
  return r;
}

SkeinTriple skein_triple(const OrientedDiagram& od, int crossing_event) {
  if (crossing_event < 0 || crossing_event >= int(od.d.events.size()) ||
      !is_crossing(od.d.events[crossing_event].kind))
    throw std::invalid_argument("skein_triple: not a crossing event");
  const int p = od.d.events[crossing_event].pos;
  SkeinTriple t;
  t.pos = splice_oriented(od, crossing_event, 1, {{EventKind::CrossPos, p}});
  t.neg = splice_oriented(od, crossing_event, 1, {{EventKind::CrossNeg, p}});
  const bool parallel = od.seg_dir[od.sk.below[crossing_event][0]] ==
                        od.seg_dir[od.sk.below[crossing_event][1]];
  if (parallel)
    t.smooth = splice_oriented(od, crossing_event, 1, {});
  else
    t.smooth = splice_oriented(od, crossing_event, 1,
                               {{EventKind::Cap, p}, {EventKind::Cup, p}});
  return t;
}

}  // namespace knotoid
