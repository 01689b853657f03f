#include "knotoid/engine.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <utility>

namespace knotoid {
namespace {

using E = EventKind;
using Key = std::vector<std::uint8_t>;       // strand labels, left to right
using StateMap = std::map<Key, LaurentPoly>;

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Tuple packing: leftmost strand most significant, matching the row-major
// pair convention (left*N + right) of the model matrices.
int pack_key(const Key& k, int N) {
  int v = 0;
  for (auto x : k) v = v * N + x;
  return v;
}

Key unpack_key(int v, int len, int N) {
  Key k(len);
  for (int i = len - 1; i >= 0; --i) {
    k[size_t(i)] = std::uint8_t(v % N);
    v /= N;
  }
  return k;
}

void prune_zeros(StateMap& s) {
  for (auto it = s.begin(); it != s.end();)
    it = it->second.is_zero() ? s.erase(it) : std::next(it);
}

// Applies one cup/cap/crossing to every state.  p is the key index of the
// event's leftmost strand (any boundary-label prefix already added in).
void apply_event(E kind, int p, const Matrix& mat, int N, const StateMap& cur,
                 StateMap& next) {
  if (kind == E::Cup) {
    for (const auto& [k, v] : cur)
      for (int la = 0; la < N; ++la)
        for (int lb = 0; lb < N; ++lb) {
          const LaurentPoly& w = mat.at(la, lb);
          if (w.is_zero()) continue;
          Key nk = k;
          nk.insert(nk.begin() + p, {std::uint8_t(la), std::uint8_t(lb)});
          next[nk] += v * w;
        }
  } else if (kind == E::Cap) {
    for (const auto& [k, v] : cur) {
      const LaurentPoly& w = mat.at(k[size_t(p)], k[size_t(p) + 1]);
      if (w.is_zero()) continue;
      Key nk = k;
      nk.erase(nk.begin() + p, nk.begin() + p + 2);
      next[nk] += v * w;
    }
  } else {  // crossing
    for (const auto& [k, v] : cur) {
      const int x0 = k[size_t(p)], x1 = k[size_t(p) + 1];
      for (int y0 = 0; y0 < N; ++y0)
        for (int y1 = 0; y1 < N; ++y1) {
          const LaurentPoly& w = mat.at(y0 * N + y1, x0 * N + x1);
          if (w.is_zero()) continue;
          Key nk = k;
          nk[size_t(p)] = std::uint8_t(y0);
          nk[size_t(p) + 1] = std::uint8_t(y1);
          next[nk] += v * w;
        }
    }
  }
}

// Sweeps events [e0, e1) of od.  State keys are (boundary labels fixed so
// far, in event order) ++ (frontier labels); nfixed counts the former.
StateMap run_sweep(const OrientedDiagram& od, const QuantumModel& m, int e0,
                   int e1, StateMap states, int nfixed,
                   const EngineLimits& lim) {
  const MorseDiagram& d = od.d;
  const Skeleton& sk = od.sk;
  const int N = m.N;

  auto chirality = [&](int seg) {
    if (!m.oriented) return kLeftUp;
    return od.seg_dir[size_t(seg)] == Dir::Up ? kLeftUp : kRightUp;
  };

  for (int e = e0; e < e1; ++e) {
    if (sk.width[size_t(e)] > lim.max_width)
      throw EngineLimitError("contract: frontier width " +
                             std::to_string(sk.width[size_t(e)]) +
                             " exceeds limit " + std::to_string(lim.max_width));
    const MorseEvent ev = d.events[size_t(e)];
    StateMap next;
    switch (ev.kind) {
      // endpoint events where a strand is born, carrying a free label
      case E::Leg:
      case E::HeadDown: {
        for (const auto& [k, v] : states)
          for (int bl = 0; bl < N; ++bl) {
            Key nk;
            nk.reserve(k.size() + 2);
            nk.assign(k.begin(), k.begin() + nfixed);
            nk.push_back(std::uint8_t(bl));
            nk.insert(nk.end(), k.begin() + nfixed, k.end());
            nk.insert(nk.begin() + nfixed + 1 + ev.pos, std::uint8_t(bl));
            next[nk] += v;
          }
        ++nfixed;
        break;
      }
      // endpoint events where a strand dies; its label becomes the free index
      case E::Head:
      case E::LegDown: {
        for (const auto& [k, v] : states) {
          Key nk;
          nk.reserve(k.size());
          nk.assign(k.begin(), k.begin() + nfixed);
          nk.push_back(k[size_t(nfixed + ev.pos)]);
          for (int i = nfixed; i < int(k.size()); ++i)
            if (i != nfixed + ev.pos) nk.push_back(k[size_t(i)]);
          next[nk] += v;
        }
        ++nfixed;
        break;
      }
      case E::Cup:
        apply_event(E::Cup, nfixed + ev.pos, m.cup[chirality(sk.above[size_t(e)][0])],
                    N, states, next);
        break;
      case E::Cap:
        apply_event(E::Cap, nfixed + ev.pos, m.cap[chirality(sk.below[size_t(e)][0])],
                    N, states, next);
        break;
      case E::CrossPos:
      case E::CrossNeg:
        apply_event(ev.kind, nfixed + ev.pos,
                    m.crossing(ev.kind, od.seg_dir[size_t(sk.below[size_t(e)][0])],
                               od.seg_dir[size_t(sk.below[size_t(e)][1])]),
                    N, states, next);
        break;
    }
    prune_zeros(next);
    states = std::move(next);
  }
  return states;
}

bool matrices_equal(const Matrix& x, const Matrix& y, std::string* w) {
  if (x.rows != y.rows || x.cols != y.cols) {
    if (w)
      *w = "shape " + std::to_string(x.rows) + "x" + std::to_string(x.cols) +
           " vs " + std::to_string(y.rows) + "x" + std::to_string(y.cols);
    return false;
  }
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < x.cols; ++c)
      if (x.at(r, c) != y.at(r, c)) {
        if (w)
          *w = "entry (" + std::to_string(r) + "," + std::to_string(c) +
               "): lhs = " + x.at(r, c).str() + ", rhs = " + y.at(r, c).str();
        return false;
      }
  return true;
}

// --- fragments (no endpoint events, explicit strand directions) --------------

struct FragGraph {
  std::vector<MorseEvent> events;
  int w_in = 0, w_out = 0;
  int nstrands = 0;
  std::vector<std::array<int, 2>> below, above;  // strand ids per event
  std::vector<int> bottom, top;                  // strand id per boundary slot
  std::vector<std::array<int, 2>> sbirth, sdeath;  // {event, slot}; event -1 = boundary
};

FragGraph build_frag(std::vector<MorseEvent> evs, int w_in) {
  FragGraph fg;
  fg.events = std::move(evs);
  fg.w_in = w_in;
  std::vector<int> cur;
  auto fresh = [&](int bev, int bslot) {
    fg.sbirth.push_back({bev, bslot});
    fg.sdeath.push_back({-9, -9});
    return fg.nstrands++;
  };
  for (int i = 0; i < w_in; ++i) cur.push_back(fresh(-1, i));
  fg.bottom = cur;
  fg.below.assign(fg.events.size(), {-1, -1});
  fg.above.assign(fg.events.size(), {-1, -1});
  for (int e = 0; e < int(fg.events.size()); ++e) {
    const MorseEvent ev = fg.events[size_t(e)];
    if (is_endpoint(ev.kind))
      throw std::logic_error("fragment contains an endpoint event");
    const int in = in_arity(ev.kind), out = out_arity(ev.kind);
    if (ev.pos < 0 || ev.pos + in > int(cur.size()))
      throw std::logic_error("fragment event out of range");
    for (int j = 0; j < in; ++j) {
      const int s = cur[size_t(ev.pos + j)];
      fg.sdeath[size_t(s)] = {e, j};
      fg.below[size_t(e)][size_t(j)] = s;
    }
    cur.erase(cur.begin() + ev.pos, cur.begin() + ev.pos + in);
    for (int j = 0; j < out; ++j) {
      const int s = fresh(e, j);
      fg.above[size_t(e)][size_t(j)] = s;
      cur.insert(cur.begin() + ev.pos + j, s);
    }
  }
  fg.w_out = int(cur.size());
  fg.top = cur;
  for (int i = 0; i < fg.w_out; ++i) fg.sdeath[size_t(cur[size_t(i)])] = {-1, i};
  return fg;
}

// Follow the curve past the far end of strand s moving in direction dir;
// false when a boundary port is reached (bottom ports 0..w_in-1, then top).
bool frag_step(const FragGraph& fg, int s, Dir dir, int* ns, Dir* nd, int* port) {
  if (dir == Dir::Up) {
    const auto [ev, slot] = fg.sdeath[size_t(s)];
    if (ev < 0) {
      *port = fg.w_in + slot;
      return false;
    }
    if (fg.events[size_t(ev)].kind == E::Cap) {
      *ns = fg.below[size_t(ev)][size_t(slot ^ 1)];
      *nd = Dir::Down;
    } else {
      *ns = fg.above[size_t(ev)][size_t(slot ^ 1)];
      *nd = Dir::Up;
    }
  } else {
    const auto [ev, slot] = fg.sbirth[size_t(s)];
    if (ev < 0) {
      *port = slot;
      return false;
    }
    if (fg.events[size_t(ev)].kind == E::Cup) {
      *ns = fg.above[size_t(ev)][size_t(slot ^ 1)];
      *nd = Dir::Up;
    } else {
      *ns = fg.below[size_t(ev)][size_t(slot ^ 1)];
      *nd = Dir::Down;
    }
  }
  return true;
}

struct FragPath {
  std::vector<std::pair<int, Dir>> walk;  // (strand, dir when traversed forward)
  bool closed = false;
};

std::vector<FragPath> trace_paths(const FragGraph& fg) {
  std::vector<char> vis(size_t(fg.nstrands), 0);
  std::vector<FragPath> out;
  auto open_walk = [&](int s0, Dir d0) {
    FragPath p;
    int s = s0;
    Dir dd = d0;
    for (;;) {
      p.walk.push_back({s, dd});
      vis[size_t(s)] = 1;
      int ns = -1, port = -1;
      Dir nd = Dir::Up;
      if (!frag_step(fg, s, dd, &ns, &nd, &port)) break;
      s = ns;
      dd = nd;
    }
    out.push_back(std::move(p));
  };
  for (int i = 0; i < fg.w_in; ++i)
    if (!vis[size_t(fg.bottom[size_t(i)])]) open_walk(fg.bottom[size_t(i)], Dir::Up);
  for (int i = 0; i < fg.w_out; ++i)
    if (!vis[size_t(fg.top[size_t(i)])]) open_walk(fg.top[size_t(i)], Dir::Down);
  for (int s0 = 0; s0 < fg.nstrands; ++s0) {
    if (vis[size_t(s0)]) continue;
    FragPath p;
    p.closed = true;
    int s = s0;
    Dir dd = Dir::Up;
    do {
      p.walk.push_back({s, dd});
      vis[size_t(s)] = 1;
      int ns = -1, port = -1;
      Dir nd = Dir::Up;
      frag_step(fg, s, dd, &ns, &nd, &port);
      s = ns;
      dd = nd;
    } while (!(s == s0 && dd == Dir::Up));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Dir> assign_dirs(const FragGraph& fg, const std::vector<FragPath>& paths,
                             unsigned mask) {
  std::vector<Dir> sd(size_t(fg.nstrands), Dir::Up);
  for (size_t j = 0; j < paths.size(); ++j) {
    const bool fwd = ((mask >> j) & 1u) == 0;
    for (const auto& [s, dd] : paths[j].walk)
      sd[size_t(s)] = fwd ? dd : flip(dd);
  }
  return sd;
}

std::vector<Dir> boundary_sig(const FragGraph& fg, const std::vector<Dir>& sd) {
  std::vector<Dir> sig;
  sig.reserve(size_t(fg.w_in + fg.w_out));
  for (int i = 0; i < fg.w_in; ++i) sig.push_back(sd[size_t(fg.bottom[size_t(i)])]);
  for (int i = 0; i < fg.w_out; ++i) sig.push_back(sd[size_t(fg.top[size_t(i)])]);
  return sig;
}

std::string sig_str(const std::vector<Dir>& sig, int w_in) {
  std::string s = "bottom ";
  for (int i = 0; i < int(sig.size()); ++i) {
    if (i == w_in) s += " top ";
    s += sig[size_t(i)] == Dir::Up ? 'u' : 'd';
  }
  if (w_in == int(sig.size())) s += " top -";
  return s;
}

// N^w_out x N^w_in operator of the fragment under the given strand directions.
Matrix contract_fragment(const QuantumModel& m, const FragGraph& fg,
                         const std::vector<Dir>& sd) {
  const int N = m.N;
  Matrix out(ipow(N, fg.w_out), ipow(N, fg.w_in));
  auto chir = [&](int s) {
    if (!m.oriented) return kLeftUp;
    return sd[size_t(s)] == Dir::Up ? kLeftUp : kRightUp;
  };
  for (int col = 0; col < out.cols; ++col) {
    StateMap states;
    states[unpack_key(col, fg.w_in, N)] = LaurentPoly::one();
    for (int e = 0; e < int(fg.events.size()); ++e) {
      const MorseEvent ev = fg.events[size_t(e)];
      const Matrix* mat = nullptr;
      if (ev.kind == E::Cup)
        mat = &m.cup[chir(fg.above[size_t(e)][0])];
      else if (ev.kind == E::Cap)
        mat = &m.cap[chir(fg.below[size_t(e)][0])];
      else
        mat = &m.crossing(ev.kind, sd[size_t(fg.below[size_t(e)][0])],
                          sd[size_t(fg.below[size_t(e)][1])]);
      StateMap next;
      apply_event(ev.kind, ev.pos, *mat, N, states, next);
      prune_zeros(next);
      states = std::move(next);
    }
    for (const auto& [k, v] : states) out.at(pack_key(k, N), col) += v;
  }
  return out;
}

struct FragPair {
  std::vector<MorseEvent> lhs, rhs;
  int w_in;
};

// Both sides of each pair must contract to equal operators; for oriented
// models, under every strand-direction pattern (matched across the pair by
// the boundary signature).
CheckResult check_pairs(const QuantumModel& m, const std::string& name,
                        const std::vector<FragPair>& pairs) {
  CheckResult res{name, true, ""};
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    const FragGraph L = build_frag(pairs[pi].lhs, pairs[pi].w_in);
    const FragGraph R = build_frag(pairs[pi].rhs, pairs[pi].w_in);
    if (L.w_out != R.w_out) {
      res.pass = false;
      res.witness = "variant " + std::to_string(pi) + ": output arity mismatch";
      return res;
    }
    const auto pl = trace_paths(L), pr = trace_paths(R);
    if (!m.oriented) {
      std::string w;
      if (!matrices_equal(contract_fragment(m, L, assign_dirs(L, pl, 0)),
                          contract_fragment(m, R, assign_dirs(R, pr, 0)), &w)) {
        res.pass = false;
        res.witness = "variant " + std::to_string(pi) + ": " + w;
        return res;
      }
      continue;
    }
    std::map<std::vector<Dir>, std::vector<Dir>> rhs_by_sig;
    for (unsigned mask = 0; mask < (1u << pr.size()); ++mask) {
      auto sd = assign_dirs(R, pr, mask);
      rhs_by_sig[boundary_sig(R, sd)] = sd;
    }
    for (unsigned mask = 0; mask < (1u << pl.size()); ++mask) {
      const auto sdl = assign_dirs(L, pl, mask);
      const auto sig = boundary_sig(L, sdl);
      const auto it = rhs_by_sig.find(sig);
      if (it == rhs_by_sig.end()) {
        res.pass = false;
        res.witness = "variant " + std::to_string(pi) + " [" + sig_str(sig, L.w_in) +
                      "]: no matching direction pattern on the other side";
        return res;
      }
      std::string w;
      if (!matrices_equal(contract_fragment(m, L, sdl),
                          contract_fragment(m, R, it->second), &w)) {
        res.pass = false;
        res.witness = "variant " + std::to_string(pi) + " [" + sig_str(sig, L.w_in) +
                      "]: " + w;
        return res;
      }
    }
  }
  return res;
}

CheckResult equality_check(const std::string& name, const Matrix& lhs,
                           const Matrix& rhs, const std::string& label) {
  CheckResult res{name, true, ""};
  std::string w;
  if (!matrices_equal(lhs, rhs, &w)) {
    res.pass = false;
    res.witness = label.empty() ? w : label + ": " + w;
  }
  return res;
}

}  // namespace

Matrix contract(const OrientedDiagram& od, const QuantumModel& m,
                const EngineLimits& lim) {
  StateMap init;
  init[Key{}] = LaurentPoly::one();
  const StateMap fin =
      run_sweep(od, m, 0, int(od.d.events.size()), std::move(init), 0, lim);
  const bool open = !is_closed(od.d);
  Matrix out(open ? m.N : 1, open ? m.N : 1);
  for (const auto& [k, v] : fin) {
    if (open)
      out.at(k[0], k[1]) += v;
    else
      out.at(0, 0) += v;
  }
  return out;
}

Matrix enumerate_oracle(const OrientedDiagram& od, const QuantumModel& m,
                        const EngineLimits& lim) {
  const MorseDiagram& d = od.d;
  const Skeleton& sk = od.sk;
  const int N = m.N;
  if (int(sk.segs.size()) > lim.max_segments)
    throw EngineLimitError("enumerate_oracle: " + std::to_string(sk.segs.size()) +
                           " segments exceed limit " +
                           std::to_string(lim.max_segments));

  std::vector<int> endsegs;  // segments at the open ends, in event order
  for (int e = 0; e < int(d.events.size()); ++e) {
    const EventKind k = d.events[size_t(e)].kind;
    if (!is_endpoint(k)) continue;
    endsegs.push_back(out_arity(k) ? sk.above[size_t(e)][0]
                                   : sk.below[size_t(e)][0]);
  }
  const bool open = !endsegs.empty();
  Matrix out(open ? N : 1, open ? N : 1);
  std::vector<int> lab(sk.segs.size(), -1);

  auto chirality = [&](int seg) {
    if (!m.oriented) return kLeftUp;
    return od.seg_dir[size_t(seg)] == Dir::Up ? kLeftUp : kRightUp;
  };

  auto go = [&](auto&& self, int e, const LaurentPoly& acc) -> void {
    if (e == int(d.events.size())) {
      if (open)
        out.at(lab[size_t(endsegs[0])], lab[size_t(endsegs[1])]) += acc;
      else
        out.at(0, 0) += acc;
      return;
    }
    const MorseEvent ev = d.events[size_t(e)];
    switch (ev.kind) {
      case E::Leg:
      case E::HeadDown: {  // a strand is born here; enumerate its label
        const int s = sk.above[size_t(e)][0];
        for (int bl = 0; bl < N; ++bl) {
          lab[size_t(s)] = bl;
          self(self, e + 1, acc);
        }
        break;
      }
      case E::Head:
      case E::LegDown:  // the dying strand's label is already assigned
        self(self, e + 1, acc);
        break;
      case E::Cup: {
        const int s0 = sk.above[size_t(e)][0], s1 = sk.above[size_t(e)][1];
        const Matrix& mat = m.cup[chirality(s0)];
        for (int la = 0; la < N; ++la)
          for (int lb = 0; lb < N; ++lb) {
            const LaurentPoly& w = mat.at(la, lb);
            if (w.is_zero()) continue;
            lab[size_t(s0)] = la;
            lab[size_t(s1)] = lb;
            self(self, e + 1, acc * w);
          }
        break;
      }
      case E::Cap: {
        const int b0 = sk.below[size_t(e)][0], b1 = sk.below[size_t(e)][1];
        const LaurentPoly& w =
            m.cap[chirality(b0)].at(lab[size_t(b0)], lab[size_t(b1)]);
        if (!w.is_zero()) self(self, e + 1, acc * w);
        break;
      }
      case E::CrossPos:
      case E::CrossNeg: {
        const int b0 = sk.below[size_t(e)][0], b1 = sk.below[size_t(e)][1];
        const int a0 = sk.above[size_t(e)][0], a1 = sk.above[size_t(e)][1];
        const Matrix& mat = m.crossing(ev.kind, od.seg_dir[size_t(b0)],
                                       od.seg_dir[size_t(b1)]);
        const int cin = lab[size_t(b0)] * N + lab[size_t(b1)];
        for (int y0 = 0; y0 < N; ++y0)
          for (int y1 = 0; y1 < N; ++y1) {
            const LaurentPoly& w = mat.at(y0 * N + y1, cin);
            if (w.is_zero()) continue;
            lab[size_t(a0)] = y0;
            lab[size_t(a1)] = y1;
            self(self, e + 1, acc * w);
          }
        break;
      }
    }
  };
  go(go, 0, LaurentPoly::one());
  return out;
}

bool oracle_check(const OrientedDiagram& od, const QuantumModel& m,
                  std::string* witness) {
  const Matrix a = contract(od, m);
  const Matrix b = enumerate_oracle(od, m);
  std::string w;
  if (matrices_equal(a, b, &w)) return true;
  if (witness) *witness = "sweep vs enumeration: " + w;
  return false;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass) os << "  [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

VerifyReport verify_model(const QuantumModel& m) {
  VerifyReport rep;
  const int N = m.N;
  const Matrix i1 = Matrix::identity(N);
  const Matrix i2 = Matrix::identity(N * N);

  {
    CheckResult c{"r_inverse", true, ""};
    std::string w;
    if (!matrices_equal(m.rpos * m.rneg, i2, &w))
      c = {"r_inverse", false, "rpos*rneg: " + w};
    else if (!matrices_equal(m.rneg * m.rpos, i2, &w))
      c = {"r_inverse", false, "rneg*rpos: " + w};
    rep.checks.push_back(c);
  }
  {
    auto ybe = [&](const std::string& name, const Matrix& r) {
      const Matrix b1 = kron(r, i1), b2 = kron(i1, r);
      rep.checks.push_back(
          equality_check(name, b1 * b2 * b1, b2 * b1 * b2, ""));
    };
    ybe("ybe_pos", m.rpos);
    ybe("ybe_neg", m.rneg);
  }

  auto ev = [](E k, int p) { return MorseEvent{k, p}; };
  rep.checks.push_back(check_pairs(
      m, "snake",
      {{{ev(E::Cup, 1), ev(E::Cap, 0)}, {}, 1},
       {{ev(E::Cup, 0), ev(E::Cap, 1)}, {}, 1}}));
  rep.checks.push_back(check_pairs(
      m, "slide_cap_pos",
      {{{ev(E::CrossPos, 0), ev(E::Cap, 1)}, {ev(E::CrossNeg, 1), ev(E::Cap, 0)}, 3}}));
  rep.checks.push_back(check_pairs(
      m, "slide_cap_neg",
      {{{ev(E::CrossNeg, 0), ev(E::Cap, 1)}, {ev(E::CrossPos, 1), ev(E::Cap, 0)}, 3}}));
  rep.checks.push_back(check_pairs(
      m, "slide_cup_pos",
      {{{ev(E::Cup, 0), ev(E::CrossPos, 1)}, {ev(E::Cup, 1), ev(E::CrossNeg, 0)}, 1}}));
  rep.checks.push_back(check_pairs(
      m, "slide_cup_neg",
      {{{ev(E::Cup, 0), ev(E::CrossNeg, 1)}, {ev(E::Cup, 1), ev(E::CrossPos, 0)}, 1}}));

  if (m.oriented) {
    rep.checks.push_back(check_pairs(
        m, "rii_antiparallel",
        {{{ev(E::CrossPos, 0), ev(E::CrossNeg, 0)}, {}, 2},
         {{ev(E::CrossNeg, 0), ev(E::CrossPos, 0)}, {}, 2}}));
    {
      CheckResult c{"mu_conversion", true, ""};
      for (int side = 0; side < 2 && c.pass; ++side) {
        const Matrix* x0 = side ? &m.cap[0] : &m.cup[0];
        const Matrix* x1 = side ? &m.cap[1] : &m.cup[1];
        for (int a = 0; a < N && c.pass; ++a)
          for (int b = 0; b < N && c.pass; ++b) {
            const int vsum = m.label_value[size_t(a)] + m.label_value[size_t(b)];
            const LaurentPoly want = x0->at(a, b) * m.mu_half.pow(vsum);
            if (x1->at(a, b) != want) {
              c.pass = false;
              c.witness = std::string(side ? "cap" : "cup") + " entry (" +
                          std::to_string(a) + "," + std::to_string(b) +
                          "): right-up = " + x1->at(a, b).str() +
                          ", left-up * mu^((va+vb)/2) = " + want.str();
            }
          }
      }
      rep.checks.push_back(c);
    }
    {
      CheckResult c{"charge_conservation", true, ""};
      for (int kind = 0; kind < 2 && c.pass; ++kind) {
        const Matrix& r = kind ? m.rneg : m.rpos;
        for (int row = 0; row < N * N && c.pass; ++row)
          for (int col = 0; col < N * N && c.pass; ++col) {
            if (r.at(row, col).is_zero()) continue;
            const int vy = m.label_value[size_t(row / N)] + m.label_value[size_t(row % N)];
            const int vx = m.label_value[size_t(col / N)] + m.label_value[size_t(col % N)];
            if (vy != vx) {
              c.pass = false;
              c.witness = std::string(kind ? "rneg" : "rpos") + " entry (" +
                          std::to_string(row) + "," + std::to_string(col) +
                          ") = " + r.at(row, col).str() +
                          " changes the label sum " + std::to_string(vx) +
                          " -> " + std::to_string(vy);
            }
          }
      }
      rep.checks.push_back(c);
    }
  }
  return rep;
}

bool functoriality_check(const OrientedDiagram& od, const QuantumModel& m,
                         int split, std::string* witness) {
  const int n = int(od.d.events.size());
  if (split < 0 || split > n)
    throw std::invalid_argument("functoriality_check: split out of range");
  const EngineLimits lim;
  const Matrix full = contract(od, m, lim);

  StateMap init;
  init[Key{}] = LaurentPoly::one();
  const StateMap lower = run_sweep(od, m, 0, split, std::move(init), 0, lim);
  int nl = 0;
  for (int e = 0; e < split; ++e)
    if (is_endpoint(od.d.events[size_t(e)].kind)) ++nl;

  std::map<Key, std::vector<std::pair<Key, LaurentPoly>>> by_mid;
  for (const auto& [k, v] : lower) {
    Key pre(k.begin(), k.begin() + nl), mid(k.begin() + nl, k.end());
    by_mid[mid].push_back({pre, v});
  }

  const bool open = !is_closed(od.d);
  Matrix got(open ? m.N : 1, open ? m.N : 1);
  for (const auto& [mid, entries] : by_mid) {
    StateMap ui;
    ui[mid] = LaurentPoly::one();
    const StateMap upper = run_sweep(od, m, split, n, std::move(ui), 0, lim);
    for (const auto& [uk, uv] : upper)
      for (const auto& [pre, lv] : entries) {
        Key all = pre;
        all.insert(all.end(), uk.begin(), uk.end());
        const LaurentPoly term = lv * uv;
        if (open)
          got.at(all[0], all[1]) += term;
        else
          got.at(0, 0) += term;
      }
  }
  std::string w;
  if (matrices_equal(full, got, &w)) return true;
  if (witness)
    *witness = "split at " + std::to_string(split) + ": whole vs composed: " + w;
  return false;
}

}  // namespace knotoid
