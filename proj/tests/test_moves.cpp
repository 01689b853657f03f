#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/engine.hpp"
#include "knotoid/models.hpp"
#include "knotoid/morse_io.hpp"
#include "knotoid/moves.hpp"

using namespace knotoid;

namespace {

MorseDiagram dg(const std::string& word) {
  MorseDiagram d;
  std::string err;
  REQUIRE_MESSAGE(parse_morse(word, &d, &err), err);
  REQUIRE_FALSE(validate(d));
  return d;
}

std::vector<QuantumModel> all_models() {
  return {bracket_model(), binary_model(), alexander_model(), sawollek_model(),
          homflypt_model(1), homflypt_model(2)};
}

int count_kind(const MorseDiagram& d, EventKind k) {
  int n = 0;
  for (const auto& e : d.events) n += (e.kind == k);
  return n;
}

}  // namespace

TEST_CASE("apply_move splices events and reports the event map") {
  const MorseDiagram d = dg("leg 0 / head 0");
  const Move mv{MoveKind::MinMaxInsert,
                1,
                0,
                {{EventKind::Cup, 1}, {EventKind::Cap, 0}}};
  const MoveResult r = apply_move(d, mv);
  CHECK(r.d == dg("leg 0 / cup 1 / cap 0 / head 0"));
  CHECK(r.event_map == std::vector<int>{0, -1, -1, 1});

  const Move del{MoveKind::MinMaxDelete, 1, 2, {}};
  CHECK(apply_move(r.d, del).d == d);

  CHECK_THROWS_AS(apply_move(d, Move{MoveKind::MinMaxDelete, 1, 4, {}}),
                  std::invalid_argument);
  // rewrite that breaks the word: cap consumes strands that do not exist
  CHECK_THROWS_AS(
      apply_move(d, Move{MoveKind::MinMaxInsert, 0, 0, {{EventKind::Cap, 0}}}),
      std::invalid_argument);
}

TEST_CASE("insert generators and delete generators are mutually inverse") {
  const std::vector<std::string> words = {
      "leg 0 / head 0",
      "cup 0 / cap 0",
      "cup 0 / leg 1 / cap 1 / headd 1 / cap 0",
      "cup 0 / cup 2 / xp 1 / xp 1 / xp 1 / cap 1 / cap 0",
  };
  for (const auto& w : words) {
    const MorseDiagram d = dg(w);
    for (const Move& mv : minmax_insert_moves(d)) {
      const MoveResult r = apply_move(d, mv);
      bool restored = false;
      for (const Move& del : minmax_delete_moves(r.d))
        if (del.at == mv.at && apply_move(r.d, del).d == d) restored = true;
      CHECK(restored);
    }
    for (const Move& mv : rii_insert_moves(d)) {
      const MoveResult r = apply_move(d, mv);
      bool restored = false;
      for (const Move& del : rii_delete_moves(r.d))
        if (del.at == mv.at && apply_move(r.d, del).d == d) restored = true;
      CHECK(restored);
    }
    for (const Move& mv : ri_insert_moves(d)) {
      const MoveResult r = apply_move(d, mv);
      bool restored = false;
      for (const Move& del : ri_delete_moves(r.d))
        if (del.at == mv.at && apply_move(r.d, del).d == d) restored = true;
      CHECK(restored);
    }
  }
}

TEST_CASE("slides and braid moves are involutions") {
  const MorseDiagram d =
      dg("cup 0 / cup 2 / xp 0 / xp 1 / xp 0 / cap 1 / cap 0");
  CHECK(!slide_moves(d).empty());
  for (const Move& mv : slide_moves(d)) {
    const MoveResult r = apply_move(d, mv);
    bool restored = false;
    for (const Move& back : slide_moves(r.d))
      if (back.at == mv.at && apply_move(r.d, back).d == d) restored = true;
    CHECK(restored);
  }
  CHECK(!riii_moves(d).empty());
  for (const Move& mv : riii_moves(d)) {
    const MoveResult r = apply_move(d, mv);
    bool restored = false;
    for (const Move& back : riii_moves(r.d))
      if (back.at == mv.at && apply_move(r.d, back).d == d) restored = true;
    CHECK(restored);
  }
  for (const Move& mv : commute_moves(d)) {
    const MoveResult r = apply_move(d, mv);
    bool restored = false;
    for (const Move& back : commute_moves(r.d))
      if (back.at == mv.at && apply_move(r.d, back).d == d) restored = true;
    CHECK(restored);
  }
}

TEST_CASE("braid move needs a repeated kind among the first or last two") {
  const MorseDiagram mixed =
      dg("cup 0 / cup 2 / xp 0 / xn 1 / xp 0 / cap 1 / cap 0");
  CHECK(riii_moves(mixed).empty());
  const MorseDiagram tail =
      dg("cup 0 / cup 2 / xn 0 / xp 1 / xp 0 / cap 1 / cap 0");
  CHECK(riii_moves(tail).size() == 1);
  // crossings all on the same pair of strands: no braid pattern
  const MorseDiagram twist =
      dg("cup 0 / cup 2 / xp 1 / xp 1 / xp 1 / cap 1 / cap 0");
  CHECK(riii_moves(twist).empty());
}

TEST_CASE("every generated move preserves the contraction of every model") {
  const std::vector<std::string> words = {
      "leg 0 / head 0",
      "cup 0 / leg 1 / cap 1 / headd 1 / cap 0",
      "cup 0 / leg 0 / xp 0 / xp 1 / head 2 / cap 0",
      "cup 0 / cup 2 / xp 1 / xp 1 / xp 1 / cap 1 / cap 0",
      "cup 0 / cup 2 / xp 0 / xp 1 / xp 0 / cap 1 / cap 0",
      "leg 0 / cup 1 / xp 0 / xp 0 / cap 1 / head 0",
      "leg 0 / cup 1 / cap 0 / head 0",
      "cup 0 / xp 0 / xn 0 / cap 0",
  };
  const auto models = all_models();
  std::map<MoveKind, int> used;
  for (const auto& w : words) {
    const OrientedDiagram od = orient(dg(w));
    std::vector<Matrix> base;
    for (const auto& m : models) base.push_back(contract(od, m));
    for (const Move& mv : all_moves(od.d, false)) {
      ++used[mv.kind];
      const OrientedDiagram od2 = apply_move_oriented(od, mv);
      CHECK(writhe(od2) == writhe(od));
      CHECK(rotation_number(od2).total2 == rotation_number(od).total2);
      for (size_t i = 0; i < models.size(); ++i) {
        const Matrix got = contract(od2, models[i]);
        const bool same = got == base[i];
        CHECK(same);
        if (!same)
          MESSAGE("model ", models[i].name, " move ", move_kind_name(mv.kind),
                  " at ", mv.at, " on: ", w);
      }
    }
  }
  // the battery exercises every curve-preserving family
  CHECK(used[MoveKind::MinMaxInsert] > 0);
  CHECK(used[MoveKind::MinMaxDelete] > 0);
  CHECK(used[MoveKind::Slide] > 0);
  CHECK(used[MoveKind::RIIInsert] > 0);
  CHECK(used[MoveKind::RIIDelete] > 0);
  CHECK(used[MoveKind::RIII] > 0);
  CHECK(used[MoveKind::DistantCommute] > 0);
  CHECK(used[MoveKind::EndpointShift] > 0);
}

TEST_CASE("moves keep flipped closed components flipped") {
  const MorseDiagram d = dg("cup 0 / leg 0 / xp 0 / xp 1 / head 2 / cap 0");
  const OrientedDiagram od = orient(d, {0});
  const auto models = all_models();
  for (const Move& mv : all_moves(d, false)) {
    const OrientedDiagram od2 = apply_move_oriented(od, mv);
    CHECK(writhe(od2) == writhe(od));
    for (const auto& m : models) CHECK(contract(od2, m) == contract(od, m));
  }
}

TEST_CASE("curl moves change writhe and rotation by one unit") {
  const MorseDiagram d = dg("leg 0 / head 0");
  const OrientedDiagram od = orient(d);
  CHECK(writhe(od) == 0);
  for (const Move& mv : ri_insert_moves(d)) {
    const OrientedDiagram od2 = apply_move_oriented(od, mv);
    const int dw = writhe(od2) - writhe(od);
    const int drot2 = rotation_number(od2).total2 - rotation_number(od).total2;
    CHECK(std::abs(dw) == 1);
    CHECK(std::abs(drot2) == 2);
  }
  CHECK(ri_insert_moves(d).size() == 4);  // 2 shapes x 2 crossing kinds
}

TEST_CASE("random walks are deterministic and preserve the curve") {
  const MorseDiagram d =
      dg("cup 0 / cup 2 / xp 1 / xp 1 / xp 1 / cap 1 / cap 0");
  const OrientedDiagram od = orient(d);
  RandomWalkOptions opt;
  opt.steps = 30;
  opt.max_crossings = 8;
  opt.max_width = 6;
  opt.max_events = 40;

  std::mt19937_64 rng1(12345), rng2(12345), rng3(999);
  const OrientedDiagram w1 = random_equivalent(od, rng1, opt);
  const OrientedDiagram w2 = random_equivalent(od, rng2, opt);
  const OrientedDiagram w3 = random_equivalent(od, rng3, opt);
  CHECK(w1.d == w2.d);
  CHECK(w1.d.events != d.events);  // the walk moved
  CHECK(max_width(w1.d) <= opt.max_width);
  CHECK(num_crossings(w1.d) <= opt.max_crossings);
  CHECK(int(w1.d.events.size()) <= opt.max_events);

  for (const auto* walked : {&w1, &w3}) {
    CHECK(writhe(*walked) == writhe(od));
    CHECK(rotation_number(*walked).total2 == rotation_number(od).total2);
    for (const auto& m : all_models())
      CHECK(contract(*walked, m) == contract(od, m));
  }
}

TEST_CASE("random walks keep endpoints intact") {
  const MorseDiagram d = dg("leg 0 / cup 1 / xp 0 / xp 0 / cap 1 / head 0");
  const OrientedDiagram od = orient(d);
  std::mt19937_64 rng(7);
  RandomWalkOptions opt;
  opt.steps = 40;
  opt.max_crossings = 7;
  opt.max_width = 5;
  const OrientedDiagram w = random_equivalent(od, rng, opt);
  CHECK(count_kind(w.d, EventKind::Leg) == 1);
  CHECK(count_kind(w.d, EventKind::Head) == 1);
  CHECK(writhe(w) == writhe(od));
  for (const auto& m : all_models()) CHECK(contract(w, m) == contract(od, m));
}
