// Command-line driver: parse .morse diagram files, compute invariants,
// verify models, run oracle cross-checks, and emit equivalent diagrams
// produced by random move sequences.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation failure,
// 3 model-verification failure, 4 internal consistency failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotoid/diagram.hpp"
#include "knotoid/engine.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/models.hpp"
#include "knotoid/morse_io.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/poly.hpp"

using nlohmann::json;
using namespace knotoid;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitConsistency = 4;

struct CliError {
  int code;
  std::string message;
};

std::string diagram_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

MorseDiagram load_diagram(const std::string& path) {
  MorseDiagram d;
  std::string err;
  if (!load_morse_file(path, &d, &err))
    throw CliError{kExitParse, path + ": " + err};
  if (auto v = validate(d)) {
    std::string at = v->event_index >= 0
                         ? " (event " + std::to_string(v->event_index) + ")"
                         : "";
    throw CliError{kExitParse, path + ": " + v->message + at};
  }
  return d;
}

OrientedDiagram orient_diagram(const MorseDiagram& d,
                               const std::vector<int>& flips) {
  Skeleton sk = build_skeleton(d);
  Components comps = find_components(d, sk);
  for (int c : flips) {
    if (c < 0 || c >= comps.count)
      throw CliError{kExitUsage, "--flip: no component " + std::to_string(c)};
    if (c == comps.open_comp)
      throw CliError{kExitUsage,
                     "--flip: component " + std::to_string(c) +
                         " is the open component; its orientation is fixed "
                         "by the endpoints"};
  }
  return orient(d, flips);
}

// Rotation numbers are half-integers; rot2 stores twice the value.
std::string rot_string(int rot2) {
  if (rot2 % 2 == 0) return std::to_string(rot2 / 2);
  return std::to_string(rot2) + "/2";
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

// The matrix/scalar pair a model id assigns to a diagram.  The matrix is the
// raw sweep value the worked examples quote (bracket matrix, Alexander tilde,
// curl-stable two-variable form, Homflypt sweep); normalized variants are
// derivable from the writhe/rotation fields emitted alongside.
struct ModelOutput {
  Matrix matrix = Matrix::identity(1);
  std::optional<LaurentPoly> scalar;
};

ModelOutput compute_model(const OrientedDiagram& od, const std::string& id,
                          bool binary_normalized = false) {
  ModelOutput out;
  if (id == "bracket") {
    out.matrix = bracket_matrix(od.d);
  } else if (id == "binary") {
    LaurentPoly v = binary_normalized ? normalized_binary_bracket(od)
                                      : binary_bracket(od.d);
    out.matrix = Matrix::identity(1);
    out.matrix.at(0, 0) = v;
    out.scalar = v;
  } else if (id == "alexander") {
    auto r = alexander_invariant(od);
    out.matrix = r.tilde;
    out.scalar = r.scalar;
  } else if (id == "sawollek") {
    auto r = sawollek_invariant(od);
    out.matrix = r.w;
    out.scalar = r.scalar;
  } else if (id.rfind("homflypt:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(id.substr(9));
    } catch (...) {
      throw CliError{kExitUsage, "bad model id: " + id};
    }
    if (n < 1) throw CliError{kExitUsage, "homflypt level must be >= 1"};
    auto r = homflypt_invariant(od, n);
    out.matrix = r.raw;
    out.scalar = r.scalar;
  } else {
    throw CliError{kExitUsage, "unknown model id: " + id};
  }
  return out;
}

json schema_json(const std::string& name, const std::string& model,
                 const ModelOutput& mo, const OrientedDiagram& od) {
  json j;
  j["diagram"] = name;
  j["model"] = model;
  j["matrix"] = matrix_json(mo.matrix);
  j["scalar"] = mo.scalar ? json(mo.scalar->str()) : json(nullptr);
  j["writhe"] = writhe(od);
  j["odd_writhe"] = is_closed(od.d) ? json(nullptr) : json(odd_writhe(od));
  j["rotation"] = rot_string(rotation_number(od).total2);
  return j;
}

void print_matrix(const Matrix& m) { std::cout << m.str() << "\n"; }

std::string standard_model_ids[] = {"bracket", "binary", "alexander",
                                    "sawollek", "homflypt:1"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact quantum invariants of knotoid diagrams in Morse form.\n"
      "Diagram files use the .morse grammar: one event per line\n"
      "(leg/legd/head/headd/cup/cap/xp/xn P), '#' comments, '/' separators."};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string file;
  std::vector<int> flips;
  auto add_file = [&](CLI::App* sub, bool with_flips = true) {
    sub->add_option("file", file, "diagram file (.morse)")->required();
    if (with_flips)
      sub->add_option("--flip", flips,
                      "closed components to orient clockwise instead");
  };

  auto* c_validate = app.add_subcommand("validate", "check a diagram file");
  add_file(c_validate, false);

  auto* c_rot = app.add_subcommand("rot", "rotation number");
  add_file(c_rot);

  auto* c_bracket = app.add_subcommand("bracket", "bracket matrix");
  add_file(c_bracket);

  auto* c_rotbracket =
      app.add_subcommand("rotbracket", "rotation-graded bracket polynomial");
  add_file(c_rotbracket);

  bool normalized = false;
  auto* c_binary = app.add_subcommand("binary", "binary bracket polynomial");
  add_file(c_binary);
  c_binary->add_flag("--normalized", normalized,
                     "multiply by A^{-writhe} (curl-stable form)");

  auto* c_alex = app.add_subcommand("alexander", "Alexander state-sum matrix");
  add_file(c_alex);

  auto* c_saw =
      app.add_subcommand("sawollek", "two-variable Alexander-type invariant");
  add_file(c_saw);

  int homn = 1;
  auto* c_hom = app.add_subcommand("homflypt", "one-variable specialization");
  add_file(c_hom);
  c_hom->add_option("--n", homn, "level (matrix size n+1)")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string model_id;
  auto* c_verify =
      app.add_subcommand("verify-model", "check the structural identities");
  c_verify->add_option("--model", model_id,
                       "bracket|binary|alexander|sawollek|homflypt:<n>")
      ->required();

  std::string oracle_model;
  std::vector<std::string> oracle_files;
  auto* c_oracle = app.add_subcommand(
      "oracle-check", "compare the sweep engine against brute enumeration");
  c_oracle->add_option("files", oracle_files, "diagram files (.morse)")
      ->required();
  c_oracle->add_option("--model", oracle_model,
                       "restrict to one model id (default: all)");

  int steps = 50;
  std::uint64_t seed = 0;
  auto* c_moves = app.add_subcommand(
      "moves", "emit an equivalent diagram after random moves");
  add_file(c_moves);
  c_moves->add_option("--steps", steps, "number of moves")->required();
  c_moves->add_option("--seed", seed, "random seed")->required();

  std::string batch_dir, batch_model;
  auto* c_batch =
      app.add_subcommand("batch", "run one model over a directory");
  c_batch->add_option("dir", batch_dir, "directory of .morse files")
      ->required();
  c_batch->add_option("--model", batch_model,
                      "bracket|binary|alexander|sawollek|homflypt:<n>")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_validate->parsed()) {
      MorseDiagram d;
      std::string err;
      if (!load_morse_file(file, &d, &err)) {
        if (as_json) {
          json j{{"diagram", diagram_name(file)}, {"ok", false}, {"error", err}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cerr << file << ": " << err << "\n";
        }
        return kExitParse;
      }
      if (auto v = validate(d)) {
        if (as_json) {
          json j{{"diagram", diagram_name(file)},
                 {"ok", false},
                 {"error", v->message},
                 {"event", v->event_index}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cerr << file << ": " << v->message;
          if (v->event_index >= 0) std::cerr << " (event " << v->event_index << ")";
          std::cerr << "\n";
        }
        return kExitParse;
      }
      Skeleton sk = build_skeleton(d);
      Components comps = find_components(d, sk);
      if (as_json) {
        json j{{"diagram", diagram_name(file)},
               {"ok", true},
               {"events", (int)d.events.size()},
               {"crossings", num_crossings(d)},
               {"max_width", max_width(d)},
               {"components", comps.count},
               {"closed", is_closed(d)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "ok: " << d.events.size() << " events, "
                  << num_crossings(d) << " crossings, width "
                  << max_width(d) << ", " << comps.count
                  << (comps.count == 1 ? " component" : " components")
                  << (is_closed(d) ? " (closed)" : "") << "\n";
      }
      return kExitOk;
    }

    if (c_rot->parsed()) {
      OrientedDiagram od = orient_diagram(load_diagram(file), flips);
      std::string r = rot_string(rotation_number(od).total2);
      if (as_json) {
        json j{{"diagram", diagram_name(file)}, {"rotation", r}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << r << "\n";
      }
      return kExitOk;
    }

    if (c_verify->parsed()) {
      QuantumModel m;
      std::string err;
      if (!model_by_id(model_id, &m, &err))
        throw CliError{kExitUsage, err};
      VerifyReport rep = verify_model(m);
      if (as_json) {
        json checks = json::array();
        for (const auto& c : rep.checks) {
          json j{{"name", c.name}, {"pass", c.pass}};
          if (!c.pass) j["witness"] = c.witness;
          checks.push_back(j);
        }
        json j{{"model", model_id},
               {"all_pass", rep.all_pass()},
               {"checks", checks}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << rep.summary();
      }
      return rep.all_pass() ? kExitOk : kExitVerify;
    }

    if (c_oracle->parsed()) {
      std::vector<std::string> ids;
      if (!oracle_model.empty())
        ids.push_back(oracle_model);
      else
        ids.assign(std::begin(standard_model_ids),
                   std::end(standard_model_ids));
      bool all_ok = true;
      json results = json::array();
      for (const auto& f : oracle_files) {
        OrientedDiagram od = orient_diagram(load_diagram(f), {});
        for (const auto& id : ids) {
          QuantumModel m;
          std::string err;
          if (!model_by_id(id, &m, &err)) throw CliError{kExitUsage, err};
          std::string witness;
          bool ok = oracle_check(od, m, &witness);
          all_ok = all_ok && ok;
          if (as_json) {
            json j{{"diagram", diagram_name(f)}, {"model", id}, {"ok", ok}};
            if (!ok) j["witness"] = witness;
            results.push_back(j);
          } else {
            std::cout << diagram_name(f) << " " << id << ": "
                      << (ok ? "OK" : "MISMATCH " + witness) << "\n";
          }
        }
      }
      if (as_json) std::cout << results.dump(2) << "\n";
      return all_ok ? kExitOk : kExitConsistency;
    }

    if (c_moves->parsed()) {
      OrientedDiagram od = orient_diagram(load_diagram(file), flips);
      std::mt19937_64 rng(seed);
      RandomWalkOptions opt;
      opt.steps = steps;
      OrientedDiagram out = random_equivalent(od, rng, opt);
      if (as_json) {
        json j{{"diagram", diagram_name(file)},
               {"steps", steps},
               {"seed", seed},
               {"events", (int)out.d.events.size()},
               {"morse", print_morse(out.d)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << print_morse(out.d);
      }
      return kExitOk;
    }

    if (c_batch->parsed()) {
      std::vector<std::filesystem::path> paths;
      std::error_code ec;
      for (const auto& ent :
           std::filesystem::directory_iterator(batch_dir, ec)) {
        if (ent.path().extension() == ".morse") paths.push_back(ent.path());
      }
      if (ec) throw CliError{kExitUsage, batch_dir + ": " + ec.message()};
      std::sort(paths.begin(), paths.end());
      json results = json::array();
      int rc = kExitOk;
      for (const auto& p : paths) {
        try {
          OrientedDiagram od = orient_diagram(load_diagram(p.string()), {});
          ModelOutput mo = compute_model(od, batch_model);
          if (as_json) {
            results.push_back(schema_json(p.stem().string(), batch_model, mo, od));
          } else {
            std::cout << p.stem().string() << ": "
                      << (mo.scalar ? mo.scalar->str() : mo.matrix.str())
                      << "\n";
          }
        } catch (const CliError& e) {
          if (e.code == kExitUsage) throw;  // bad model id: stop immediately
          std::cerr << e.message << "\n";
          rc = std::max(rc, e.code);
        }
      }
      if (as_json) std::cout << results.dump(2) << "\n";
      return rc;
    }

    // Remaining commands compute one invariant of one file.
    std::string cmd_model;
    if (c_bracket->parsed()) cmd_model = "bracket";
    else if (c_binary->parsed()) cmd_model = "binary";
    else if (c_alex->parsed()) cmd_model = "alexander";
    else if (c_saw->parsed()) cmd_model = "sawollek";
    else if (c_hom->parsed()) cmd_model = "homflypt:" + std::to_string(homn);
    else if (c_rotbracket->parsed()) cmd_model = "rotbracket";

    OrientedDiagram od = orient_diagram(load_diagram(file), flips);

    if (cmd_model == "rotbracket") {
      LaurentPoly v = rotational_bracket(od.d);
      if (as_json) {
        ModelOutput mo;
        mo.matrix.at(0, 0) = v;
        mo.scalar = v;
        std::cout << schema_json(diagram_name(file), cmd_model, mo, od).dump(2)
                  << "\n";
      } else {
        std::cout << v.str() << "\n";
      }
      return kExitOk;
    }

    ModelOutput mo = compute_model(od, cmd_model, normalized);
    if (as_json) {
      std::cout << schema_json(diagram_name(file), cmd_model, mo, od).dump(2)
                << "\n";
      return kExitOk;
    }
    if (cmd_model == "bracket") {
      print_matrix(mo.matrix);
    } else if (cmd_model == "binary") {
      std::cout << mo.scalar->str() << "\n";
    } else if (cmd_model == "alexander") {
      auto r = alexander_invariant(od);
      std::cout << "tilde:\n";
      print_matrix(r.tilde);
      std::cout << "normalized:\n";
      print_matrix(r.normalized);
      std::cout << "scalar: " << r.scalar.str() << "\n";
      std::cout << "rotation: " << rot_string(r.rot2) << "\n";
    } else if (cmd_model == "sawollek") {
      auto r = sawollek_invariant(od);
      std::cout << "w:\n";
      print_matrix(r.w);
      std::cout << "trace: " << r.scalar.str() << "\n";
    } else {  // homflypt
      auto r = homflypt_invariant(od, homn);
      std::cout << "raw:\n";
      print_matrix(r.raw);
      std::cout << "normalized:\n";
      print_matrix(r.normalized);
      std::cout << "numerator: " << r.numerator.str() << "\n";
      if (r.scalar)
        std::cout << "scalar: " << r.scalar->str() << "\n";
      std::cout << "writhe: " << r.writhe << "\n";
    }
    return kExitOk;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const EngineLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConsistency;
  }
}
