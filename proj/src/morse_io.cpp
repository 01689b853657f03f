#include "knotoid/morse_io.hpp"

#include <fstream>
#include <sstream>

namespace knotoid {

const char* kind_token(EventKind k) {
  switch (k) {
    case EventKind::Leg:
      return "leg";
    case EventKind::Head:
      return "head";
    case EventKind::LegDown:
      return "legd";
    case EventKind::HeadDown:
      return "headd";
    case EventKind::Cup:
      return "cup";
    case EventKind::Cap:
      return "cap";
    case EventKind::CrossPos:
      return "xp";
    case EventKind::CrossNeg:
      return "xn";
  }
  return "?";
}

namespace {

bool kind_from_token(const std::string& tok, EventKind* out) {
  static const std::pair<const char*, EventKind> table[] = {
      {"leg", EventKind::Leg},       {"head", EventKind::Head},
      {"legd", EventKind::LegDown},  {"headd", EventKind::HeadDown},
      {"cup", EventKind::Cup},       {"cap", EventKind::Cap},
      {"xp", EventKind::CrossPos},   {"xn", EventKind::CrossNeg},
  };
  for (const auto& [name, kind] : table) {
    if (tok == name) {
      *out = kind;
      return true;
    }
  }
  return false;
}

}  // namespace

bool parse_morse(const std::string& text, MorseDiagram* out, std::string* err) {
  MorseDiagram d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // '/' and ';' separate events within a line, for compact one-line words
    for (char& ch : line)
      if (ch == '/' || ch == ';') ch = '\n';
    std::istringstream parts(line);
    std::string part;
    while (std::getline(parts, part)) {
      std::istringstream ls(part);
      std::string tok;
      if (!(ls >> tok)) continue;
      EventKind kind;
      if (!kind_from_token(tok, &kind)) {
        if (err) *err = "line " + std::to_string(lineno) + ": unknown event '" + tok + "'";
        return false;
      }
      int pos;
      if (!(ls >> pos)) {
        if (err) *err = "line " + std::to_string(lineno) + ": missing position";
        return false;
      }
      std::string trail;
      if (ls >> trail) {
        if (err) *err = "line " + std::to_string(lineno) + ": trailing '" + trail + "'";
        return false;
      }
      d.events.push_back({kind, pos});
    }
  }
  *out = d;
  return true;
}

std::string print_morse(const MorseDiagram& d) {
  std::string s;
  for (const auto& ev : d.events) {
    s += kind_token(ev.kind);
    s += ' ';
    s += std::to_string(ev.pos);
    s += '\n';
  }
  return s;
}

bool load_morse_file(const std::string& path, MorseDiagram* out, std::string* err) {
  std::ifstream f(path);
  if (!f) {
    if (err) *err = "cannot open " + path;
    return false;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_morse(ss.str(), out, err);
}

}  // namespace knotoid
