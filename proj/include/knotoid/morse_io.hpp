#pragma once
// Text format for Morse diagrams: one event per line, bottom to top.
//
//   leg P | legd P | head P | headd P | cup P | cap P | xp P | xn P
//
// P is the 0-based strand position.  '#' starts a comment; blank lines are
// ignored; '/' or ';' separate events within one line for compact words.
// legd/headd are the down-pointing endpoint variants.

#include <string>

#include "knotoid/diagram.hpp"

namespace knotoid {

bool parse_morse(const std::string& text, MorseDiagram* out, std::string* err);
std::string print_morse(const MorseDiagram& d);
bool load_morse_file(const std::string& path, MorseDiagram* out, std::string* err);

const char* kind_token(EventKind k);

}  // namespace knotoid
